#include "slc/calculus.hpp"

#include <stdexcept>
#include <string>

namespace slc {

CompiledPoly::CompiledPoly(const SubsetPoly& p) : n_(p.n()) {
    Rational max_abs;
    for (const auto& c : p.coeffs())
        if (c.abs() > max_abs) max_abs = c.abs();
    if (max_abs.is_zero()) return;
    for (Mask s = 0; s < p.size(); ++s)
        if (!p.coeff(s).is_zero()) terms_.emplace_back(s, (p.coeff(s) / max_abs).to_double());
}

double CompiledPoly::value(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("dimension mismatch");
    double g = 0.0;
    for (const auto& [s, c] : terms_) {
        double m = c;
        for (int v = 0; v < n_; ++v)
            if (s & (Mask{1} << v)) m *= x[v];
        g += m;
    }
    return g;
}

SymMatrixF CompiledPoly::log_hessian(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("dimension mismatch");
    const auto n = static_cast<std::size_t>(n_);
    double g = 0.0;
    std::vector<double> grad(n, 0.0);
    SymMatrixF hess(n);  // upper triangle only
    int idx[kMaxVariables];
    for (const auto& [s, c] : terms_) {
        double m = c;
        int k = 0;
        for (int v = 0; v < n_; ++v)
            if (s & (Mask{1} << v)) {
                m *= x[v];
                idx[k++] = v;
            }
        g += m;
        for (int a = 0; a < k; ++a) {
            const int va = idx[a];
            double d = c;
            for (int b = 0; b < k; ++b)
                if (b != a) d *= x[idx[b]];
            grad[va] += d;
            for (int b = a + 1; b < k; ++b) {
                const int vb = idx[b];
                double h = c;
                for (int t = 0; t < k; ++t)
                    if (t != a && t != b) h *= x[idx[t]];
                hess(va, vb) += h;
            }
        }
    }
    if (!(g > 0.0)) throw std::domain_error("log-Hessian needs g(x) > 0");

    SymMatrixF out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = grad[i] / g;
        out(i, i) = -gi * gi;
        for (std::size_t j = i + 1; j < n; ++j) {
            out.set_sym(i, j, hess(i, j) / g - gi * (grad[j] / g));
        }
    }
    return out;
}

std::vector<double> gradient(const SubsetPoly& p, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(p.n())) throw std::invalid_argument("dimension mismatch in gradient");
    std::vector<double> out(p.n());
    for (int i = 1; i <= p.n(); ++i) out[i - 1] = eval(derivative(p, i), x);
    return out;
}

SymMatrixF log_hessian(const SubsetPoly& p, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(p.n())) throw std::invalid_argument("dimension mismatch in log_hessian");
    return CompiledPoly(p).log_hessian(x);
}

SymMatrixS symbolic_M(const SubsetPoly& p) {
    const int n = p.n();
    const SparsePoly g = sparse_from_subset(p);
    std::vector<SparsePoly> d;
    d.reserve(n);
    for (int i = 1; i <= n; ++i) d.push_back(sparse_from_subset(derivative(p, i)));

    SymMatrixS m(n, SparsePoly(n));
    for (int i = 0; i < n; ++i) {
        m(i, i) = d[i] * d[i];
        for (int j = i + 1; j < n; ++j) {
            const SparsePoly dij = sparse_from_subset(derivative_subset(p, var_bit(i + 1) | var_bit(j + 1)));
            m.set_sym(i, j, d[i] * d[j] - g * dij);
        }
    }
    return m;
}

}  // namespace slc
