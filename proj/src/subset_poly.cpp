#include "slc/subset_poly.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace slc {

std::string subset_str(Mask s) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; s != 0; ++i, s >>= 1) {
        if ((s & 1u) == 0) continue;
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

PositivePoint::PositivePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double c : coords_)
        if (!std::isfinite(c) || !(c > 0.0))
            throw std::invalid_argument("point is not in the open positive orthant");
}

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxVariables)
        throw std::invalid_argument("variable count must be in 1.." + std::to_string(kMaxVariables) +
                                    ", got " + std::to_string(n));
}

}  // namespace

SubsetPoly::SubsetPoly(int n) : n_(n) {
    check_n(n);
    coeffs_.assign(std::size_t{1} << n, Rational{});
}

SubsetPoly::SubsetPoly(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    check_n(n);
    if (coeffs_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("coefficient array must have 2^n entries");
}

SubsetPoly::SubsetPoly(int n, std::initializer_list<std::pair<Mask, Rational>> terms) : SubsetPoly(n) {
    for (const auto& [s, c] : terms) {
        if (s >= coeffs_.size()) throw std::invalid_argument("subset outside the ground set");
        coeffs_[s] += c;
    }
}

bool SubsetPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool SubsetPoly::is_constant() const {
    for (std::size_t s = 1; s < coeffs_.size(); ++s)
        if (!coeffs_[s].is_zero()) return false;
    return true;
}

bool SubsetPoly::is_monomial() const {
    int nonzero = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero() && ++nonzero > 1) return false;
    return nonzero == 1;
}

bool SubsetPoly::is_affine() const {
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
        if (std::popcount(s) > 1 && !coeffs_[s].is_zero()) return false;
    return true;
}

bool SubsetPoly::has_nonnegative_coeffs() const {
    for (const auto& c : coeffs_)
        if (c.sign() < 0) return false;
    return true;
}

bool SubsetPoly::is_distribution() const { return has_nonnegative_coeffs() && coeff_sum() == Rational(1); }

Rational SubsetPoly::coeff_sum() const {
    Rational sum;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

Mask permute_mask(Mask s, std::span<const int> perm) {
    Mask out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (s & (Mask{1} << i)) out |= var_bit(perm[i]);
    return out;
}

SubsetPoly SubsetPoly::permuted(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation size mismatch");
    Mask seen = 0;
    for (int v : perm) {
        if (v < 1 || v > n_ || (seen & var_bit(v))) throw std::invalid_argument("not a permutation");
        seen |= var_bit(v);
    }
    SubsetPoly out(n_);
    for (Mask s = 0; s < coeffs_.size(); ++s) out.coeffs_[permute_mask(s, perm)] = coeffs_[s];
    return out;
}

double eval(const SubsetPoly& p, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(p.n())) throw std::invalid_argument("dimension mismatch in eval");
    double total = 0.0;
    for (Mask s = 0; s < p.size(); ++s) {
        const Rational& c = p.coeff(s);
        if (c.is_zero()) continue;
        double term = c.to_double();
        for (int v = 0; v < p.n(); ++v)
            if (s & (Mask{1} << v)) term *= x[v];
        total += term;
    }
    return total;
}

Rational eval_exact(const SubsetPoly& p, std::span<const Rational> x) {
    if (x.size() != static_cast<std::size_t>(p.n())) throw std::invalid_argument("dimension mismatch in eval");
    Rational total;
    for (Mask s = 0; s < p.size(); ++s) {
        const Rational& c = p.coeff(s);
        if (c.is_zero()) continue;
        Rational term = c;
        for (int v = 0; v < p.n(); ++v)
            if (s & (Mask{1} << v)) term *= x[v];
        total += term;
    }
    return total;
}

SubsetPoly derivative(const SubsetPoly& p, int i) {
    if (i < 1 || i > p.n())
        throw std::out_of_range("derivative index " + std::to_string(i) + " outside 1.." + std::to_string(p.n()));
    return derivative_subset(p, var_bit(i));
}

SubsetPoly derivative_subset(const SubsetPoly& p, Mask a) {
    if (a >= p.size()) throw std::out_of_range("derivative subset outside the ground set");
    std::vector<Rational> q(p.size());
    for (Mask s = 0; s < p.size(); ++s)
        if ((s & a) == 0) q[s] = p.coeff(s | a);
    return SubsetPoly(p.n(), std::move(q));
}

SubsetPoly scale(const SubsetPoly& p, const Rational& lambda) {
    if (lambda.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<Rational> q = p.coeffs();
    for (auto& c : q) c *= lambda;
    return SubsetPoly(p.n(), std::move(q));
}

SubsetPoly normalize(const SubsetPoly& p) {
    const Rational sum = p.coeff_sum();
    if (sum.sign() <= 0) throw std::invalid_argument("cannot normalize: coefficient sum is not positive");
    return scale(p, Rational(1) / sum);
}

}  // namespace slc
