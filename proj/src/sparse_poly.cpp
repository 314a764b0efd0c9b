#include "slc/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace slc {

std::string variable_name(int n, int i) {
    if (n <= 3) return std::string(1, "xyz"[i - 1]);
    return "x" + std::to_string(i);
}

SparsePoly SparsePoly::constant(int n, const Rational& c) {
    SparsePoly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    SparsePoly p(n);
    Exponent e(n, 0);
    e[i - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Rational SparsePoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational{} : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePoly::check_same_n(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("sparse polynomial dimension mismatch");
}

double SparsePoly::eval(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("dimension mismatch in eval");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (int v = 0; v < n_; ++v)
            for (int k = 0; k < e[v]; ++k) term *= x[v];
        total += term;
    }
    return total;
}

Rational SparsePoly::eval_exact(std::span<const Rational> x) const {
    if (x.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("dimension mismatch in eval");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < n_; ++v)
            for (int k = 0; k < e[v]; ++k) term *= x[v];
        total += term;
    }
    return total;
}

SparsePoly SparsePoly::abs_bound() const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.abs());
    return out;
}

bool SparsePoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c.sign() < 0) return false;
    return true;
}

bool SparsePoly::any_coeff_positive() const {
    for (const auto& [e, c] : terms_)
        if (c.sign() > 0) return true;
    return false;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest total degree first, then lexicographically larger exponents.
    std::vector<std::pair<const Exponent*, const Rational*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
    auto degree = [](const Exponent& e) {
        int d = 0;
        for (auto k : e) d += k;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const int da = degree(*a.first), db = degree(*b.first);
        if (da != db) return da > db;
        return *a.first > *b.first;
    });
    bool first = true;
    for (const auto& [e, c] : order) {
        const bool negative = c->sign() < 0;
        const Rational mag = c->abs();
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        for (int v = 0; v < n_; ++v) {
            if ((*e)[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += variable_name(n_, v + 1);
            if ((*e)[v] > 1) mono += "^" + std::to_string((*e)[v]);
        }
        if (mono.empty()) out += mag.str();
        else if (mag == Rational(1)) out += mono;
        else out += (mag.denominator() == 1 ? mag.str() : "(" + mag.str() + ")") + "*" + mono;
    }
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_same_n(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_same_n(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same_n(b);
    SparsePoly out(a.n_);
    SparsePoly::Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.n_; ++v) {
                const int k = ea[v] + eb[v];
                if (k > 255) throw std::overflow_error("exponent overflow in sparse product");
                e[v] = static_cast<std::uint8_t>(k);
            }
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }
SparsePoly sparse_sub(const SparsePoly& a, const SparsePoly& b) { return a - b; }

SparsePoly sparse_from_subset(const SubsetPoly& p) {
    SparsePoly out(p.n());
    SparsePoly::Exponent e(p.n());
    for (Mask s = 0; s < p.size(); ++s) {
        if (p.coeff(s).is_zero()) continue;
        for (int v = 0; v < p.n(); ++v) e[v] = (s >> v) & 1u;
        out.add_term(e, p.coeff(s));
    }
    return out;
}

}  // namespace slc
