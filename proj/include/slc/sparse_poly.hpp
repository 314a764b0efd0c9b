#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slc/rational.hpp"
#include "slc/subset_poly.hpp"

namespace slc {

/// Sparse multivariate polynomial with exact coefficients. Carries the
/// entries of symbolic Hessian-type matrices, so exponents stay small.
class SparsePoly {
public:
    using Exponent = std::vector<std::uint8_t>;

    explicit SparsePoly(int n = 0) : n_(n) {}

    static SparsePoly constant(int n, const Rational& c);
    /// The polynomial x_i (1-based).
    static SparsePoly variable(int n, int i);

    int n() const { return n_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of the given monomial (zero if absent).
    Rational coeff(const Exponent& e) const;

    /// Adds c * x^e, dropping the term if it cancels to zero.
    void add_term(const Exponent& e, const Rational& c);

    double eval(std::span<const double> x) const;
    Rational eval_exact(std::span<const Rational> x) const;

    /// Every coefficient replaced by its absolute value. On the positive
    /// orthant this dominates |p(x)| pointwise.
    SparsePoly abs_bound() const;
    bool all_coeffs_nonnegative() const;
    bool any_coeff_positive() const;

    /// Human-readable form, e.g. "3*z^2 + 3*z - 1". Variables are x,y,z for
    /// n <= 3 and x1..xn otherwise.
    std::string str() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    void check_same_n(const SparsePoly& o) const;

    int n_;
    std::map<Exponent, Rational> terms_;
};

SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b);
SparsePoly sparse_sub(const SparsePoly& a, const SparsePoly& b);
SparsePoly sparse_from_subset(const SubsetPoly& p);

std::string variable_name(int n, int i);

}  // namespace slc
