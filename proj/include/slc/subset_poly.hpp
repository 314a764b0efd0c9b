#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slc/rational.hpp"

namespace slc {

/// Subset of {1..n} encoded as a bitmask; variable i (1-based) is bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 16;

/// Bitmask with variable `i` (1-based) set.
constexpr Mask var_bit(int i) { return Mask{1} << (i - 1); }

/// "{1,3}" style rendering of a subset.
std::string subset_str(Mask s);

/// Point of the open positive orthant: every coordinate finite and > 0.
class PositivePoint {
public:
    explicit PositivePoint(std::vector<double> coords);

    std::size_t size() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const { return coords_; }

    friend bool operator==(const PositivePoint&, const PositivePoint&) = default;

private:
    std::vector<double> coords_;
};

/// Multi-affine polynomial g(x) = sum_S p(S) x^S over n <= 16 variables,
/// stored as a dense array of 2^n exact coefficients indexed by bitmask.
/// Doubles as an (unnormalized) distribution over subsets.
class SubsetPoly {
public:
    /// Zero polynomial in n variables.
    explicit SubsetPoly(int n);
    SubsetPoly(int n, std::vector<Rational> coeffs);
    SubsetPoly(int n, std::initializer_list<std::pair<Mask, Rational>> terms);

    int n() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    const Rational& coeff(Mask s) const { return coeffs_.at(s); }
    void set_coeff(Mask s, Rational value) { coeffs_.at(s) = std::move(value); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Only the empty-set coefficient may be nonzero (includes the zero polynomial).
    bool is_constant() const;
    /// Exactly one nonzero coefficient.
    bool is_monomial() const;
    /// Every nonzero coefficient sits on a subset of size <= 1.
    bool is_affine() const;
    bool has_nonnegative_coeffs() const;
    /// Nonnegative coefficients summing to exactly 1.
    bool is_distribution() const;
    Rational coeff_sum() const;

    /// Polynomial with variables relabelled: variable i becomes perm[i-1] (1-based values).
    SubsetPoly permuted(std::span<const int> perm) const;

    friend bool operator==(const SubsetPoly&, const SubsetPoly&) = default;

private:
    int n_;
    std::vector<Rational> coeffs_;
};

/// Applies a 1-based variable permutation to a bitmask.
Mask permute_mask(Mask s, std::span<const int> perm);

/// sum_S p(S) prod_{v in S} x_v. Accepts any real point (not only positive ones).
double eval(const SubsetPoly& p, std::span<const double> x);
inline double eval(const SubsetPoly& p, const PositivePoint& x) { return eval(p, x.coords()); }

/// Exact evaluation at a rational point.
Rational eval_exact(const SubsetPoly& p, std::span<const Rational> x);

/// Partial derivative in variable i (1-based): q(S) = p(S + {i}) for i not in S, 0 otherwise.
SubsetPoly derivative(const SubsetPoly& p, int i);

/// Derivative in every variable of `a`: q(S) = p(S | a) for S disjoint from a.
SubsetPoly derivative_subset(const SubsetPoly& p, Mask a);

/// Coefficient-wise multiplication by lambda > 0.
SubsetPoly scale(const SubsetPoly& p, const Rational& lambda);

/// Divides by the coefficient sum so the coefficients add to exactly 1.
SubsetPoly normalize(const SubsetPoly& p);

}  // namespace slc
