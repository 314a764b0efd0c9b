#pragma once

#include <span>
#include <utility>
#include <vector>

#include "slc/subset_poly.hpp"
#include "slc/sym_matrix.hpp"

namespace slc {

/// Floating-point evaluation form of a SubsetPoly for repeated
/// gradient/log-Hessian evaluation. Coefficients are first divided exactly
/// by the largest coefficient magnitude, so p and lambda*p compile to
/// bit-identical forms and every float result is invariant under scaling.
class CompiledPoly {
public:
    explicit CompiledPoly(const SubsetPoly& p);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }

    /// Value of the normalized polynomial (p / max|coeff|).
    double value(std::span<const double> x) const;

    /// Hessian of log p at x. Throws std::domain_error if p(x) <= 0.
    SymMatrixF log_hessian(std::span<const double> x) const;

private:
    int n_;
    std::vector<std::pair<Mask, double>> terms_;
};

/// i-th entry is the partial derivative of p in variable i+1 at x.
std::vector<double> gradient(const SubsetPoly& p, std::span<const double> x);
inline std::vector<double> gradient(const SubsetPoly& p, const PositivePoint& x) { return gradient(p, x.coords()); }

/// (g * hess g - grad g grad g^T) / g^2 at x. Precondition g(x) > 0,
/// otherwise std::domain_error.
SymMatrixF log_hessian(const SubsetPoly& p, std::span<const double> x);
inline SymMatrixF log_hessian(const SubsetPoly& p, const PositivePoint& x) { return log_hessian(p, x.coords()); }

/// Symbolic M = grad g grad g^T - g * hess g with exact polynomial entries.
/// M(x) is positive semidefinite exactly where log g is concave (g(x) > 0),
/// and M(x) / g(x)^2 = -log_hessian(g, x).
SymMatrixS symbolic_M(const SubsetPoly& p);

}  // namespace slc
