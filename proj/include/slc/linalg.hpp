#pragma once

#include <vector>

#include "slc/sym_matrix.hpp"

namespace slc {

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Throws std::invalid_argument if m is not symmetric within 1e-12.
EigenResult eigen_sym(const SymMatrixF& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n, exact.
std::vector<Rational> leading_principal_minors(const SymMatrixQ& m);

/// Sylvester's criterion: every leading principal minor > 0.
bool is_pd_exact(const SymMatrixQ& m);

/// m_ii > sum_{j != i} |m_ij| for every row. Together with a positive
/// diagonal this implies positive definiteness (Gershgorin).
bool is_strictly_diag_dominant(const SymMatrixQ& m);

/// Tolerance test for negative semidefiniteness of a float matrix:
/// max eigenvalue <= rel_tol * (1 + max |m_ij|).
double nsd_threshold(const SymMatrixF& m, double rel_tol);

}  // namespace slc
