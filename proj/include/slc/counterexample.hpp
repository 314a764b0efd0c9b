#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slc/checkers.hpp"
#include "slc/sym_matrix.hpp"

namespace slc {

/// (4 + 3(x+y+z) + 3(xy+xz+yz)) / 22: strongly log-concave but not
/// log-submodular.
SubsetPoly counterexample_polynomial();

/// The hand-derived matrix R(x, y, z) with
///   r_ii = 3(1 + sum of the other two variables)^2,
///   r_ij = 3w^2 + 3w - 1 where w is the variable other than i and j.
SymMatrixS reference_R();

/// kappa > 0 with a == kappa * b entry-for-entry, if one exists.
std::optional<Rational> positive_multiple(const SymMatrixS& a, const SymMatrixS& b);

/// -(y+z+1)^2 * log_hessian(d/dx g, (1, y, z)) for the counterexample; equals
/// [[0,0,0],[0,1,1],[0,1,1]].
SymMatrixF scaled_first_derivative_log_hessian(double y, double z);

struct ReproCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct ReproReport {
    std::vector<ReproCheck> checks;
    std::optional<NlcWitness> nlc_witness;
    std::optional<Rational> kappa;               // symbolic_M = kappa * R
    std::vector<SparsePoly> dominance_gaps;
    std::vector<double> w_eigenvalues;           // at (1, 1, 1)
    SlcReport slc;

    bool ok() const;
    std::string text() const;
};

/// Re-derives both halves of the counterexample: the exact lattice
/// violation, the dominance certificate and its relation to R, the
/// first-derivative eigenvalues, and a full SLC check.
ReproReport reproduce_counterexample(const SampleConfig& cfg = {});

}  // namespace slc
