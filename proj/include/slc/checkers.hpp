#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slc/calculus.hpp"
#include "slc/subset_poly.hpp"
#include "slc/sym_matrix.hpp"

namespace slc {

// ---------------------------------------------------------------------------
// Certificates and witnesses
// ---------------------------------------------------------------------------

/// The NLC enumeration visited every ordered pair and found no violation.
struct ExhaustiveEnumeration {
    std::uint64_t pairs_checked = 0;
};

/// Log-concavity that needs no computation: log of a zero polynomial,
/// constant or single monomial is affine (or the zero convention applies);
/// log of a positive affine form is concave since M = grad grad^T.
enum class TrivialKind { Zero, Constant, Monomial, Affine };

struct TrivialCertificate {
    TrivialKind kind;
};

/// Symbolic proof of strict diagonal dominance of M on the open positive
/// orthant: each gap D_i = M_ii - sum_{j != i} abs_bound(M_ij) has
/// nonnegative coefficients with at least one positive.
struct DominanceCertificate {
    SymMatrixS m;
    std::vector<SparsePoly> gaps;
};

using Certificate = std::variant<ExhaustiveEnumeration, TrivialCertificate, DominanceCertificate>;

/// p(S) p(T) < p(S|T) p(S&T).
struct NlcWitness {
    Mask s = 0;
    Mask t = 0;
    Rational lhs;
    Rational rhs;
};

/// The log-Hessian of the derivative in `derivative_subset` has a positive
/// eigenvalue above tolerance at `point`.
struct PointWitness {
    Mask derivative_subset = 0;
    PositivePoint point;
    double max_eigenvalue = 0.0;
};

using Witness = std::variant<NlcWitness, PointWitness>;

struct SearchStats {
    std::uint64_t points_tested = 0;
    std::uint64_t derivatives_tested = 0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
};

struct Holds {
    Certificate certificate;
};
struct Violated {
    Witness witness;
};
struct NoViolationFound {
    SearchStats stats;
};

using Verdict = std::variant<Holds, Violated, NoViolationFound>;

enum class VerdictKind { Holds, Violated, NoViolationFound };

VerdictKind kind_of(const Verdict& v);
const char* to_string(VerdictKind k);
const char* to_string(TrivialKind k);

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// Exhaustive exact negative lattice condition check over all 4^n ordered
/// pairs. Returns the violation with the smallest (S, T) in bitmask order.
/// Throws std::invalid_argument on negative coefficients.
Verdict check_nlc(const SubsetPoly& p);

/// Every violating ordered pair, in (S, T) bitmask order.
std::vector<NlcWitness> nlc_violations(const SubsetPoly& p);

struct SampleConfig {
    std::uint64_t points = 2000;
    double lo = 0.01;
    double hi = 100.0;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
};

/// The fixed grid {0.1, 0.5, 1, 2, 10}^n for n <= 6; the five diagonal
/// points beyond that.
std::vector<std::vector<double>> deterministic_grid(int n);

/// Pointwise log-concavity search: the deterministic grid, then cfg.points
/// log-uniform points in [lo, hi]^n. Never returns Holds except for the
/// trivial classes, which short-circuit.
Verdict check_log_concavity_sampled(const SubsetPoly& p, const SampleConfig& cfg);

/// Trivial log-concavity classification, if p falls in one.
std::optional<TrivialKind> trivial_log_concavity(const SubsetPoly& p);

/// Diagonal-dominance certificate for M = symbolic_M(p), if one exists.
std::optional<DominanceCertificate> certify_log_concavity_dominance(const SubsetPoly& p);

/// Single-polynomial log-concavity: trivial class, then dominance
/// certificate, then sampling.
Verdict check_log_concavity(const SubsetPoly& p, const SampleConfig& cfg);

struct SlcReport {
    std::vector<std::pair<Mask, Verdict>> per_subset;  // ascending by mask
    VerdictKind aggregate = VerdictKind::Holds;

    std::size_t violations() const;
};

/// Strong log-concavity over every square-free derivative subset. Each
/// subset gets its own sampling stream derived from (cfg.seed, subset).
SlcReport check_slc(const SubsetPoly& p, const SampleConfig& cfg);

/// Seed of the sampling stream for derivative subset `a`.
std::uint64_t subset_seed(std::uint64_t seed, Mask a);

/// Re-checks a witness against p from scratch; true iff it still demonstrates
/// a violation.
bool verify_witness(const SubsetPoly& p, const Witness& w, double tolerance);

}  // namespace slc
