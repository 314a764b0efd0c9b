#include "slc/checkers.hpp"

#include <cmath>
#include <stdexcept>

#include "slc/linalg.hpp"
#include "slc/rng.hpp"

namespace slc {

VerdictKind kind_of(const Verdict& v) {
    if (std::holds_alternative<Holds>(v)) return VerdictKind::Holds;
    if (std::holds_alternative<Violated>(v)) return VerdictKind::Violated;
    return VerdictKind::NoViolationFound;
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Holds: return "holds";
        case VerdictKind::Violated: return "violated";
        case VerdictKind::NoViolationFound: return "no-violation-found";
    }
    return "?";
}

const char* to_string(TrivialKind k) {
    switch (k) {
        case TrivialKind::Zero: return "zero polynomial";
        case TrivialKind::Constant: return "constant";
        case TrivialKind::Monomial: return "single monomial";
        case TrivialKind::Affine: return "affine form with nonnegative coefficients";
    }
    return "?";
}

namespace {

void require_nonnegative(const SubsetPoly& p, const char* what) {
    if (!p.has_nonnegative_coeffs())
        throw std::invalid_argument(std::string(what) + ": coefficients must be nonnegative");
}

// Coefficients scaled by the lcm of their denominators; the lattice
// inequality is homogeneous of degree 2, so comparisons are unchanged.
std::vector<mpz_class> integer_weights(const SubsetPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    std::vector<mpz_class> w;
    w.reserve(p.size());
    for (const auto& c : p.coeffs()) w.push_back(c.raw().get_num() * (l / c.raw().get_den()));
    return w;
}

template <typename OnViolation>
std::uint64_t enumerate_nlc(const SubsetPoly& p, OnViolation&& on_violation) {
    require_nonnegative(p, "check_nlc");
    const auto w = integer_weights(p);
    const Mask count = static_cast<Mask>(p.size());
    mpz_class lhs, rhs;
    std::uint64_t pairs = 0;
    for (Mask s = 0; s < count; ++s) {
        for (Mask t = 0; t < count; ++t) {
            ++pairs;
            // Comparable pairs give equality.
            if ((s & t) == s || (s & t) == t) continue;
            if (w[s] == 0 && w[s | t] == 0) continue;
            lhs = w[s] * w[t];
            rhs = w[s | t] * w[s & t];
            if (lhs < rhs) {
                NlcWitness wit{s, t, p.coeff(s) * p.coeff(t), p.coeff(s | t) * p.coeff(s & t)};
                if (!on_violation(std::move(wit))) return pairs;
            }
        }
    }
    return pairs;
}

}  // namespace

Verdict check_nlc(const SubsetPoly& p) {
    std::optional<NlcWitness> first;
    const std::uint64_t pairs = enumerate_nlc(p, [&](NlcWitness w) {
        first = std::move(w);
        return false;
    });
    if (first) {
        Witness w = *first;
        if (!verify_witness(p, w, 0.0)) throw std::logic_error("NLC witness failed re-verification");
        return Violated{std::move(w)};
    }
    return Holds{ExhaustiveEnumeration{pairs}};
}

std::vector<NlcWitness> nlc_violations(const SubsetPoly& p) {
    std::vector<NlcWitness> out;
    enumerate_nlc(p, [&](NlcWitness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

std::vector<std::vector<double>> deterministic_grid(int n) {
    static constexpr double kGrid[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    std::vector<std::vector<double>> out;
    if (n > 6) {
        for (double v : kGrid) out.emplace_back(n, v);
        return out;
    }
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<double> x(n);
        std::size_t r = k;
        for (int i = 0; i < n; ++i, r /= 5) x[i] = kGrid[r % 5];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<TrivialKind> trivial_log_concavity(const SubsetPoly& p) {
    if (p.is_zero()) return TrivialKind::Zero;
    if (p.is_constant()) return TrivialKind::Constant;
    if (p.is_monomial()) return TrivialKind::Monomial;
    if (p.is_affine() && p.has_nonnegative_coeffs()) return TrivialKind::Affine;
    return std::nullopt;
}

Verdict check_log_concavity_sampled(const SubsetPoly& p, const SampleConfig& cfg) {
    require_nonnegative(p, "check_log_concavity_sampled");
    if (!(cfg.lo > 0.0) || !(cfg.hi >= cfg.lo) || !std::isfinite(cfg.hi))
        throw std::invalid_argument("sampling box must satisfy 0 < lo <= hi < inf");
    if (auto kind = trivial_log_concavity(p)) return Holds{TrivialCertificate{*kind}};

    const CompiledPoly compiled(p);
    SearchStats stats{0, 1, cfg.tolerance, cfg.seed};

    auto test = [&](const std::vector<double>& x) -> std::optional<Violated> {
        ++stats.points_tested;
        const SymMatrixF h = compiled.log_hessian(x);
        const double top = eigen_sym(h).max();
        if (top <= nsd_threshold(h, cfg.tolerance)) return std::nullopt;
        Witness w = PointWitness{0, PositivePoint(x), top};
        if (!verify_witness(p, w, cfg.tolerance)) throw std::logic_error("point witness failed re-verification");
        return Violated{std::move(w)};
    };

    for (const auto& x : deterministic_grid(p.n()))
        if (auto v = test(x)) return *v;

    LogUniformSampler sampler(cfg.seed, cfg.lo, cfg.hi);
    std::vector<double> x(p.n());
    for (std::uint64_t k = 0; k < cfg.points; ++k) {
        for (auto& xi : x) xi = sampler.next();
        if (auto v = test(x)) return *v;
    }
    return NoViolationFound{stats};
}

std::optional<DominanceCertificate> certify_log_concavity_dominance(const SubsetPoly& p) {
    require_nonnegative(p, "certify_log_concavity_dominance");
    if (p.is_zero()) return std::nullopt;
    SymMatrixS m = symbolic_M(p);
    const std::size_t n = m.size();
    std::vector<SparsePoly> gaps;
    gaps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i).all_coeffs_nonnegative()) return std::nullopt;
        SparsePoly gap = m(i, i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) gap -= m(i, j).abs_bound();
        if (!gap.all_coeffs_nonnegative() || !gap.any_coeff_positive()) return std::nullopt;
        gaps.push_back(std::move(gap));
    }
    return DominanceCertificate{std::move(m), std::move(gaps)};
}

Verdict check_log_concavity(const SubsetPoly& p, const SampleConfig& cfg) {
    require_nonnegative(p, "check_log_concavity");
    if (auto kind = trivial_log_concavity(p)) return Holds{TrivialCertificate{*kind}};
    if (auto cert = certify_log_concavity_dominance(p)) return Holds{std::move(*cert)};
    return check_log_concavity_sampled(p, cfg);
}

std::uint64_t subset_seed(std::uint64_t seed, Mask a) { return derive_seed(seed, 0x534c43ULL, a); }

std::size_t SlcReport::violations() const {
    std::size_t k = 0;
    for (const auto& [a, v] : per_subset)
        if (kind_of(v) == VerdictKind::Violated) ++k;
    return k;
}

SlcReport check_slc(const SubsetPoly& p, const SampleConfig& cfg) {
    require_nonnegative(p, "check_slc");
    SlcReport report;
    bool all_hold = true;
    for (Mask a = 0; a < p.size(); ++a) {
        SampleConfig sub = cfg;
        sub.seed = subset_seed(cfg.seed, a);
        Verdict v = check_log_concavity(derivative_subset(p, a), sub);
        if (auto* viol = std::get_if<Violated>(&v)) {
            if (auto* pw = std::get_if<PointWitness>(&viol->witness)) pw->derivative_subset = a;
            report.aggregate = VerdictKind::Violated;
        }
        if (kind_of(v) != VerdictKind::Holds) all_hold = false;
        report.per_subset.emplace_back(a, std::move(v));
    }
    if (report.aggregate != VerdictKind::Violated)
        report.aggregate = all_hold ? VerdictKind::Holds : VerdictKind::NoViolationFound;
    return report;
}

bool verify_witness(const SubsetPoly& p, const Witness& w, double tolerance) {
    if (const auto* nw = std::get_if<NlcWitness>(&w)) {
        if (nw->s >= p.size() || nw->t >= p.size()) return false;
        const Rational lhs = p.coeff(nw->s) * p.coeff(nw->t);
        const Rational rhs = p.coeff(nw->s | nw->t) * p.coeff(nw->s & nw->t);
        return lhs == nw->lhs && rhs == nw->rhs && lhs < rhs;
    }
    const auto& pw = std::get<PointWitness>(w);
    if (pw.derivative_subset >= p.size() || pw.point.size() != static_cast<std::size_t>(p.n())) return false;
    const SubsetPoly q = derivative_subset(p, pw.derivative_subset);
    if (eval(q, pw.point) <= 0.0) return false;
    const SymMatrixF h = log_hessian(q, pw.point);
    const double top = eigen_sym(h).max();
    return top > nsd_threshold(h, tolerance);
}

}  // namespace slc
