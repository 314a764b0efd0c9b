#include "slc/counterexample.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "slc/linalg.hpp"
#include "slc/rng.hpp"

namespace slc {

SubsetPoly counterexample_polynomial() {
    SubsetPoly g(3);
    for (Mask s = 0; s < 8; ++s) {
        const int k = std::popcount(s);
        if (k == 0) g.set_coeff(s, Rational(4, 22));
        else if (k <= 2) g.set_coeff(s, Rational(3, 22));
    }
    return g;
}

SymMatrixS reference_R() {
    const int n = 3;
    const SparsePoly one = SparsePoly::constant(n, Rational(1));
    const SparsePoly three = SparsePoly::constant(n, Rational(3));
    const SparsePoly v[3] = {SparsePoly::variable(n, 1), SparsePoly::variable(n, 2), SparsePoly::variable(n, 3)};
    SymMatrixS r(n, SparsePoly(n));
    for (int i = 0; i < 3; ++i) {
        const SparsePoly s = one + v[(i + 1) % 3] + v[(i + 2) % 3];
        r(i, i) = three * s * s;
        for (int j = i + 1; j < 3; ++j) {
            const SparsePoly& w = v[3 - i - j];
            r.set_sym(i, j, three * w * w + three * w - one);
        }
    }
    return r;
}

std::optional<Rational> positive_multiple(const SymMatrixS& a, const SymMatrixS& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::optional<Rational> kappa;
    for (std::size_t i = 0; i < a.size() && !kappa; ++i)
        for (std::size_t j = 0; j < a.size() && !kappa; ++j) {
            const auto& terms = b(i, j).terms();
            if (terms.empty()) continue;
            const auto& [e, c] = *terms.begin();
            kappa = a(i, j).coeff(e) / c;
        }
    if (!kappa || kappa->sign() <= 0) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a(i, j) == *kappa * b(i, j))) return std::nullopt;
    return kappa;
}

SymMatrixF scaled_first_derivative_log_hessian(double y, double z) {
    const SubsetPoly dx = derivative(counterexample_polynomial(), 1);
    const double s = 1.0 + y + z;
    const std::vector<double> point = {1.0, y, z};
    return log_hessian(dx, point).map([&](double h) { return -s * s * h; });
}

namespace {

std::string join(const std::vector<double>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s%.12g", i ? ", " : "", std::abs(values[i]) < 5e-13 ? 0.0 : values[i]);
        out += buf;
    }
    return out + "}";
}

bool eigenvalues_are_0_0_2(const std::vector<double>& ev) {
    return ev.size() == 3 && std::abs(ev[0]) <= 1e-9 && std::abs(ev[1]) <= 1e-9 && std::abs(ev[2] - 2.0) <= 1e-9;
}

}  // namespace

bool ReproReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

std::string ReproReport::text() const {
    std::ostringstream os;
    os << "counterexample: g(x,y,z) = (4 + 3(x+y+z) + 3(xy+xz+yz)) / 22\n";
    if (nlc_witness) {
        const auto& w = *nlc_witness;
        const auto [lhs, rhs] = over_common_denominator(w.lhs, w.rhs);
        os << "log-submodularity: violated at S=" << subset_str(w.s) << " T=" << subset_str(w.t) << ": p(S)p(T) = "
           << lhs << " < " << rhs << " = p(S|T)p(S&T)\n";
    }
    if (kappa) os << "symbolic M = (" << *kappa << ") * R\n";
    for (std::size_t i = 0; i < dominance_gaps.size(); ++i)
    {
        os << "dominance gap row " << i + 1 << ": " << dominance_gaps[i].str();
        if (kappa) os << " = (" << *kappa << ") * (" << (dominance_gaps[i] * (Rational(1) / *kappa)).str() << ")";
        os << '\n';
    }
    if (!w_eigenvalues.empty())
        os << "eigenvalues of -(y+z+1)^2 * hess log(dg/dx) at (1,1,1): " << join(w_eigenvalues) << '\n';
    os << "strong log-concavity: " << to_string(slc.aggregate) << " (" << slc.violations() << " violations over "
       << slc.per_subset.size() << " derivative subsets)\n";
    os << "\nchecks:\n";
    for (const auto& c : checks)
        os << "  [" << (c.ok ? " ok " : "FAIL") << "] " << c.name << ": " << c.actual
           << (c.ok ? "" : "  (expected " + c.expected + ")") << '\n';
    os << (ok() ? "all checks passed\n" : "some checks FAILED\n");
    return os.str();
}

ReproReport reproduce_counterexample(const SampleConfig& cfg) {
    ReproReport rep;
    const SubsetPoly g = counterexample_polynomial();

    {
        const Verdict v = check_nlc(g);
        ReproCheck c{"NLC violated with S={1}, T={2}", "violated, 9/484 < 12/484", to_string(kind_of(v)), false};
        if (const auto* viol = std::get_if<Violated>(&v)) {
            const auto& w = std::get<NlcWitness>(viol->witness);
            rep.nlc_witness = w;
            const auto [lhs, rhs] = over_common_denominator(w.lhs, w.rhs);
            c.actual = "violated at S=" + subset_str(w.s) + " T=" + subset_str(w.t) + ", " + lhs + " < " + rhs;
            c.ok = w.s == var_bit(1) && w.t == var_bit(2) && w.lhs == Rational(9, 484) && w.rhs == Rational(12, 484);
        }
        rep.checks.push_back(std::move(c));
    }

    const auto cert = certify_log_concavity_dominance(g);
    rep.checks.push_back({"dominance certificate for g", "found", cert ? "found" : "not found", cert.has_value()});
    if (cert) {
        rep.dominance_gaps = cert->gaps;
        rep.kappa = positive_multiple(cert->m, reference_R());
        rep.checks.push_back({"M is a positive multiple of R", "kappa > 0",
                              rep.kappa ? "kappa = " + rep.kappa->str() : "not proportional", rep.kappa.has_value()});
        if (rep.kappa) {
            const int n = 3;
            const SparsePoly y = SparsePoly::variable(n, 2), z = SparsePoly::variable(n, 3);
            const SparsePoly expected = *rep.kappa * (SparsePoly::constant(n, Rational(6)) * y * z +
                                                      Rational(3) * y + Rational(3) * z + SparsePoly::constant(n, 1));
            rep.checks.push_back({"row-1 gap = kappa * (6yz + 3y + 3z + 1)", expected.str(), cert->gaps[0].str(),
                                  cert->gaps[0] == expected});
        }
    }

    {
        rep.w_eigenvalues = eigen_sym(scaled_first_derivative_log_hessian(1.0, 1.0)).eigenvalues;
        bool all = eigenvalues_are_0_0_2(rep.w_eigenvalues);
        LogUniformSampler sampler(derive_seed(cfg.seed, 0x57), 0.01, 100.0);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const double y = sampler.next(), z = sampler.next();
            const auto ev = eigen_sym(scaled_first_derivative_log_hessian(y, z)).eigenvalues;
            all = all && eigenvalues_are_0_0_2(ev);
            worst = std::max({worst, std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2] - 2.0)});
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s at (1,1,1); max deviation over 20 (y,z) = %.3g", join(rep.w_eigenvalues).c_str(),
                      worst);
        rep.checks.push_back({"first-derivative eigenvalues {0, 0, 2}", "{0, 0, 2} within 1e-9", buf, all});
    }

    rep.slc = check_slc(g, cfg);
    {
        const bool empty_has_cert = std::holds_alternative<Holds>(rep.slc.per_subset.front().second) &&
                                    std::holds_alternative<DominanceCertificate>(
                                        std::get<Holds>(rep.slc.per_subset.front().second).certificate);
        rep.checks.push_back({"SLC: no violation over all derivative subsets", "0 violations",
                              std::to_string(rep.slc.violations()) + " violations, aggregate " +
                                  to_string(rep.slc.aggregate),
                              rep.slc.aggregate != VerdictKind::Violated});
        rep.checks.push_back({"SLC: empty derivative subset certified by dominance", "dominance certificate",
                              empty_has_cert ? "dominance certificate" : "other", empty_has_cert});
    }
    return rep;
}

}  // namespace slc
