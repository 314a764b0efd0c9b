#include "slc/report.hpp"

#include <cstdio>
#include <sstream>

namespace slc {

using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string point_str(const PositivePoint& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + fmt(x[i]);
    return out + ")";
}

json certificate_json(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, ExhaustiveEnumeration>) {
                return {{"type", "exhaustive-enumeration"}, {"pairs_checked", cert.pairs_checked}};
            } else if constexpr (std::is_same_v<T, TrivialCertificate>) {
                return {{"type", "trivial"}, {"kind", to_string(cert.kind)}};
            } else {
                json gaps = json::array();
                for (const auto& g : cert.gaps) gaps.push_back(g.str());
                json m = json::array();
                for (std::size_t i = 0; i < cert.m.size(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < cert.m.size(); ++j) row.push_back(cert.m(i, j).str());
                    m.push_back(std::move(row));
                }
                return {{"type", "diagonal-dominance"}, {"gaps", std::move(gaps)}, {"M", std::move(m)}};
            }
        },
        c);
}

}  // namespace

std::string describe(const Verdict& v, const std::string& indent) {
    std::ostringstream os;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Holds>) {
                os << indent << "verdict: holds\n";
                std::visit(
                    [&](const auto& cert) {
                        using C = std::decay_t<decltype(cert)>;
                        if constexpr (std::is_same_v<C, ExhaustiveEnumeration>) {
                            os << indent << "certificate: exhaustive enumeration of " << cert.pairs_checked
                               << " ordered subset pairs\n";
                        } else if constexpr (std::is_same_v<C, TrivialCertificate>) {
                            os << indent << "certificate: " << to_string(cert.kind) << '\n';
                        } else {
                            os << indent << "certificate: strict diagonal dominance of M = grad g grad g^T - g hess g\n";
                            for (std::size_t i = 0; i < cert.gaps.size(); ++i)
                                os << indent << "  row " << i + 1 << " gap: " << cert.gaps[i].str() << '\n';
                        }
                    },
                    x.certificate);
            } else if constexpr (std::is_same_v<T, Violated>) {
                os << indent << "verdict: violated\n";
                if (const auto* nw = std::get_if<NlcWitness>(&x.witness)) {
                    const auto [lhs, rhs] = over_common_denominator(nw->lhs, nw->rhs);
                    os << indent << "witness: S=" << subset_str(nw->s) << " T=" << subset_str(nw->t)
                       << "  p(S)p(T) = " << lhs << " < " << rhs << " = p(S|T)p(S&T)\n";
                } else {
                    const auto& pw = std::get<PointWitness>(x.witness);
                    os << indent << "witness: derivative subset " << subset_str(pw.derivative_subset) << " at "
                       << point_str(pw.point) << ", max log-Hessian eigenvalue " << fmt(pw.max_eigenvalue) << '\n';
                }
            } else {
                os << indent << "verdict: no-violation-found (sampling, not a proof)\n"
                   << indent << "points tested: " << x.stats.points_tested << ", tolerance: " << fmt(x.stats.tolerance)
                   << " relative, seed: " << x.stats.seed << '\n';
            }
        },
        v);
    return os.str();
}

json to_json(const Verdict& v) {
    json out;
    out["verdict"] = to_string(kind_of(v));
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Holds>) {
                out["certificate"] = certificate_json(x.certificate);
            } else if constexpr (std::is_same_v<T, Violated>) {
                if (const auto* nw = std::get_if<NlcWitness>(&x.witness)) {
                    out["witness"] = {{"type", "subset-pair"},
                                      {"S", subset_str(nw->s)},
                                      {"T", subset_str(nw->t)},
                                      {"lhs", nw->lhs.str()},
                                      {"rhs", nw->rhs.str()}};
                } else {
                    const auto& pw = std::get<PointWitness>(x.witness);
                    json pt = json::array();
                    for (double c : pw.point.coords()) pt.push_back(c);
                    out["witness"] = {{"type", "point"},
                                      {"derivative_subset", subset_str(pw.derivative_subset)},
                                      {"point", std::move(pt)},
                                      {"max_eigenvalue", pw.max_eigenvalue}};
                }
            } else {
                out["stats"] = {{"points_tested", x.stats.points_tested},
                                {"derivatives_tested", x.stats.derivatives_tested},
                                {"tolerance", x.stats.tolerance},
                                {"seed", x.stats.seed}};
            }
        },
        v);
    return out;
}

json to_json(const SlcReport& r) {
    json subsets = json::array();
    for (const auto& [a, v] : r.per_subset) {
        json entry = to_json(v);
        entry["derivative_subset"] = subset_str(a);
        subsets.push_back(std::move(entry));
    }
    return {{"verdict", to_string(r.aggregate)}, {"violations", r.violations()}, {"subsets", std::move(subsets)}};
}

json to_json(const ReproReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"expected", c.expected}, {"actual", c.actual}});
    json out = {{"ok", r.ok()}, {"checks", std::move(checks)}};
    if (r.kappa) out["kappa"] = r.kappa->str();
    if (r.nlc_witness)
        out["nlc_witness"] = {{"S", subset_str(r.nlc_witness->s)},
                              {"T", subset_str(r.nlc_witness->t)},
                              {"lhs", r.nlc_witness->lhs.str()},
                              {"rhs", r.nlc_witness->rhs.str()}};
    json gaps = json::array();
    for (const auto& g : r.dominance_gaps) gaps.push_back(g.str());
    out["dominance_gaps"] = std::move(gaps);
    out["w_eigenvalues"] = r.w_eigenvalues;
    out["slc"] = to_json(r.slc);
    return out;
}

json sweep_summary_json(const SweepResult& r) {
    const auto* cross = r.find(Rational(3), Rational(3));
    json out = {{"cells", r.cells.size()},
                {"nlc_cells", r.nlc_count()},
                {"slc_no_violation_cells", r.slc_count()},
                {"nlc_within_slc", r.nlc_within_slc()},
                {"slc_strictly_larger", r.slc_strictly_larger()},
                {"seed", r.config.seed},
                {"samples", r.config.samples}};
    if (cross) out["cell_3_3"] = {{"nlc", cross->nlc}, {"slc_no_violation", cross->slc_no_violation}};
    return out;
}

}  // namespace slc
