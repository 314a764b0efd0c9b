// slc-check: log-submodularity and (strong) log-concavity checks for
// distributions over subsets given by their multi-affine generating polynomial.
//
// Exit codes: 0 holds / no violation found, 1 violated, 2 usage or input error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slc/checkers.hpp"
#include "slc/counterexample.hpp"
#include "slc/distribution_file.hpp"
#include "slc/family.hpp"
#include "slc/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

void write_report(const std::string& path, const nlohmann::ordered_json& doc) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed to write report " + path);
}

int exit_code(slc::VerdictKind k) { return k == slc::VerdictKind::Violated ? kExitViolated : kExitOk; }

struct CheckOptions {
    std::string input;
    std::string property;
    slc::SampleConfig sampling;
    bool normalize = false;
    std::string report;
};

int run_check(const CheckOptions& opt) {
    const slc::SubsetPoly p = slc::load_distribution(opt.input, opt.normalize);
    std::cout << "input: " << opt.input << "\nn: " << p.n() << "\nproperty: " << opt.property << '\n';
    if (!opt.normalize && !p.is_distribution()) std::cout << "note: weights do not sum to 1 (all checks are scale-invariant)\n";

    nlohmann::ordered_json doc = {{"input", opt.input}, {"n", p.n()}, {"property", opt.property}};
    slc::VerdictKind kind;
    if (opt.property == "nlc") {
        const slc::Verdict v = slc::check_nlc(p);
        std::cout << slc::describe(v, "");
        doc["result"] = slc::to_json(v);
        kind = slc::kind_of(v);
    } else if (opt.property == "lc") {
        const slc::Verdict v = slc::check_log_concavity(p, opt.sampling);
        std::cout << slc::describe(v, "");
        doc["result"] = slc::to_json(v);
        kind = slc::kind_of(v);
    } else {
        const slc::SlcReport r = slc::check_slc(p, opt.sampling);
        std::cout << "verdict: " << slc::to_string(r.aggregate) << " (" << r.violations() << " violations over "
                  << r.per_subset.size() << " derivative subsets)\n";
        for (const auto& [a, v] : r.per_subset) {
            std::cout << "derivative subset " << slc::subset_str(a) << ":\n" << slc::describe(v, "  ");
        }
        doc["result"] = slc::to_json(r);
        kind = r.aggregate;
    }
    if (opt.property != "nlc") {
        doc["sampling"] = {{"points", opt.sampling.points},
                           {"lo", opt.sampling.lo},
                           {"hi", opt.sampling.hi},
                           {"seed", opt.sampling.seed},
                           {"tolerance", opt.sampling.tolerance}};
    }
    write_report(opt.report, doc);
    return exit_code(kind);
}

int run_repro(const slc::SampleConfig& cfg, const std::string& report) {
    const slc::ReproReport rep = slc::reproduce_counterexample(cfg);
    std::cout << rep.text();
    write_report(report, slc::to_json(rep));
    return rep.ok() ? kExitOk : kExitViolated;
}

struct SweepOptions {
    std::string b_max = "4";
    std::string c_max = "4";
    std::string step = "0.05";
    slc::SweepConfig cfg;
    std::string out_dir = ".";
    std::string report;
};

int run_sweep(SweepOptions opt) {
    opt.cfg.b_max = slc::Rational::parse(opt.b_max);
    opt.cfg.c_max = slc::Rational::parse(opt.c_max);
    opt.cfg.step = slc::Rational::parse(opt.step);
    const slc::SweepResult r = slc::sweep(opt.cfg);
    const slc::RegionFiles files = slc::emit_region_tables(r, opt.out_dir);
    const auto summary = slc::sweep_summary_json(r);

    std::cout << "cells: " << r.cells.size() << " (" << r.b_values.size() << " b values x " << r.c_values.size()
              << " c values)\n"
              << "nlc-true cells: " << r.nlc_count() << '\n'
              << "slc-no-violation cells: " << r.slc_count() << '\n'
              << "containment (nlc => slc-no-violation): " << (r.nlc_within_slc() ? "passes" : "FAILS") << '\n'
              << "slc region strictly larger: " << (r.slc_strictly_larger() ? "yes" : "no") << '\n';
    if (const auto* cross = r.find(slc::Rational(3), slc::Rational(3))) {
        std::cout << "cell (3,3): nlc=" << (cross->nlc ? "true" : "false")
                  << " slc_no_violation=" << (cross->slc_no_violation ? "true" : "false")
                  << (cross->slc_no_violation && !cross->nlc ? "  (SLC but not NLC)" : "") << '\n';
    }
    std::cout << "wrote " << files.nlc_boundary.string() << ", " << files.slc_boundary.string() << ", "
              << files.full_csv.string() << '\n';
    write_report(opt.report, summary);
    // Containment failing means a sampled SLC violation inside the NLC region.
    return r.nlc_within_slc() ? kExitOk : kExitViolated;
}

void add_sampling_flags(CLI::App* cmd, slc::SampleConfig& s) {
    cmd->add_option("--samples", s.points, "Random log-uniform points per polynomial")->capture_default_str();
    cmd->add_option("--seed", s.seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--tolerance", s.tolerance, "Relative tolerance on the max log-Hessian eigenvalue")
        ->capture_default_str();
    cmd->add_option("--box-lo", s.lo, "Lower corner of the sampling box")->capture_default_str();
    cmd->add_option("--box-hi", s.hi, "Upper corner of the sampling box")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact log-submodularity and (strong) log-concavity checks for multi-affine generating polynomials"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Check one property of a distribution file");
    check_cmd->add_option("input", check.input, "Distribution file (JSON)")->required();
    check_cmd->add_option("property", check.property, "nlc | lc | slc")
        ->required()
        ->check(CLI::IsMember({"nlc", "lc", "slc"}));
    add_sampling_flags(check_cmd, check.sampling);
    check_cmd->add_flag("--normalize", check.normalize, "Divide weights by their sum on load");
    check_cmd->add_option("--report", check.report, "Write a JSON report to this file");

    slc::SampleConfig repro_cfg;
    std::string repro_report;
    auto* repro_cmd =
        app.add_subcommand("repro-counterexample", "Re-derive the strongly log-concave, non-log-submodular example");
    add_sampling_flags(repro_cmd, repro_cfg);
    repro_cmd->add_option("--report", repro_report, "Write a JSON report to this file");

    SweepOptions sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the (b, c) family and emit region tables");
    sweep_cmd->add_option("--b-max", sw.b_max, "Largest b (rational or decimal)")->capture_default_str();
    sweep_cmd->add_option("--c-max", sw.c_max, "Largest c (rational or decimal)")->capture_default_str();
    sweep_cmd->add_option("--step", sw.step, "Grid step (rational or decimal)")->capture_default_str();
    sweep_cmd->add_option("--samples", sw.cfg.samples, "Random points per derivative per cell")->capture_default_str();
    sweep_cmd->add_option("--seed", sw.cfg.seed, "Sweep seed")->capture_default_str();
    sweep_cmd->add_option("--tolerance", sw.cfg.tolerance, "Relative eigenvalue tolerance")->capture_default_str();
    sweep_cmd->add_option("--box-lo", sw.cfg.lo, "Lower corner of the sampling box")->capture_default_str();
    sweep_cmd->add_option("--box-hi", sw.cfg.hi, "Upper corner of the sampling box")->capture_default_str();
    sweep_cmd->add_option("--threads", sw.cfg.threads, "Worker threads")->capture_default_str();
    sweep_cmd->add_option("--out", sw.out_dir, "Output directory")->capture_default_str();
    sweep_cmd->add_option("--report", sw.report, "Write a JSON summary to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (*check_cmd) return run_check(check);
        if (*repro_cmd) return run_repro(repro_cfg, repro_report);
        if (*sweep_cmd) return run_sweep(sw);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
