#include "slc/family.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slc/rng.hpp"

namespace slc {

SubsetPoly make_family(const FamilyParams& params) {
    if (params.b.sign() < 0 || params.c.sign() < 0)
        throw std::invalid_argument("family parameters must be nonnegative");
    SubsetPoly g(3);
    for (Mask s = 0; s < 8; ++s) {
        switch (std::popcount(s)) {
            case 0: g.set_coeff(s, Rational(4)); break;
            case 1: g.set_coeff(s, params.b); break;
            case 2: g.set_coeff(s, params.c); break;
            default: break;
        }
    }
    return normalize(g);
}

bool nlc_region_exact(const FamilyParams& params) { return params.b * params.b >= Rational(4) * params.c; }

std::vector<Rational> grid_values(const Rational& max, const Rational& step) {
    if (step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
    if (max.sign() < 0) throw std::invalid_argument("grid range must be nonnegative");
    std::vector<Rational> out;
    for (Rational v; v <= max; v += step) out.push_back(v);
    return out;
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t bi, std::size_t ci) {
    return derive_seed(seed, 0x43454c4cULL + bi, ci);
}

namespace {

void evaluate_cell(SweepCell& cell, const SweepConfig& cfg) {
    const SubsetPoly g = make_family({cell.b, cell.c});
    cell.nlc = kind_of(check_nlc(g)) == VerdictKind::Holds;
    const SampleConfig sc{cfg.samples, cfg.lo, cfg.hi, cell_seed(cfg.seed, cell.bi, cell.ci), cfg.tolerance};
    const SlcReport report = check_slc(g, sc);
    cell.slc_no_violation = report.aggregate != VerdictKind::Violated;
    cell.slc_certified = report.aggregate == VerdictKind::Holds;
    for (const auto& [a, v] : report.per_subset) {
        if (const auto* nv = std::get_if<NoViolationFound>(&v)) cell.points_tested += nv->stats.points_tested;
    }
}

}  // namespace

SweepResult sweep(const SweepConfig& cfg) {
    SweepResult result;
    result.config = cfg;
    result.b_values = grid_values(cfg.b_max, cfg.step);
    result.c_values = grid_values(cfg.c_max, cfg.step);
    const std::size_t nb = result.b_values.size(), nc = result.c_values.size();
    if (nb * nc > cfg.max_cells)
        throw std::invalid_argument("sweep grid has " + std::to_string(nb * nc) + " cells, limit is " +
                                    std::to_string(cfg.max_cells));

    result.cells.resize(nb * nc);
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t ci = 0; ci < nc; ++ci) {
            auto& cell = result.cells[bi * nc + ci];
            cell.bi = bi;
            cell.ci = ci;
            cell.b = result.b_values[bi];
            cell.c = result.c_values[ci];
        }

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(result.cells.size())));
    if (workers == 1) {
        for (auto& cell : result.cells) evaluate_cell(cell, cfg);
        return result;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < result.cells.size(); k += workers) evaluate_cell(result.cells[k], cfg);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return result;
}

const SweepCell* SweepResult::find(const Rational& b, const Rational& c) const {
    auto bit = std::find(b_values.begin(), b_values.end(), b);
    auto cit = std::find(c_values.begin(), c_values.end(), c);
    if (bit == b_values.end() || cit == c_values.end()) return nullptr;
    return &cell(static_cast<std::size_t>(bit - b_values.begin()), static_cast<std::size_t>(cit - c_values.begin()));
}

std::size_t SweepResult::nlc_count() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.nlc; }));
}

std::size_t SweepResult::slc_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.slc_no_violation; }));
}

bool SweepResult::nlc_within_slc() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return !c.nlc || c.slc_no_violation; });
}

bool SweepResult::slc_strictly_larger() const {
    return std::any_of(cells.begin(), cells.end(), [](const auto& c) { return c.slc_no_violation && !c.nlc; });
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_header(std::ostringstream& os, const SweepResult& r) {
    const auto& cfg = r.config;
    os << "# b_max=" << cfg.b_max.decimal_str() << " c_max=" << cfg.c_max.decimal_str()
       << " step=" << cfg.step.decimal_str() << '\n'
       << "# slc flag: no violation found by sampling (not a proof); samples per derivative=" << cfg.samples
       << " plus fixed grid; box=[" << format_double(cfg.lo) << ", " << format_double(cfg.hi)
       << "]; tolerance=" << format_double(cfg.tolerance) << " relative; seed=" << cfg.seed << '\n'
       << "# nlc flag: exact enumeration of all subset pairs\n";
}

}  // namespace

std::string boundary_table(const SweepResult& r, bool slc) {
    std::ostringstream os;
    os << "# " << (slc ? "strongly log-concave (sampled)" : "log-submodular (exact)") << " region upper boundary\n";
    write_header(os, r);
    os << "# columns: b c_max_flagged; b values with no flagged cell are omitted\n";
    const std::size_t nc = r.c_values.size();
    for (std::size_t bi = 0; bi < r.b_values.size(); ++bi) {
        const Rational* top = nullptr;
        for (std::size_t ci = 0; ci < nc; ++ci) {
            const auto& cell = r.cell(bi, ci);
            if (slc ? cell.slc_no_violation : cell.nlc) top = &cell.c;
        }
        if (top) os << r.b_values[bi].decimal_str() << ' ' << top->decimal_str() << '\n';
    }
    return os.str();
}

std::string full_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "b,c,nlc,slc_no_violation\n";
    for (const auto& cell : r.cells)
        os << cell.b.decimal_str() << ',' << cell.c.decimal_str() << ',' << (cell.nlc ? 1 : 0) << ','
           << (cell.slc_no_violation ? 1 : 0) << '\n';
    return os.str();
}

RegionFiles emit_region_tables(const SweepResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
    RegionFiles files{dir / "nlc_boundary.txt", dir / "slc_boundary.txt", dir / "sweep_full.csv"};
    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("failed to write " + path.string());
    };
    write(files.nlc_boundary, boundary_table(result, false));
    write(files.slc_boundary, boundary_table(result, true));
    write(files.full_csv, full_csv(result));
    return files;
}

}  // namespace slc
