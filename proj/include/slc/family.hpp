#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "slc/checkers.hpp"
#include "slc/rational.hpp"
#include "slc/subset_poly.hpp"

namespace slc {

/// Parameters of the symmetric three-variable family
///   (4 + b(x+y+z) + c(xy+xz+yz)) / (4 + 3b + 3c),   b, c >= 0.
struct FamilyParams {
    Rational b;
    Rational c;
};

/// Normalized family member. Throws std::invalid_argument for b < 0 or c < 0.
SubsetPoly make_family(const FamilyParams& params);

/// Closed-form log-submodularity region: b^2 >= 4c.
bool nlc_region_exact(const FamilyParams& params);

struct SweepConfig {
    Rational b_max{4};
    Rational c_max{4};
    Rational step{1, 20};
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
    double lo = 0.01;
    double hi = 100.0;
    double tolerance = 1e-9;
    unsigned threads = 1;
    std::uint64_t max_cells = 4'000'000;
};

struct SweepCell {
    std::size_t bi = 0;
    std::size_t ci = 0;
    Rational b;
    Rational c;
    bool nlc = false;
    bool slc_no_violation = false;
    bool slc_certified = false;  // every derivative subset held by an exact certificate
    std::uint64_t points_tested = 0;
};

struct SweepResult {
    SweepConfig config;
    std::vector<Rational> b_values;
    std::vector<Rational> c_values;
    std::vector<SweepCell> cells;  // b-major: cells[bi * c_values.size() + ci]

    const SweepCell& cell(std::size_t bi, std::size_t ci) const { return cells[bi * c_values.size() + ci]; }
    /// Cell at exact parameter values, or nullptr when off-grid.
    const SweepCell* find(const Rational& b, const Rational& c) const;

    std::size_t nlc_count() const;
    std::size_t slc_count() const;
    /// Every NLC cell is also SLC-no-violation.
    bool nlc_within_slc() const;
    /// Some cell is SLC-no-violation but not NLC.
    bool slc_strictly_larger() const;
};

/// Grid values 0, step, 2*step, ... up to and including `max` when on-grid.
std::vector<Rational> grid_values(const Rational& max, const Rational& step);

/// Sampler seed of a grid cell; independent of evaluation order.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t bi, std::size_t ci);

/// Evaluates every grid cell. Cells are independent; with threads > 1 they
/// are split across workers and written into fixed slots, so the result does
/// not depend on scheduling. Throws std::invalid_argument for a nonpositive
/// step, negative ranges, or more than max_cells cells.
SweepResult sweep(const SweepConfig& cfg);

struct RegionFiles {
    std::filesystem::path nlc_boundary;
    std::filesystem::path slc_boundary;
    std::filesystem::path full_csv;
};

/// Writes nlc_boundary.txt, slc_boundary.txt (b, largest flagged c per b;
/// rows with no flagged cell omitted) and sweep_full.csv into `dir`.
/// Throws std::runtime_error on I/O failure.
RegionFiles emit_region_tables(const SweepResult& result, const std::filesystem::path& dir);

/// The text of the two boundary tables, as written by emit_region_tables.
std::string boundary_table(const SweepResult& result, bool slc);
std::string full_csv(const SweepResult& result);

}  // namespace slc
