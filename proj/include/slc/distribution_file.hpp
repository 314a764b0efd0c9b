#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slc/subset_poly.hpp"

namespace slc {

/// Error in a distribution document: malformed JSON, bad subset key,
/// non-rational or negative weight, or n outside 1..16.
class DistributionFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distribution documents are JSON:
///
///   { "n": 3,
///     "weights": { "": "4/22", "1": "3/22", "1,2": "3/22", "mask:6": "3/22" } }
///
/// Keys are strictly increasing 1-based index lists ("" is the empty set), or
/// "mask:<k>" with k the subset bitmask. Values are exact rationals given as
/// strings ("3/22", "0.25", "4") or JSON integers. Unlisted subsets weigh 0.
SubsetPoly parse_distribution(std::string_view text, bool normalize_weights = false);
SubsetPoly load_distribution(const std::filesystem::path& path, bool normalize_weights = false);

/// Serializes nonzero weights with "num/den" strings and index-list keys.
std::string write_distribution(const SubsetPoly& p);

/// Index-list key of a subset: "" for the empty set, "1,3" for {1,3}.
std::string subset_key(Mask s);

}  // namespace slc
