#pragma once

#include <string>

#include <json.hpp>

#include "slc/checkers.hpp"
#include "slc/counterexample.hpp"
#include "slc/family.hpp"

namespace slc {

/// One-paragraph human description of a verdict, indented by `indent`.
std::string describe(const Verdict& v, const std::string& indent = "  ");

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const SlcReport& r);
nlohmann::ordered_json to_json(const ReproReport& r);
nlohmann::ordered_json sweep_summary_json(const SweepResult& r);

}  // namespace slc
