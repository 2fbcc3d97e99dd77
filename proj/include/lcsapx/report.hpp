#pragma once

#include <string>

#include "json.hpp"
#include "lcsapx/multi_solver.hpp"

namespace lcsapx {

using Json = nlohmann::ordered_json;

// Flat object of numbers (doubles; short fractions read back exactly).
Json schedule_to_json(const ConstantSchedule& schedule);
// Accepts numbers or "p/q" strings per field; missing fields are a spec error.
ConstantSchedule schedule_from_json(const Json& j);

// 16 hex digits of FNV-1a over the exact field values.
std::string schedule_digest(const ConstantSchedule& schedule);

Json witness_to_json(const Witness& w);
Json report_to_json(const SolveReport& report, bool with_witness = true);

}  // namespace lcsapx
