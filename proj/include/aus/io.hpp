#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "aus/aoi.hpp"
#include "aus/model.hpp"

namespace aus {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance documents:
//   {num_sns, slot_len_min, horizon_slots, travel_slots, travel_energy,
//    battery_capacity, recharge: {rate_per_slot, min_slots},
//    cost_fns: [{kind, ...params}]}
// with row-major (S+1)x(S+1) matrices, index 0 the BS. Cost function kinds:
//   linear {alpha}, quadratic {alpha}, exponential {alpha, beta},
//   step {threshold, low, high}, piecewise_linear {breakpoints: [[x, y], ...]}

nlohmann::json to_json(const CostFn& f);
CostFn cost_fn_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Instance& instance);
/// Parses structure only; call validate() for semantic checks.
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunReport& report);

/// Per-slot CSV: slot,total_cost,battery,aoi_s1..aoi_sS
void write_trace_csv(std::ostream& os, const RunReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace aus
