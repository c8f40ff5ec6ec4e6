#include "aus/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace aus {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const CostFn& f) {
  json j;
  j["kind"] = f.kind_name();
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, CostFn::Linear> ||
                      std::is_same_v<K, CostFn::Quadratic>) {
          j["alpha"] = k.alpha;
        } else if constexpr (std::is_same_v<K, CostFn::Exponential>) {
          j["alpha"] = k.alpha;
          j["beta"] = k.beta;
        } else if constexpr (std::is_same_v<K, CostFn::Step>) {
          j["threshold"] = k.threshold;
          j["low"] = k.low;
          j["high"] = k.high;
        } else {
          json bp = json::array();
          for (const auto& [x, y] : k.breakpoints) bp.push_back({x, y});
          j["breakpoints"] = bp;
        }
      },
      f.kind());
  return j;
}

CostFn cost_fn_from_json(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  try {
    if (kind == "linear") return CostFn::linear(field<double>(j, "alpha"));
    if (kind == "quadratic") return CostFn::quadratic(field<double>(j, "alpha"));
    if (kind == "exponential") {
      return CostFn::exponential(field<double>(j, "alpha"), field<double>(j, "beta"));
    }
    if (kind == "step") {
      return CostFn::step(field<double>(j, "threshold"), field<double>(j, "low"),
                          field<double>(j, "high"));
    }
    if (kind == "piecewise_linear") {
      std::vector<std::pair<double, double>> bp;
      for (const auto& p : field<json>(j, "breakpoints")) {
        if (!p.is_array() || p.size() != 2) throw FormatError("breakpoint must be [x, y]");
        bp.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      return CostFn::piecewise_linear(std::move(bp));
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown cost function kind \"" + kind + "\"");
}

json to_json(const Instance& in) {
  json fns = json::array();
  for (const auto& f : in.cost_fns) fns.push_back(to_json(f));
  return json{
      {"num_sns", in.num_sns},
      {"slot_len_min", in.slot_len},
      {"horizon_slots", in.horizon_slots},
      {"travel_slots", in.travel_slots},
      {"travel_energy", in.travel_energy},
      {"battery_capacity", in.battery_capacity},
      {"recharge", {{"rate_per_slot", in.recharge.rate_per_slot},
                    {"min_slots", in.recharge.min_slots}}},
      {"cost_fns", fns},
  };
}

Instance instance_from_json(const json& j) {
  Instance in;
  in.num_sns = field<int>(j, "num_sns");
  in.slot_len = field<double>(j, "slot_len_min");
  in.horizon_slots = field<int>(j, "horizon_slots");
  in.travel_slots = field<Matrix<int>>(j, "travel_slots");
  in.travel_energy = field<Matrix<double>>(j, "travel_energy");
  in.battery_capacity = field<double>(j, "battery_capacity");
  const json recharge = field<json>(j, "recharge");
  in.recharge.rate_per_slot = field<double>(recharge, "rate_per_slot");
  in.recharge.min_slots = field<int>(recharge, "min_slots");
  const json fns = field<json>(j, "cost_fns");
  if (!fns.is_array()) throw FormatError("cost_fns must be an array");
  for (const auto& f : fns) in.cost_fns.push_back(cost_fn_from_json(f));
  return in;
}

json to_json(const Schedule& schedule) {
  json actions = json::array();
  for (const Action& a : schedule.actions) {
    if (const auto* f = std::get_if<Fly>(&a)) {
      actions.push_back({{"type", "fly"}, {"from", f->from}, {"to", f->to},
                         {"depart_slot", f->depart_slot}});
    } else {
      const auto& c = std::get<Charge>(a);
      actions.push_back({{"type", "charge"}, {"start_slot", c.start_slot}, {"slots", c.slots}});
    }
  }
  return json{{"actions", actions}};
}

Schedule schedule_from_json(const json& j) {
  Schedule schedule;
  for (const auto& a : field<json>(j, "actions")) {
    const auto type = field<std::string>(a, "type");
    if (type == "fly") {
      schedule.actions.push_back(Fly{field<int>(a, "from"), field<int>(a, "to"),
                                     field<int>(a, "depart_slot")});
    } else if (type == "charge") {
      schedule.actions.push_back(Charge{field<int>(a, "start_slot"), field<int>(a, "slots")});
    } else {
      throw FormatError("unknown action type \"" + type + "\"");
    }
  }
  return schedule;
}

json to_json(const RunReport& report) {
  json deliveries = json::array();
  for (const auto& d : report.deliveries) {
    deliveries.push_back({{"slot", d.slot}, {"sn", d.sn}, {"collected_slot", d.collected_slot}});
  }
  return json{
      {"cumulative_cost", report.cumulative_cost},
      {"normalized_cost", report.normalized_cost},
      {"slot_cost", report.slot_cost},
      {"battery", report.battery},
      {"deliveries", deliveries},
  };
}

void write_trace_csv(std::ostream& os, const RunReport& report) {
  const std::size_t sns = report.aoi.empty() ? 0 : report.aoi.front().size();
  os << "slot,total_cost,battery";
  for (std::size_t s = 1; s <= sns; ++s) os << ",aoi_s" << s;
  os << "\n";
  for (std::size_t n = 0; n < report.slot_cost.size(); ++n) {
    os << n + 1 << "," << report.slot_cost[n] << "," << report.battery[n];
    for (double a : report.aoi[n]) os << "," << a;
    os << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace aus
