#include "aus/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <type_traits>

namespace aus {

double RechargeModel::charge(double current, int slots, double capacity) const {
  if (slots < min_slots) return current;
  return std::min(current + rate_per_slot * slots, capacity);
}

Matrix<int> quantize(const Matrix<double>& travel_minutes, double slot_len) {
  if (!(slot_len > 0.0)) throw std::invalid_argument("quantize: slot length must be > 0");
  Matrix<int> slots(travel_minutes.size());
  for (std::size_t i = 0; i < travel_minutes.size(); ++i) {
    slots[i].resize(travel_minutes[i].size());
    for (std::size_t j = 0; j < travel_minutes[i].size(); ++j) {
      const double m = travel_minutes[i][j];
      if (!(m >= 0.0)) throw std::invalid_argument("quantize: negative travel time");
      slots[i][j] = i == j ? 0 : static_cast<int>(std::ceil(m / slot_len));
    }
  }
  return slots;
}

namespace {

std::string cell(int i, int j) {
  std::ostringstream os;
  os << "[" << i << "][" << j << "]";
  return os.str();
}

}  // namespace

std::vector<Violation> validate_structure(const Instance& in) {
  std::vector<Violation> out;
  auto fail = [&out](std::string where, std::string what) {
    out.push_back({std::move(where), std::move(what)});
  };

  if (in.num_sns < 1) fail("num_sns", "must be >= 1");
  if (in.num_sns > kMaxSensorNodes) fail("num_sns", "at most 64 sensor nodes supported");
  if (in.horizon_slots < 1) fail("horizon_slots", "must be >= 1");
  if (!(in.slot_len > 0.0)) fail("slot_len", "must be > 0");
  if (!(in.battery_capacity > 0.0)) fail("battery_capacity", "must be > 0");
  if (!(in.recharge.rate_per_slot >= 0.0)) fail("recharge.rate_per_slot", "must be >= 0");
  if (in.recharge.min_slots < 1) fail("recharge.min_slots", "must be >= 1");
  if (static_cast<int>(in.cost_fns.size()) != std::max(in.num_sns, 0)) {
    fail("cost_fns", "expected one cost function per sensor node");
  }
  if (!out.empty()) return out;

  const int n = in.locations();
  bool shape_ok = static_cast<int>(in.travel_slots.size()) == n &&
                  static_cast<int>(in.travel_energy.size()) == n;
  for (int i = 0; shape_ok && i < n; ++i) {
    shape_ok = static_cast<int>(in.travel_slots[i].size()) == n &&
               static_cast<int>(in.travel_energy[i].size()) == n;
  }
  if (!shape_ok) {
    fail("travel matrices", "must both be (S+1)x(S+1)");
    return out;
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int t = in.travel_slots[i][j];
      const double b = in.travel_energy[i][j];
      if (i == j) {
        if (t != 0) fail("travel_slots" + cell(i, j), "diagonal must be 0");
      } else if (t < 1) {
        fail("travel_slots" + cell(i, j), "distinct locations must be >= 1 slot apart");
      }
      if (!(b >= 0.0) || !std::isfinite(b)) {
        fail("travel_energy" + cell(i, j), "must be finite and >= 0");
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const Instance& in) {
  std::vector<Violation> out = validate_structure(in);
  if (!out.empty()) return out;
  auto fail = [&out](std::string where, std::string what) {
    out.push_back({std::move(where), std::move(what)});
  };

  bool feasible = false;
  for (int s = 1; s <= in.num_sns && !feasible; ++s) {
    feasible = in.travel(0, s) + in.travel(s, 0) <= in.horizon_slots &&
               affordable(in.energy(0, s) + in.energy(s, 0), in.battery_capacity);
  }
  if (!feasible) fail("instance", "no feasible trip: no BS->s->BS round trip fits horizon and battery");
  return out;
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (const auto& v : violations) os << v.where << ": " << v.what << "\n";
  return os.str();
}

int start_slot(const Action& action) {
  return std::visit(
      [](const auto& a) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Fly>) {
          return a.depart_slot;
        } else {
          return a.start_slot;
        }
      },
      action);
}

int end_slot(const Action& action, const Instance& instance) {
  if (const auto* fly = std::get_if<Fly>(&action)) {
    return fly->depart_slot + instance.travel(fly->from, fly->to);
  }
  const auto& charge = std::get<Charge>(action);
  return charge.start_slot + charge.slots;
}

int Schedule::end_slot(const Instance& instance) const {
  return actions.empty() ? 0 : aus::end_slot(actions.back(), instance);
}

namespace {

std::tuple<int, int, int> action_key(const Action& action, const Instance& instance) {
  if (const auto* fly = std::get_if<Fly>(&action)) {
    return {0, fly->to, instance.travel(fly->from, fly->to)};
  }
  return {1, 0, std::get<Charge>(action).slots};
}

}  // namespace

bool lexicographically_less(const Schedule& a, const Schedule& b, const Instance& instance) {
  return std::lexicographical_compare(
      a.actions.begin(), a.actions.end(), b.actions.begin(), b.actions.end(),
      [&](const Action& x, const Action& y) {
        return action_key(x, instance) < action_key(y, instance);
      });
}

}  // namespace aus
