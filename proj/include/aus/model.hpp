#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "aus/cost_fn.hpp"

namespace aus {

/// Location index; 0 is the base station, 1..S are sensor nodes.
using Location = int;
inline constexpr Location kBaseStation = 0;

/// Visited sets are stored as 64-bit masks.
inline constexpr int kMaxSensorNodes = 64;

/// Tolerance for energy comparisons; sums of per-arc energies are not exact.
inline constexpr double kEnergyEps = 1e-9;

/// True when `need` energy can be drawn from `have`.
inline bool affordable(double need, double have) { return need <= have + kEnergyEps; }

/// Remaining energy after drawing `need`, never below zero.
inline double debit(double have, double need) {
  const double left = have - need;
  return left < 0.0 ? 0.0 : left;
}

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Linear charging capped at the battery capacity. A stay shorter than
/// min_slots charges nothing and is not a legal charging action.
struct RechargeModel {
  double rate_per_slot = 0.5;
  int min_slots = 1;

  /// Energy after charging for `slots` slots starting from `current`.
  double charge(double current, int slots, double capacity) const;
};

struct Instance {
  int num_sns = 0;
  int horizon_slots = 0;
  double slot_len = 1.0;  // minutes per slot
  Matrix<int> travel_slots;
  Matrix<double> travel_energy;
  double battery_capacity = 0.0;
  RechargeModel recharge;
  std::vector<CostFn> cost_fns;  // cost_fns[s - 1] belongs to SN s

  int locations() const { return num_sns + 1; }
  int travel(Location from, Location to) const { return travel_slots[from][to]; }
  double energy(Location from, Location to) const { return travel_energy[from][to]; }
  const CostFn& cost(Location sn) const { return cost_fns[sn - 1]; }
  double horizon_minutes() const { return horizon_slots * slot_len; }
};

/// ceil(minutes / slot_len) elementwise, diagonal forced to 0.
/// Throws std::invalid_argument for slot_len <= 0 or negative entries.
Matrix<int> quantize(const Matrix<double>& travel_minutes, double slot_len);

struct Violation {
  std::string where;
  std::string what;
};

/// Shape, range and sign violations. Solvers accept any instance passing
/// this; without a feasible trip they return the stay-at-BS schedule.
std::vector<Violation> validate_structure(const Instance& instance);

/// validate_structure() plus the requirement that some BS->s->BS round trip
/// fits the horizon and the battery; empty means valid.
std::vector<Violation> validate(const Instance& instance);

std::string format_violations(const std::vector<Violation>& violations);

struct Fly {
  Location from = kBaseStation;
  Location to = kBaseStation;
  int depart_slot = 0;
  friend bool operator==(const Fly&, const Fly&) = default;
};

struct Charge {
  int start_slot = 0;
  int slots = 0;
  friend bool operator==(const Charge&, const Charge&) = default;
};

using Action = std::variant<Fly, Charge>;

int start_slot(const Action& action);
int end_slot(const Action& action, const Instance& instance);

/// Executable plan from the base station back to the base station.
struct Schedule {
  std::vector<Action> actions;

  /// Slot at which the last action ends (0 when empty).
  int end_slot(const Instance& instance) const;
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Total order used for deterministic tie-breaking: Fly < Charge, then by
/// target location, then by duration; a proper prefix sorts first.
bool lexicographically_less(const Schedule& a, const Schedule& b, const Instance& instance);

}  // namespace aus
