#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aus/model.hpp"

namespace aus {

/// AoI in minutes of information stamped at `stamp_slot`, seen at `now_slot`.
inline double age_minutes(int now_slot, int stamp_slot, double slot_len) {
  return static_cast<double>(now_slot - stamp_slot) * slot_len;
}

// Cost accounting. Every solver and the replay evaluator accumulate cost
// through these two functions, in the same order, so that a solver's running
// cost and the replayed cost of its schedule agree bit for bit.

/// sum_s sum_{i=1..w} f_s(a0[s] + i*tau): all AoIs grow for w slots.
double interval_cost(std::span<const double> a0, int slots, const Instance& instance);

/// interval_cost(a0, w) for every w in 0..max_slots, computed in one pass
/// with the same summation order (entry w equals interval_cost(a0, w) exactly).
std::vector<double> interval_cost_table(std::span<const double> a0, int max_slots,
                                        const Instance& instance);

/// sum_s [ sum_{i=1..t-1} f_s(a0[s] + i*tau) + f_s(after[s]) ]: AoIs grow in
/// flight and the arrival slot is charged with the post-delivery AoI.
double delivery_cost(std::span<const double> a0, int travel_slots,
                     std::span<const double> after, const Instance& instance);

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-SN AoI bookkeeping at one slot. Timestamps are slot indices.
struct AoiState {
  int slot = 0;
  std::vector<int> delivered;  // u: latest collection slot known at the BS
  std::vector<int> onboard;    // z: latest collection slot, possibly undelivered
  std::vector<double> aoi;     // a, minutes

  explicit AoiState(int num_sns = 0)
      : delivered(num_sns, 0), onboard(num_sns, 0), aoi(num_sns, 0.0) {}

  /// â(s) = (slot - z(s)) * tau
  double shadow_aoi(int sn_index, double slot_len) const {
    return age_minutes(slot, onboard[sn_index], slot_len);
  }
};

struct DeliveryEvent {
  int slot = 0;
  Location sn = 0;
  int collected_slot = 0;
};

struct RunReport {
  double cumulative_cost = 0.0;
  double normalized_cost = 0.0;  // cumulative / (S * N)
  std::vector<double> slot_cost;           // slots 1..N
  std::vector<double> battery;             // battery at the end of slots 1..N
  std::vector<std::vector<double>> aoi;    // aoi[n-1][s-1] for slots 1..N
  std::vector<DeliveryEvent> deliveries;
};

/// Slot-by-slot simulator. Starts at the BS at slot 0 with a full battery and
/// zero AoI. Flights debit their energy on departure; charges credit on
/// completion. Throws ReplayError on any infeasible step.
class Replayer {
 public:
  explicit Replayer(const Instance& instance, bool record_trace = false);

  /// Continue from an arbitrary state at the BS (used by suffix enumeration).
  Replayer(const Instance& instance, const AoiState& state, double energy, double cost);

  void apply(const Action& action);
  void fly(Location to);
  void charge(int slots);

  /// Stay at the BS for `slots` slots without charging.
  void idle(int slots);

  /// Idle to the horizon and return the report. The UAV must be at the BS.
  RunReport finish();

  int slot() const { return state_.slot; }
  Location location() const { return location_; }
  double energy() const { return energy_; }
  double cost() const { return cost_; }
  const AoiState& state() const { return state_; }
  std::uint64_t visited() const { return visited_; }

 private:
  void grow(int slots);
  void record_interval(int slots);

  const Instance* instance_;
  bool record_;
  AoiState state_;
  Location location_ = kBaseStation;
  double energy_ = 0.0;
  double cost_ = 0.0;
  std::uint64_t visited_ = 0;
  RunReport trace_;
};

/// Replays a schedule from the initial state and idles to the horizon.
RunReport replay(const Schedule& schedule, const Instance& instance);

}  // namespace aus
