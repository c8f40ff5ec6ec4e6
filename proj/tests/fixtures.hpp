#pragma once

#include <vector>

#include "aus/model.hpp"

namespace aus::testing {

// All SNs share one cost function; travel is `t` slots between any two
// distinct locations and energy equals travel slots.
inline Instance uniform_instance(int sns, int horizon, int t, CostFn f,
                                 double battery = 1000.0) {
  Instance in;
  in.num_sns = sns;
  in.horizon_slots = horizon;
  in.slot_len = 1.0;
  in.travel_slots.assign(sns + 1, std::vector<int>(sns + 1, t));
  in.travel_energy.assign(sns + 1, std::vector<double>(sns + 1, t));
  for (int i = 0; i <= sns; ++i) {
    in.travel_slots[i][i] = 0;
    in.travel_energy[i][i] = 0.0;
  }
  in.battery_capacity = battery;
  in.cost_fns.assign(sns, f);
  return in;
}

}  // namespace aus::testing
