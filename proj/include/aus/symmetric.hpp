#pragma once

#include <span>
#include <vector>

#include "aus/cost_fn.hpp"
#include "aus/labeling.hpp"
#include "aus/model.hpp"

namespace aus {

/// Continuous-time symmetric case: every SN is `radius` minutes from the BS,
/// all share one cost function, and a full battery lasts one trip (2r).
/// The UAV leaves the BS at the given departure times; trip k occupies
/// [departures[k], departures[k+1]] and the last one ends at horizon_end.
struct SymmetricInstance {
  int num_sns = 1;
  double radius = 1.0;
  CostFn cost = CostFn::linear(1.0);
  std::vector<double> departures;
  double horizon_end = 0.0;
  std::vector<double> initial_aoi;  // AoI at the first departure, minutes
  double min_recharge = 0.0;        // required gap beyond 2r between departures
};

/// Throws std::invalid_argument when a departure gap is below 2r + min_recharge
/// or the sizes are inconsistent.
void validate(const SymmetricInstance& instance);

/// Average AoI cost over an interval of length `interval` that starts with a
/// trip to SN `visited` (1-based): unvisited SNs age through the interval,
/// the visited one ages through the 2r trip and restarts from r on delivery.
/// Throws std::invalid_argument when interval < 2r.
double trip_cost(Location visited, std::span<const double> aoi, double interval,
                 double radius, const CostFn& f);

/// AoI vector after a trip to `visited` lasting `interval`.
std::vector<double> aoi_after_trip(Location visited, std::span<const double> aoi,
                                   double interval, double radius);

struct PolicyResult {
  std::vector<Location> visits;
  double total_cost = 0.0;    // integral of the summed AoI cost
  double average_cost = 0.0;  // total / (horizon_end - first departure)
};

/// Cost of visiting the given SNs, one per departure.
PolicyResult evaluate_visits(const SymmetricInstance& instance,
                             std::span<const Location> visits);

/// Visit the SN with the largest AoI on every trip, lowest index on ties.
PolicyResult optimal_policy(const SymmetricInstance& instance);

/// Slotted instance with the same geometry: radius slots to each SN, 2r
/// between SNs, one energy unit per travel slot and a 2r battery.
/// Requires an integral radius and horizon.
Instance to_slotted(const SymmetricInstance& instance, RechargeModel recharge);

/// Max-AoI trips on a slotted instance whose SNs are all equidistant from the
/// BS and share one cost function; each trip departs as soon as the battery
/// allows. Throws std::invalid_argument for non-symmetric instances.
Solution symmetric_solve(const Instance& instance);

}  // namespace aus
