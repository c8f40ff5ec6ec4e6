#include "aus/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "aus/aoi.hpp"

namespace aus {

void validate(const SymmetricInstance& in) {
  if (in.num_sns < 1) throw std::invalid_argument("symmetric instance: num_sns must be >= 1");
  if (!(in.radius > 0.0)) throw std::invalid_argument("symmetric instance: radius must be > 0");
  if (in.departures.empty()) throw std::invalid_argument("symmetric instance: no departures");
  if (!in.initial_aoi.empty() && static_cast<int>(in.initial_aoi.size()) != in.num_sns) {
    throw std::invalid_argument("symmetric instance: initial_aoi size mismatch");
  }
  const double min_gap = 2.0 * in.radius + in.min_recharge;
  for (std::size_t k = 1; k < in.departures.size(); ++k) {
    if (in.departures[k] - in.departures[k - 1] < min_gap) {
      throw std::invalid_argument("symmetric instance: departures closer than 2r + recharge");
    }
  }
  if (in.horizon_end - in.departures.back() < 2.0 * in.radius) {
    throw std::invalid_argument("symmetric instance: last trip does not fit the horizon");
  }
}

double trip_cost(Location visited, std::span<const double> aoi, double interval,
                 double radius, const CostFn& f) {
  if (interval < 2.0 * radius) throw std::invalid_argument("trip_cost: interval < 2r");
  double total = 0.0;
  for (std::size_t s = 0; s < aoi.size(); ++s) {
    if (static_cast<Location>(s + 1) == visited) {
      total += f.integral(aoi[s], aoi[s] + 2.0 * radius);
      total += f.integral(radius, interval - radius);
    } else {
      total += f.integral(aoi[s], aoi[s] + interval);
    }
  }
  return total / interval;
}

std::vector<double> aoi_after_trip(Location visited, std::span<const double> aoi,
                                   double interval, double radius) {
  std::vector<double> out(aoi.begin(), aoi.end());
  for (double& a : out) a += interval;
  out[visited - 1] = interval - radius;
  return out;
}

namespace {

double interval_of(const SymmetricInstance& in, std::size_t k) {
  const double end = k + 1 < in.departures.size() ? in.departures[k + 1] : in.horizon_end;
  return end - in.departures[k];
}

std::vector<double> start_aoi(const SymmetricInstance& in) {
  return in.initial_aoi.empty() ? std::vector<double>(in.num_sns, 0.0) : in.initial_aoi;
}

}  // namespace

PolicyResult evaluate_visits(const SymmetricInstance& in, std::span<const Location> visits) {
  validate(in);
  if (visits.size() != in.departures.size()) {
    throw std::invalid_argument("evaluate_visits: one visit per departure required");
  }
  PolicyResult result;
  std::vector<double> aoi = start_aoi(in);
  for (std::size_t k = 0; k < visits.size(); ++k) {
    const Location v = visits[k];
    if (v < 1 || v > in.num_sns) throw std::invalid_argument("evaluate_visits: bad SN");
    const double dt = interval_of(in, k);
    result.total_cost += dt * trip_cost(v, aoi, dt, in.radius, in.cost);
    aoi = aoi_after_trip(v, aoi, dt, in.radius);
    result.visits.push_back(v);
  }
  result.average_cost = result.total_cost / (in.horizon_end - in.departures.front());
  return result;
}

PolicyResult optimal_policy(const SymmetricInstance& in) {
  validate(in);
  std::vector<Location> visits;
  std::vector<double> aoi = start_aoi(in);
  for (std::size_t k = 0; k < in.departures.size(); ++k) {
    const auto oldest = std::max_element(aoi.begin(), aoi.end());  // first max wins ties
    const Location v = static_cast<Location>(oldest - aoi.begin()) + 1;
    visits.push_back(v);
    aoi = aoi_after_trip(v, aoi, interval_of(in, k), in.radius);
  }
  return evaluate_visits(in, visits);
}

Instance to_slotted(const SymmetricInstance& sym, RechargeModel recharge) {
  validate(sym);
  const int r = static_cast<int>(std::lround(sym.radius));
  const int horizon = static_cast<int>(std::lround(sym.horizon_end));
  if (std::abs(sym.radius - r) > 1e-12 || std::abs(sym.horizon_end - horizon) > 1e-12) {
    throw std::invalid_argument("to_slotted: radius and horizon must be integral");
  }
  Instance in;
  in.num_sns = sym.num_sns;
  in.horizon_slots = horizon;
  in.slot_len = 1.0;
  const int n = sym.num_sns + 1;
  in.travel_slots.assign(n, std::vector<int>(n, 2 * r));
  in.travel_energy.assign(n, std::vector<double>(n, 2.0 * r));
  for (int i = 0; i < n; ++i) {
    in.travel_slots[i][i] = 0;
    in.travel_energy[i][i] = 0.0;
    if (i > 0) {
      in.travel_slots[0][i] = in.travel_slots[i][0] = r;
      in.travel_energy[0][i] = in.travel_energy[i][0] = r;
    }
  }
  in.battery_capacity = 2.0 * r;
  in.recharge = recharge;
  in.cost_fns.assign(sym.num_sns, sym.cost);
  return in;
}

Solution symmetric_solve(const Instance& in) {
  if (const auto violations = validate_structure(in); !violations.empty()) {
    throw std::invalid_argument("invalid instance:\n" + format_violations(violations));
  }
  const int r = in.travel(0, 1);
  const double trip_energy = in.energy(0, 1) + in.energy(1, 0);
  for (Location s = 1; s <= in.num_sns; ++s) {
    if (in.travel(0, s) != r || in.travel(s, 0) != r ||
        in.energy(0, s) + in.energy(s, 0) != trip_energy || !(in.cost(s) == in.cost(1))) {
      throw std::invalid_argument("instance is not symmetric");
    }
  }

  Replayer replayer(in);
  Schedule schedule;
  auto act = [&](const Action& a) {
    schedule.actions.push_back(a);
    replayer.apply(a);
  };
  while (replayer.slot() + 2 * r <= in.horizon_slots) {
    const int n = replayer.slot();
    if (!affordable(trip_energy, replayer.energy())) {
      std::optional<int> wait;
      for (int w = in.recharge.min_slots; n + w + 2 * r <= in.horizon_slots; ++w) {
        if (affordable(trip_energy,
                       in.recharge.charge(replayer.energy(), w, in.battery_capacity))) {
          wait = w;
          break;
        }
      }
      if (!wait) break;
      act(Charge{n, *wait});
    }
    const auto& aoi = replayer.state().aoi;
    const Location v =
        static_cast<Location>(std::max_element(aoi.begin(), aoi.end()) - aoi.begin()) + 1;
    act(Fly{kBaseStation, v, replayer.slot()});
    act(Fly{v, kBaseStation, replayer.slot()});
  }

  Solution solution;
  solution.report = replay(schedule, in);
  solution.schedule = std::move(schedule);
  return solution;
}

}  // namespace aus
