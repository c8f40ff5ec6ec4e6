#include "aus/greedy.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aus/aoi.hpp"

namespace aus {

namespace {

bool can_visit(const Replayer& r, Location target, const Instance& in) {
  const Location here = r.location();
  if (target == here || ((r.visited() >> (target - 1)) & 1U)) return false;
  return r.slot() + in.travel(here, target) + in.travel(target, kBaseStation) <=
             in.horizon_slots &&
         affordable(in.energy(here, target) + in.energy(target, kBaseStation), r.energy());
}

// Cost over a common window of [detour via target, then BS] minus [BS now].
double detour_gain(const Replayer& r, Location target, const Instance& in) {
  const Location here = r.location();
  const int via = in.travel(here, target) + in.travel(target, kBaseStation);
  const int direct = in.travel(here, kBaseStation);
  const int window = std::max(via, direct);

  Replayer detour = r;
  detour.fly(target);
  detour.fly(kBaseStation);
  detour.idle(window - via);

  Replayer back = r;
  if (here != kBaseStation) back.fly(kBaseStation);
  back.idle(window - direct);

  return back.cost() - detour.cost();
}

// Shortest legal charge after which some trip from the BS is affordable.
std::optional<int> charge_to_enable_trip(const Replayer& r, const Instance& in) {
  const int n = r.slot();
  for (int w = in.recharge.min_slots; n + w <= in.horizon_slots; ++w) {
    const double energy = in.recharge.charge(r.energy(), w, in.battery_capacity);
    for (Location s = 1; s <= in.num_sns; ++s) {
      if (n + w + in.travel(0, s) + in.travel(s, 0) <= in.horizon_slots &&
          affordable(in.energy(0, s) + in.energy(s, 0), energy)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Solution greedy_solve(const Instance& instance) {
  if (const auto violations = validate_structure(instance); !violations.empty()) {
    throw std::invalid_argument("invalid instance:\n" + format_violations(violations));
  }
  const Instance& in = instance;
  const double tau = in.slot_len;

  Replayer r(in);
  Schedule schedule;
  auto act = [&](const Action& a) {
    schedule.actions.push_back(a);
    r.apply(a);
  };

  while (true) {
    const int n = r.slot();
    const Location here = r.location();

    std::vector<Location> candidates;
    for (Location s = 1; s <= in.num_sns; ++s) {
      if (can_visit(r, s, in)) candidates.push_back(s);
    }
    auto score = [&](Location s) {
      const int t = in.travel(here, s);
      return in.cost(s)(r.state().aoi[s - 1] + t * tau) / t;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Location x, Location y) { return score(x) > score(y); });

    const auto pick = std::find_if(candidates.begin(), candidates.end(), [&](Location s) {
      return detour_gain(r, s, in) > 0.0;
    });
    if (pick != candidates.end()) {
      act(Fly{here, *pick, n});
      continue;
    }
    if (here != kBaseStation) {
      act(Fly{here, kBaseStation, n});
      continue;
    }

    if (!candidates.empty()) {
      // A trip is affordable but not worth it yet; wait while charging.
      if (n + in.recharge.min_slots > in.horizon_slots) break;
      act(Charge{n, in.recharge.min_slots});
      continue;
    }
    const auto w = charge_to_enable_trip(r, in);
    if (!w) break;
    act(Charge{n, *w});
  }

  Solution solution;
  solution.report = replay(schedule, in);
  solution.schedule = std::move(schedule);
  return solution;
}

}  // namespace aus
