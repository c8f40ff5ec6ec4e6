#include "aus/oracle.hpp"

#include <stdexcept>

namespace aus {

namespace {

constexpr double kTieTolerance = 1e-9;

class Enumerator {
 public:
  Enumerator(const Instance& instance, bool canonical, const ScheduleVisitor& visit,
             const std::function<bool(const Replayer&)>& prune)
      : in_(instance), canonical_(canonical), visit_(visit), prune_(prune) {}

  void run(const Replayer& start) { descend(start, false); }

 private:
  void step(const Replayer& from, const Action& action, bool is_charge) {
    Replayer next = from;
    next.apply(action);
    if (prune_ && prune_(next)) return;
    prefix_.actions.push_back(action);
    descend(next, is_charge);
    prefix_.actions.pop_back();
  }

  bool can_visit(const Replayer& r, Location target) const {
    const Location here = r.location();
    if (target == here || ((r.visited() >> (target - 1)) & 1U)) return false;
    return r.slot() + in_.travel(here, target) + in_.travel(target, kBaseStation) <=
               in_.horizon_slots &&
           affordable(in_.energy(here, target) + in_.energy(target, kBaseStation),
                      r.energy());
  }

  void descend(const Replayer& r, bool after_charge) {
    const int n = r.slot();
    const Location here = r.location();

    if (here == kBaseStation) {
      if (!(canonical_ && after_charge)) {
        Replayer end = r;
        end.finish();
        if (!prune_ || !prune_(end)) visit_(prefix_, end);
      }
      for (Location s = 1; s <= in_.num_sns; ++s) {
        if (can_visit(r, s)) step(r, Fly{here, s, n}, false);
      }
      if (!(canonical_ && after_charge)) {
        for (int w = in_.recharge.min_slots; n + w <= in_.horizon_slots; ++w) {
          step(r, Charge{n, w}, true);
        }
      }
      return;
    }

    if (n + in_.travel(here, kBaseStation) <= in_.horizon_slots &&
        affordable(in_.energy(here, kBaseStation), r.energy())) {
      step(r, Fly{here, kBaseStation, n}, false);
    }
    for (Location s = 1; s <= in_.num_sns; ++s) {
      if (can_visit(r, s)) step(r, Fly{here, s, n}, false);
    }
  }

  const Instance& in_;
  bool canonical_;
  const ScheduleVisitor& visit_;
  const std::function<bool(const Replayer&)>& prune_;
  Schedule prefix_;
};

void check_limits(const Instance& instance, OracleLimits limits) {
  if (const auto violations = validate_structure(instance); !violations.empty()) {
    throw std::invalid_argument("invalid instance:\n" + format_violations(violations));
  }
  if (instance.num_sns > limits.max_sns || instance.horizon_slots > limits.max_slots) {
    throw OracleLimitError();
  }
}

}  // namespace

void enumerate_schedules(const Instance& instance, const Replayer& start, bool canonical,
                         const ScheduleVisitor& visit,
                         const std::function<bool(const Replayer&)>& prune) {
  if (start.location() != kBaseStation) {
    throw std::invalid_argument("enumeration must start at the base station");
  }
  Enumerator(instance, canonical, visit, prune).run(start);
}

Solution oracle_solve(const Instance& instance, OracleLimits limits) {
  check_limits(instance, limits);

  std::optional<Schedule> best;
  double best_cost = 0.0;
  enumerate_schedules(instance, Replayer(instance), true,
                      [&](const Schedule& schedule, const Replayer& end) {
                        const double cost = end.cost();
                        if (best && cost > best_cost + kTieTolerance) return;
                        if (!best || cost < best_cost - kTieTolerance ||
                            lexicographically_less(schedule, *best, instance)) {
                          best = schedule;
                          best_cost = cost;
                        }
                      });

  Solution solution;
  solution.schedule = std::move(*best);
  solution.report = replay(solution.schedule, instance);
  return solution;
}

std::optional<Schedule> zero_cost_schedule(const Instance& instance, OracleLimits limits) {
  check_limits(instance, limits);

  std::optional<Schedule> found;
  enumerate_schedules(
      instance, Replayer(instance), true,
      [&](const Schedule& schedule, const Replayer& end) {
        if (!found && end.cost() == 0.0) found = schedule;
      },
      [&](const Replayer& r) { return found.has_value() || r.cost() > 0.0; });
  return found;
}

}  // namespace aus
