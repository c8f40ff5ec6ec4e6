#include "aus/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace aus {

namespace {

constexpr double kTieTolerance = 1e-9;

Label child_of(const Label& parent, LabelId parent_id, Action via) {
  Label child = parent;
  child.parent = parent_id;
  child.via = via;
  return child;
}

void grow(std::vector<double>& aoi, int slots, double slot_len) {
  for (double& a : aoi) a += slots * slot_len;
}

}  // namespace

std::optional<Label> expand_charge(const Label& label, int slots, const Instance& instance) {
  if (label.location != kBaseStation) return std::nullopt;
  if (slots < instance.recharge.min_slots) return std::nullopt;
  if (label.slot + slots > instance.horizon_slots) return std::nullopt;

  Label next = child_of(label, kNoLabel, Charge{label.slot, slots});
  next.slot = label.slot + slots;
  next.energy = instance.recharge.charge(label.energy, slots, instance.battery_capacity);
  next.visited = 0;
  next.cost = label.cost + interval_cost(label.aoi, slots, instance);
  grow(next.aoi, slots, instance.slot_len);
  next.promise = next.cost;
  return next;
}

std::optional<Label> expand_to_sn(const Label& label, Location target,
                                  const Instance& instance) {
  const Location from = label.location;
  if (target == kBaseStation || target == from || label.has_visited(target)) {
    return std::nullopt;
  }
  const int t = instance.travel(from, target);
  if (label.slot + t + instance.travel(target, kBaseStation) > instance.horizon_slots) {
    return std::nullopt;
  }
  const double need = instance.energy(from, target);
  if (!affordable(need + instance.energy(target, kBaseStation), label.energy)) {
    return std::nullopt;
  }

  Label next = child_of(label, kNoLabel, Fly{from, target, label.slot});
  next.location = target;
  next.slot = label.slot + t;
  next.energy = debit(label.energy, need);
  next.onboard[target - 1] = next.slot;
  next.visited |= std::uint64_t{1} << (target - 1);
  next.cost = label.cost + interval_cost(label.aoi, t, instance);
  grow(next.aoi, t, instance.slot_len);
  next.promise = compute_hhat(label, next, instance);
  return next;
}

std::optional<Label> expand_to_bs(const Label& label, const Instance& instance) {
  const Location from = label.location;
  if (from == kBaseStation) return std::nullopt;
  const int t = instance.travel(from, kBaseStation);
  if (label.slot + t > instance.horizon_slots) return std::nullopt;
  const double need = instance.energy(from, kBaseStation);
  if (!affordable(need, label.energy)) return std::nullopt;

  Label next = child_of(label, kNoLabel, Fly{from, kBaseStation, label.slot});
  next.location = kBaseStation;
  next.slot = label.slot + t;
  next.energy = debit(label.energy, need);
  next.visited = 0;
  for (int s = 0; s < instance.num_sns; ++s) {
    next.aoi[s] = age_minutes(next.slot, next.onboard[s], instance.slot_len);
  }
  next.cost = label.cost + delivery_cost(label.aoi, t, next.aoi, instance);
  next.promise = next.cost;
  return next;
}

LabelSearch::LabelSearch(const Instance& instance, GlaOptions options)
    : instance_(&instance), options_(std::move(options)) {
  if (const auto violations = validate_structure(instance); !violations.empty()) {
    throw std::invalid_argument("invalid instance:\n" + format_violations(violations));
  }
  if (options_.max_labels < 1) throw std::invalid_argument("K must be >= 1");
  cells_.resize(static_cast<std::size_t>(instance.horizon_slots + 1) * instance.locations());
}

void LabelSearch::offer(Label candidate) {
  ++stats_.candidates;
  const Location loc = candidate.location;
  const int slot = candidate.slot;
  LabelCell& target = cell_mut(loc, slot);
  Label copy_for_observer;
  if (options_.observer) copy_for_observer = candidate;
  const DominanceVerdict verdict =
      insert(std::move(candidate), target, options_.max_labels, arena_,
             loc == kBaseStation || options_.sensor_dominance);
  if (verdict.stored != kNoLabel) ++stats_.stored;
  stats_.max_cell_size = std::max(stats_.max_cell_size, target.ids.size());
  if (options_.observer) {
    options_.observer(InsertEvent{loc, slot, copy_for_observer, verdict, target, arena_});
  }
}

void LabelSearch::run() {
  if (done_) return;
  done_ = true;
  const Instance& in = *instance_;
  const int horizon = in.horizon_slots;

  arena_.push_back(root_label(in));
  cell_mut(kBaseStation, 0).ids.push_back(0);

  for (int n = 0; n < horizon; ++n) {
    for (Location s = 0; s <= in.num_sns; ++s) {
      // Insertions only ever target later slots, so this cell is final.
      const std::vector<LabelId> ids = cell(s, n).ids;
      for (LabelId id : ids) {
        if (s == kBaseStation) {
          const int w_min = in.recharge.min_slots;
          if (n + w_min <= horizon) {
            const Label& from = arena_[id];
            const std::vector<double> costs = interval_cost_table(from.aoi, horizon - n, in);
            for (int w = w_min; w <= horizon - n; ++w) {
              Label next = child_of(arena_[id], id, Charge{n, w});
              next.slot = n + w;
              next.energy = in.recharge.charge(next.energy, w, in.battery_capacity);
              next.visited = 0;
              next.cost = arena_[id].cost + costs[w];
              grow(next.aoi, w, in.slot_len);
              next.promise = next.cost;
              offer(std::move(next));
            }
          }
        } else if (auto next = expand_to_bs(arena_[id], in)) {
          next->parent = id;
          offer(std::move(*next));
        }
        for (Location target = 1; target <= in.num_sns; ++target) {
          if (auto next = expand_to_sn(arena_[id], target, in)) {
            next->parent = id;
            offer(std::move(*next));
          }
        }
      }
    }
  }
}

Schedule LabelSearch::reconstruct(LabelId id) const {
  Schedule schedule;
  for (LabelId cur = id; arena_[cur].parent != kNoLabel; cur = arena_[cur].parent) {
    schedule.actions.push_back(arena_[cur].via);
  }
  std::reverse(schedule.actions.begin(), schedule.actions.end());
  return schedule;
}

Solution LabelSearch::best() const {
  if (!done_) throw std::logic_error("LabelSearch::best() before run()");
  const Instance& in = *instance_;

  LabelId best_id = kNoLabel;
  double best_cost = 0.0;
  Schedule best_schedule;
  for (int n = 0; n <= in.horizon_slots; ++n) {
    for (LabelId id : cell(kBaseStation, n).ids) {
      const Label& l = arena_[id];
      const double total = l.cost + interval_cost(l.aoi, in.horizon_slots - n, in);
      if (best_id != kNoLabel && total > best_cost + kTieTolerance) continue;
      Schedule schedule = reconstruct(id);
      if (best_id == kNoLabel || total < best_cost - kTieTolerance ||
          lexicographically_less(schedule, best_schedule, in)) {
        best_id = id;
        best_cost = total;
        best_schedule = std::move(schedule);
      }
    }
  }
  if (best_id == kNoLabel) throw std::runtime_error("no feasible label at any BS node");

  Solution solution;
  solution.report = replay(best_schedule, in);
  solution.schedule = std::move(best_schedule);
  return solution;
}

Solution gla_solve(const Instance& instance, std::size_t max_labels) {
  LabelSearch search(instance, GlaOptions{max_labels, {}});
  search.run();
  return search.best();
}

}  // namespace aus
