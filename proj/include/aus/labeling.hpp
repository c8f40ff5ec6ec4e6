#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "aus/aoi.hpp"
#include "aus/dominance.hpp"
#include "aus/label.hpp"
#include "aus/model.hpp"

namespace aus {

// Label transitions of the graph-labeling search. Each returns std::nullopt
// when the transition is not generated.

/// Stay at the BS for `slots` slots and charge.
std::optional<Label> expand_charge(const Label& label, int slots, const Instance& instance);

/// Fly to SN `target`; generated only if the UAV can still return to the BS
/// from `target` within the horizon and the remaining energy. The promise
/// cost of the result is filled in.
std::optional<Label> expand_to_sn(const Label& label, Location target,
                                  const Instance& instance);

/// Fly from an SN to the BS and deliver everything onboard.
std::optional<Label> expand_to_bs(const Label& label, const Instance& instance);

/// One insertion attempt, reported to an optional observer.
struct InsertEvent {
  Location location;
  int slot;
  const Label& candidate;
  const DominanceVerdict& verdict;
  const LabelCell& cell;
  const std::vector<Label>& arena;
};

struct GlaOptions {
  std::size_t max_labels = 1;  // K
  std::function<void(const InsertEvent&)> observer;
  // Dominance at SN nodes compares promise costs and is not exact; turning
  // it off (with unbounded K) makes the search exhaustive.
  bool sensor_dominance = true;
};

struct GlaStats {
  std::size_t candidates = 0;
  std::size_t stored = 0;
  std::size_t max_cell_size = 0;
};

struct Solution {
  Schedule schedule;
  RunReport report;
};

/// Graph-labeling search over the (S+1) x (N+1) time-expanded grid. Used by
/// gla_solve(), or directly to inspect the label store after run().
class LabelSearch {
 public:
  LabelSearch(const Instance& instance, GlaOptions options);

  void run();
  Solution best() const;

  const LabelCell& cell(Location location, int slot) const {
    return cells_[static_cast<std::size_t>(slot) * instance_->locations() + location];
  }
  const std::vector<Label>& arena() const { return arena_; }
  const GlaStats& stats() const { return stats_; }

  /// Actions leading from the root to the given label.
  Schedule reconstruct(LabelId id) const;

 private:
  void offer(Label candidate);
  LabelCell& cell_mut(Location location, int slot) {
    return cells_[static_cast<std::size_t>(slot) * instance_->locations() + location];
  }

  const Instance* instance_;
  GlaOptions options_;
  std::vector<LabelCell> cells_;
  std::vector<Label> arena_;
  GlaStats stats_;
  bool done_ = false;
};

/// Runs the search and returns the minimum-cost schedule, replayed.
/// Throws std::invalid_argument for invalid instances or K < 1.
Solution gla_solve(const Instance& instance, std::size_t max_labels);

}  // namespace aus
