#include "aus/dominance.hpp"

#include <algorithm>

#include "aus/aoi.hpp"

namespace aus {

Label root_label(const Instance& instance) {
  Label root;
  root.location = kBaseStation;
  root.slot = 0;
  root.energy = instance.battery_capacity;
  root.onboard.assign(instance.num_sns, 0);
  root.aoi.assign(instance.num_sns, 0.0);
  return root;
}

std::vector<double> shadow_aoi(const Label& label, double slot_len) {
  std::vector<double> out(label.onboard.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = age_minutes(label.slot, label.onboard[s], slot_len);
  }
  return out;
}

double compute_hhat(const Label& parent, const Label& candidate, const Instance& instance) {
  if (candidate.location == kBaseStation) return candidate.cost;
  const int travel = candidate.slot - parent.slot;
  const std::vector<double> shadow = shadow_aoi(candidate, instance.slot_len);
  return parent.cost + delivery_cost(parent.aoi, travel, shadow, instance);
}

namespace {

enum class Order { kLess, kEqual, kGreater, kIncomparable };

// Order of the shadow AoI vectors of two labels at the same slot. Since
// â = (slot - z) * tau with a common slot, â_a <= â_b iff z_a >= z_b.
Order compare_shadow(const Label& a, const Label& b) {
  bool less = false;
  bool greater = false;
  for (std::size_t s = 0; s < a.onboard.size(); ++s) {
    if (a.onboard[s] > b.onboard[s]) less = true;
    if (a.onboard[s] < b.onboard[s]) greater = true;
    if (less && greater) return Order::kIncomparable;
  }
  if (less) return Order::kLess;
  if (greater) return Order::kGreater;
  return Order::kEqual;
}

}  // namespace

bool dominates(const Label& a, const Label& b) {
  const Order shadow = compare_shadow(a, b);
  if (shadow == Order::kGreater || shadow == Order::kIncomparable) return false;
  // â_a <= â_b holds from here on.
  const bool shadow_strict = shadow == Order::kLess;
  return (a.energy >= b.energy && a.promise < b.promise) ||
         (a.energy > b.energy && a.promise <= b.promise) ||
         (a.energy >= b.energy && shadow_strict && a.promise <= b.promise);
}

DominanceVerdict insert(Label candidate, LabelCell& cell, std::size_t capacity,
                        std::vector<Label>& arena, bool use_dominance) {
  DominanceVerdict verdict;

  for (LabelId id : use_dominance ? cell.ids : std::vector<LabelId>{}) {
    if (dominates(arena[id], candidate)) {
      verdict.outcome = InsertOutcome::kDiscardedDominated;
      verdict.dominator = id;
      return verdict;
    }
  }

  std::erase_if(cell.ids, [&](LabelId id) {
    if (!use_dominance || !dominates(candidate, arena[id])) return false;
    verdict.dominated.push_back(id);
    return true;
  });

  if (cell.ids.size() >= capacity) {
    // First maximum in storage order is the oldest among ties.
    auto worst = std::max_element(cell.ids.begin(), cell.ids.end(),
                                  [&](LabelId x, LabelId y) {
                                    return arena[x].promise < arena[y].promise;
                                  });
    if (worst == cell.ids.end() || !(candidate.promise < arena[*worst].promise)) {
      verdict.outcome = InsertOutcome::kDiscardedFull;
      return verdict;
    }
    verdict.evicted = *worst;
    cell.ids.erase(worst);
  }

  verdict.stored = static_cast<LabelId>(arena.size());
  arena.push_back(std::move(candidate));
  cell.ids.push_back(verdict.stored);
  verdict.outcome = verdict.dominated.empty() && verdict.evicted == kNoLabel
                        ? InsertOutcome::kStored
                        : InsertOutcome::kStoredAfterEvictions;
  return verdict;
}

}  // namespace aus
