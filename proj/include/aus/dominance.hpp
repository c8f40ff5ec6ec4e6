#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "aus/label.hpp"
#include "aus/model.hpp"

namespace aus {

inline constexpr std::size_t kUnboundedLabels = std::numeric_limits<std::size_t>::max();

/// Shadow AoI â = (slot - z) * tau of a label, per SN.
std::vector<double> shadow_aoi(const Label& label, double slot_len);

/// As-if-delivered cost of `candidate`, reached from `parent` by a flight to
/// an SN: the parent's cost plus the in-flight slots, with the arrival slot
/// charged at the shadow AoI instead of the grown AoI. For BS labels this is
/// the label's own cost.
double compute_hhat(const Label& parent, const Label& candidate, const Instance& instance);

/// Label `a` dominates `b` (same node) on (energy, shadow AoI, promise cost):
/// no worse in all three and strictly better in at least one, where the
/// vector order needs a strict coordinate to count as strictly better.
bool dominates(const Label& a, const Label& b);

/// Ordered label ids stored at one grid node, oldest first.
struct LabelCell {
  std::vector<LabelId> ids;
};

enum class InsertOutcome {
  kDiscardedDominated,
  kStored,
  kStoredAfterEvictions,
  kDiscardedFull,
};

struct DominanceVerdict {
  InsertOutcome outcome = InsertOutcome::kDiscardedFull;
  LabelId stored = kNoLabel;        // id of the candidate when stored
  LabelId dominator = kNoLabel;     // stored label that dominated the candidate
  std::vector<LabelId> dominated;   // stored labels removed as dominated
  LabelId evicted = kNoLabel;       // max-ĥ label removed for capacity
};

/// Inserts `candidate` (promise already computed) into `cell`, holding at
/// most `capacity` labels. Stored candidates are appended to `arena`. With
/// `use_dominance` false only the capacity rule applies.
DominanceVerdict insert(Label candidate, LabelCell& cell, std::size_t capacity,
                        std::vector<Label>& arena, bool use_dominance = true);

}  // namespace aus
