#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "aus/aoi.hpp"
#include "aus/labeling.hpp"
#include "aus/model.hpp"

namespace aus {

struct OracleLimits {
  int max_sns = 4;
  int max_slots = 14;
};

class OracleLimitError : public std::runtime_error {
 public:
  OracleLimitError() : std::runtime_error("oracle limits exceeded") {}
};

/// Visitor for enumerate_schedules: the complete action list and the
/// replayer state after idling to the horizon.
using ScheduleVisitor = std::function<void(const Schedule&, const Replayer&)>;

/// Depth-first enumeration of every feasible action sequence from `start`
/// (which must be at the BS), with the same branching as the label search:
/// charges of every legal length at the BS, flights to unvisited SNs that
/// can still return, and returns to the BS. A sequence ends only at the BS.
///
/// With `canonical` set, a charge is never followed by another charge or by
/// the end of the schedule; such sequences cost the same as the merged or
/// truncated sequence under linear capped charging, so no cost is lost.
///
/// `prune`, if set, is consulted after every action; returning true
/// abandons the branch.
void enumerate_schedules(const Instance& instance, const Replayer& start, bool canonical,
                         const ScheduleVisitor& visit,
                         const std::function<bool(const Replayer&)>& prune = {});

/// Exhaustive minimum over all slotted schedules, ties broken as in the
/// label search. Throws OracleLimitError beyond `limits`.
Solution oracle_solve(const Instance& instance, OracleLimits limits = {});

/// A schedule of exactly zero cost, if one exists. Branches are abandoned as
/// soon as they accrue any cost.
std::optional<Schedule> zero_cost_schedule(const Instance& instance,
                                           OracleLimits limits = {4, 64});

}  // namespace aus
