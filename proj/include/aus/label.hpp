#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "aus/model.hpp"

namespace aus {

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

/// Partial solution ending at node (location, slot) of the time-expanded grid.
struct Label {
  Location location = kBaseStation;
  int slot = 0;
  double energy = 0.0;           // remaining battery
  std::uint64_t visited = 0;     // SNs collected since the last BS departure
  std::vector<int> onboard;      // z: collection slot per SN
  std::vector<double> aoi;       // a: BS-side AoI per SN, minutes
  double cost = 0.0;             // h
  double promise = 0.0;          // ĥ, as-if-delivered cost
  LabelId parent = kNoLabel;
  Action via{};                  // action leading here from the parent

  bool has_visited(Location sn) const {
    return (visited >> (sn - 1)) & std::uint64_t{1};
  }
};

/// Root label at (BS, slot 0): full battery, nothing collected, zero AoI.
Label root_label(const Instance& instance);

}  // namespace aus
