#pragma once

#include "aus/labeling.hpp"
#include "aus/model.hpp"

namespace aus {

/// Greedy baseline. From the current location the UAV ranks the unvisited
/// SNs it can still return from by f(a + t*tau) / t (projected AoI cost per
/// travel slot) and takes the first whose detour [go there, then BS] costs
/// less than heading to the BS now, measured over the same window of
/// max(t_ss' + t_s'0, t_s0) slots. With no such SN it returns to deliver.
/// At the BS it charges the shortest stay that makes some trip affordable,
/// or w_min slots when a trip is affordable but none pays off.
Solution greedy_solve(const Instance& instance);

}  // namespace aus
