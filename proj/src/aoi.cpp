#include "aus/aoi.hpp"

#include <algorithm>
#include <string>

namespace aus {

double interval_cost(std::span<const double> a0, int slots, const Instance& instance) {
  const double tau = instance.slot_len;
  double total = 0.0;
  for (int s = 1; s <= instance.num_sns; ++s) {
    const CostFn& f = instance.cost(s);
    double inner = 0.0;
    for (int i = 1; i <= slots; ++i) inner += f(a0[s - 1] + i * tau);
    total += inner;
  }
  return total;
}

std::vector<double> interval_cost_table(std::span<const double> a0, int max_slots,
                                        const Instance& instance) {
  const double tau = instance.slot_len;
  const int w_max = std::max(max_slots, 0);
  std::vector<double> table(w_max + 1, 0.0);
  std::vector<double> inner(w_max + 1, 0.0);
  for (int s = 1; s <= instance.num_sns; ++s) {
    const CostFn& f = instance.cost(s);
    double running = 0.0;
    for (int i = 1; i <= w_max; ++i) {
      running += f(a0[s - 1] + i * tau);
      inner[i] = running;
    }
    for (int w = 0; w <= w_max; ++w) table[w] += inner[w];
  }
  return table;
}

double delivery_cost(std::span<const double> a0, int travel_slots,
                     std::span<const double> after, const Instance& instance) {
  const double tau = instance.slot_len;
  double total = 0.0;
  for (int s = 1; s <= instance.num_sns; ++s) {
    const CostFn& f = instance.cost(s);
    double inner = 0.0;
    for (int i = 1; i <= travel_slots - 1; ++i) inner += f(a0[s - 1] + i * tau);
    inner += f(after[s - 1]);
    total += inner;
  }
  return total;
}

Replayer::Replayer(const Instance& instance, bool record_trace)
    : instance_(&instance),
      record_(record_trace),
      state_(instance.num_sns),
      energy_(instance.battery_capacity) {}

Replayer::Replayer(const Instance& instance, const AoiState& state, double energy,
                   double cost)
    : instance_(&instance), record_(false), state_(state), energy_(energy), cost_(cost) {}

void Replayer::apply(const Action& action) {
  if (start_slot(action) != state_.slot) {
    throw ReplayError("action at slot " + std::to_string(start_slot(action)) +
                      " does not start where the previous one ended (slot " +
                      std::to_string(state_.slot) + ")");
  }
  if (const auto* f = std::get_if<Fly>(&action)) {
    if (f->from != location_) {
      throw ReplayError("flight departs from " + std::to_string(f->from) +
                        " but the UAV is at " + std::to_string(location_));
    }
    fly(f->to);
  } else {
    charge(std::get<Charge>(action).slots);
  }
}

void Replayer::grow(int slots) {
  const double tau = instance_->slot_len;
  for (double& a : state_.aoi) a += slots * tau;
  state_.slot += slots;
}

void Replayer::record_interval(int slots) {
  if (!record_) return;
  const double tau = instance_->slot_len;
  for (int i = 1; i <= slots; ++i) {
    double total = 0.0;
    std::vector<double> ages(instance_->num_sns);
    for (int s = 1; s <= instance_->num_sns; ++s) {
      ages[s - 1] = state_.aoi[s - 1] + i * tau;
      total += instance_->cost(s)(ages[s - 1]);
    }
    trace_.slot_cost.push_back(total);
    trace_.battery.push_back(energy_);
    trace_.aoi.push_back(std::move(ages));
  }
}

void Replayer::fly(Location to) {
  const Instance& in = *instance_;
  if (to < 0 || to > in.num_sns || to == location_) {
    throw ReplayError("invalid flight target " + std::to_string(to));
  }
  const int t = in.travel(location_, to);
  const int arrival = state_.slot + t;
  if (arrival > in.horizon_slots) {
    throw ReplayError("slot overflow: arrival at slot " + std::to_string(arrival) +
                      " beyond horizon " + std::to_string(in.horizon_slots));
  }
  const double need = in.energy(location_, to);
  if (!affordable(need, energy_)) {
    throw ReplayError("battery underflow: flight " + std::to_string(location_) + "->" +
                      std::to_string(to) + " needs " + std::to_string(need) + ", have " +
                      std::to_string(energy_));
  }
  energy_ = debit(energy_, need);

  if (to != kBaseStation) {
    cost_ += interval_cost(state_.aoi, t, in);
    record_interval(t);
    grow(t);
    state_.onboard[to - 1] = arrival;
    visited_ |= std::uint64_t{1} << (to - 1);
    location_ = to;
    return;
  }

  std::vector<double> after(in.num_sns);
  for (int s = 0; s < in.num_sns; ++s) {
    after[s] = age_minutes(arrival, state_.onboard[s], in.slot_len);
  }
  cost_ += delivery_cost(state_.aoi, t, after, in);
  if (record_) {
    record_interval(t - 1);
    double total = 0.0;
    for (int s = 1; s <= in.num_sns; ++s) total += in.cost(s)(after[s - 1]);
    trace_.slot_cost.push_back(total);
    trace_.battery.push_back(energy_);
    trace_.aoi.push_back(after);
    for (int s = 1; s <= in.num_sns; ++s) {
      if (visited_ & (std::uint64_t{1} << (s - 1))) {
        trace_.deliveries.push_back({arrival, s, state_.onboard[s - 1]});
      }
    }
  }
  state_.slot = arrival;
  state_.aoi = std::move(after);
  state_.delivered = state_.onboard;
  visited_ = 0;
  location_ = kBaseStation;
}

void Replayer::charge(int slots) {
  const Instance& in = *instance_;
  if (location_ != kBaseStation) throw ReplayError("charging away from the base station");
  if (slots < in.recharge.min_slots) {
    throw ReplayError("charge of " + std::to_string(slots) +
                      " slots is shorter than the minimum " +
                      std::to_string(in.recharge.min_slots));
  }
  if (state_.slot + slots > in.horizon_slots) {
    throw ReplayError("slot overflow: charge ends beyond the horizon");
  }
  cost_ += interval_cost(state_.aoi, slots, in);
  const double charged = in.recharge.charge(energy_, slots, in.battery_capacity);
  if (record_) {
    record_interval(slots);
    trace_.battery.back() = charged;
  }
  grow(slots);
  energy_ = charged;
}

void Replayer::idle(int slots) {
  const Instance& in = *instance_;
  if (slots == 0) return;
  if (slots < 0) throw ReplayError("negative idle time");
  if (location_ != kBaseStation) throw ReplayError("idling away from the base station");
  if (state_.slot + slots > in.horizon_slots) {
    throw ReplayError("slot overflow: idle beyond the horizon");
  }
  cost_ += interval_cost(state_.aoi, slots, in);
  record_interval(slots);
  grow(slots);
}

RunReport Replayer::finish() {
  if (location_ != kBaseStation) {
    throw ReplayError("schedule ends away from the base station");
  }
  idle(instance_->horizon_slots - state_.slot);
  RunReport report = record_ ? trace_ : RunReport{};
  report.cumulative_cost = cost_;
  report.normalized_cost =
      cost_ / (static_cast<double>(instance_->num_sns) * instance_->horizon_slots);
  return report;
}

RunReport replay(const Schedule& schedule, const Instance& instance) {
  Replayer r(instance, true);
  for (const Action& a : schedule.actions) r.apply(a);
  return r.finish();
}

}  // namespace aus
