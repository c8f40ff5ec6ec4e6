#include "aus/instances.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aus {

namespace {

double uniform(std::mt19937_64& rng, std::pair<double, double> range) {
  return std::uniform_real_distribution<double>(range.first, range.second)(rng);
}

CostFn draw_cost(std::mt19937_64& rng, const RandomParams& p) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return CostFn::linear(uniform(rng, p.linear_alpha));
    case 1:
      return CostFn::quadratic(uniform(rng, p.quadratic_alpha));
    default: {
      const double alpha = uniform(rng, p.exp_alpha);
      return CostFn::exponential(alpha, uniform(rng, p.exp_beta));
    }
  }
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

GeneratedInstance random_instance(std::uint64_t seed, int num_sns, const RandomParams& p) {
  if (num_sns < 1) throw std::invalid_argument("random_instance: num_sns must be >= 1");
  if (!(p.slot_len > 0.0) || !(p.horizon_minutes >= p.slot_len)) {
    throw std::invalid_argument("random_instance: horizon must cover at least one slot");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double min_dist = p.min_travel_min * p.velocity_m_per_min;

  GeneratedInstance out;
  out.coordinates.push_back({0.0, 0.0});
  int attempts = 0;
  while (static_cast<int>(out.coordinates.size()) <= num_sns) {
    if (++attempts > p.max_attempts) {
      throw std::runtime_error("random_instance: could not place SNs at the minimum spacing");
    }
    // sqrt for a uniform density over the disk area
    const double radius = p.disk_radius_m * std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const Point candidate{radius * std::cos(angle), radius * std::sin(angle)};
    bool spaced = true;
    for (const Point& q : out.coordinates) spaced = spaced && distance(q, candidate) >= min_dist;
    if (spaced) out.coordinates.push_back(candidate);
  }

  const int n = num_sns + 1;
  Matrix<double> minutes(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      minutes[i][j] = distance(out.coordinates[i], out.coordinates[j]) / p.velocity_m_per_min;
    }
  }

  Instance& in = out.instance;
  in.num_sns = num_sns;
  in.slot_len = p.slot_len;
  in.horizon_slots = static_cast<int>(std::floor(p.horizon_minutes / p.slot_len));
  in.travel_slots = quantize(minutes, p.slot_len);
  in.travel_energy = minutes;
  in.battery_capacity = p.battery;
  in.recharge.rate_per_slot = p.battery / (p.full_recharge_min / p.slot_len);
  in.recharge.min_slots = p.min_charge_slots;
  for (int s = 0; s < num_sns; ++s) in.cost_fns.push_back(draw_cost(rng, p));

  if (const auto violations = validate(in); !violations.empty()) {
    throw std::runtime_error("random_instance: generated instance is invalid:\n" +
                             format_violations(violations));
  }
  return out;
}

Instance reduction_instance(const Graph& graph) {
  const int S = graph.num_nodes;
  if (S < 2) throw std::invalid_argument("reduction_instance: graph needs >= 2 nodes");

  std::set<std::pair<int, int>> edges;
  for (auto [i, j] : graph.edges) {
    if (i < 1 || j < 1 || i > S || j > S || i == j) {
      throw std::invalid_argument("reduction_instance: edge endpoint out of range or a loop");
    }
    edges.insert({std::min(i, j), std::max(i, j)});
  }

  Instance in;
  in.num_sns = S;
  in.slot_len = 1.0;
  in.horizon_slots = 4 * S + 14;
  const int n = S + 1;
  in.travel_slots.assign(n, std::vector<int>(n, 0));
  for (int i = 1; i < n; ++i) {
    in.travel_slots[0][i] = in.travel_slots[i][0] = 8;
    for (int j = 1; j < n; ++j) {
      if (i != j) {
        in.travel_slots[i][j] = edges.count({std::min(i, j), std::max(i, j)}) ? 4 : 16;
      }
    }
  }
  in.travel_energy.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) in.travel_energy[i][j] = in.travel_slots[i][j];
  }
  in.battery_capacity = 4.0 * static_cast<double>(edges.size()) + 8.0 * S;
  in.recharge = RechargeModel{1.0, 1};
  const double threshold = 4.0 * S + 13.0;
  in.cost_fns.assign(S, CostFn::step(threshold, 0.0, 100.0));
  return in;
}

Graph read_edge_list(const std::string& text, int num_nodes) {
  Graph g;
  g.num_nodes = num_nodes;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    int i = 0;
    int j = 0;
    if (!(fields >> i)) continue;
    std::string rest;
    if (!(fields >> j) || (fields >> rest)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected \"i j\"");
    }
    g.edges.emplace_back(i, j);
    g.num_nodes = std::max({g.num_nodes, i, j});
  }
  return g;
}

}  // namespace aus
