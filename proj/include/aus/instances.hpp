#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aus/model.hpp"

namespace aus {

/// Field setup for random instances. Defaults: 5000 m disk, 1200 m/min,
/// 1-minute slots, 25 flight-minutes of battery refilled in 50 minutes.
struct RandomParams {
  double horizon_minutes = 100.0;
  double disk_radius_m = 5000.0;
  double velocity_m_per_min = 1200.0;
  double min_travel_min = 0.5;
  double slot_len = 1.0;
  double battery = 25.0;
  double full_recharge_min = 50.0;
  int min_charge_slots = 1;
  std::pair<double, double> linear_alpha{0.5, 2.0};
  std::pair<double, double> quadratic_alpha{0.01, 0.1};
  std::pair<double, double> exp_alpha{0.1, 1.0};
  std::pair<double, double> exp_beta{0.01, 0.05};
  int max_attempts = 100000;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct GeneratedInstance {
  Instance instance;
  std::vector<Point> coordinates;  // index 0 is the BS at the disk center
};

/// BS at the disk center, S SNs uniform in the disk with every pairwise
/// travel time >= min_travel_min, energy = flight minutes, one of
/// {linear, quadratic, exponential} cost per SN. Deterministic per seed.
/// Throws std::runtime_error if rejection sampling exhausts max_attempts or no
/// valid instance results.
GeneratedInstance random_instance(std::uint64_t seed, int num_sns, const RandomParams& params);

struct Graph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;  // 1-indexed, undirected
};

/// Hamiltonian-path reduction: SN i per node, 4 slots along edges and 16
/// otherwise, 8 slots to the BS, horizon 4S+14, step cost 0 up to 4S+13 and
/// 100 above. Energy equals travel slots; the battery is the total energy of
/// all graph edges plus all BS links.
Instance reduction_instance(const Graph& graph);

/// Reads "i j" pairs, one per line, 1-indexed; '#' starts a comment.
/// The node count is the largest index seen unless `num_nodes` is larger.
Graph read_edge_list(const std::string& text, int num_nodes = 0);

}  // namespace aus
