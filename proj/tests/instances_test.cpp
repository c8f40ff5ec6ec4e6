#include "aus/instances.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "aus/labeling.hpp"
#include "aus/oracle.hpp"

namespace aus {
namespace {

TEST(RandomInstance, DeterministicPerSeed) {
  const auto a = random_instance(17, 12, RandomParams{});
  const auto b = random_instance(17, 12, RandomParams{});
  EXPECT_EQ(a.instance.travel_slots, b.instance.travel_slots);
  EXPECT_EQ(a.instance.travel_energy, b.instance.travel_energy);
  EXPECT_EQ(a.instance.cost_fns, b.instance.cost_fns);
  const auto c = random_instance(18, 12, RandomParams{});
  EXPECT_NE(a.instance.travel_energy, c.instance.travel_energy);
}

TEST(RandomInstance, GeometryAndValidity) {
  const RandomParams p;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_instance(seed, 20, p);
    const Instance& in = g.instance;
    EXPECT_TRUE(validate(in).empty());
    EXPECT_EQ(in.horizon_slots, 100);
    EXPECT_DOUBLE_EQ(in.battery_capacity, 25.0);
    for (int i = 0; i <= in.num_sns; ++i) {
      EXPECT_LE(std::hypot(g.coordinates[i].x, g.coordinates[i].y), p.disk_radius_m + 1e-9);
      for (int j = 0; j <= in.num_sns; ++j) {
        if (i == j) continue;
        EXPECT_LE(in.travel(i, j), 9);
        EXPECT_GE(in.energy(i, j), p.min_travel_min - 1e-12);
        EXPECT_EQ(in.travel(i, j), static_cast<int>(std::ceil(in.energy(i, j) - 1e-12)));
      }
    }
    for (const auto& f : in.cost_fns) {
      const auto n = f.kind_name();
      EXPECT_TRUE(n == "linear" || n == "quadratic" || n == "exponential") << n;
    }
  }
}

TEST(Reduction, Construction) {
  const Instance in = reduction_instance(Graph{3, {{1, 2}, {2, 3}}});
  EXPECT_EQ(in.num_sns, 3);
  EXPECT_EQ(in.horizon_slots, 4 * 3 + 14);
  EXPECT_EQ(in.travel(1, 2), 4);
  EXPECT_EQ(in.travel(1, 3), 16);
  EXPECT_EQ(in.travel(0, 2), 8);
  EXPECT_EQ(in.cost(1)(4 * 3 + 13), 0.0);
  EXPECT_EQ(in.cost(1)(4 * 3 + 14), 100.0);
  EXPECT_TRUE(validate(in).empty());
}

TEST(Reduction, PathAndTriangleHaveZeroCost) {
  EXPECT_TRUE(zero_cost_schedule(reduction_instance(Graph{3, {{1, 2}, {2, 3}}})));
  EXPECT_TRUE(zero_cost_schedule(reduction_instance(Graph{3, {{1, 2}, {2, 3}, {1, 3}}})));
}

TEST(Reduction, EdgelessGraphCostsAtLeastOneStep) {
  const Instance in = reduction_instance(Graph{3, {}});
  EXPECT_FALSE(zero_cost_schedule(in));
  // Step costs are 0 or 100, so any schedule without zero cost pays >= 100.
  const double bound = 100.0 / (3.0 * (4 * 3 + 14));
  EXPECT_GE(gla_solve(in, 4).report.normalized_cost, bound - 1e-12);
}

TEST(EdgeList, Parsing) {
  const Graph g = read_edge_list("# path\n1 2\n2 3  # tail\n\n", 5);
  EXPECT_EQ(g.num_nodes, 5);
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(read_edge_list("1 4\n").num_nodes, 4);
  EXPECT_THROW(read_edge_list("1 x\n"), std::invalid_argument);
}

}  // namespace
}  // namespace aus
