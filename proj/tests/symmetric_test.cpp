#include "aus/symmetric.hpp"

#include <gtest/gtest.h>

#include <random>

namespace aus {
namespace {

SymmetricInstance evenly_spaced(int sns, int trips, double radius, CostFn f, double gap) {
  SymmetricInstance in;
  in.num_sns = sns;
  in.radius = radius;
  in.cost = std::move(f);
  for (int k = 0; k < trips; ++k) in.departures.push_back(k * gap);
  in.horizon_end = trips * gap;
  return in;
}

double exhaustive_minimum(const SymmetricInstance& in) {
  const std::size_t m = in.departures.size();
  std::vector<Location> visits(m, 1);
  double best = 1e300;
  for (;;) {
    best = std::min(best, evaluate_visits(in, visits).total_cost);
    std::size_t k = 0;
    while (k < m && visits[k] == in.num_sns) visits[k++] = 1;
    if (k == m) break;
    ++visits[k];
  }
  return best;
}

TEST(TripCost, SingleSensorTightInterval) {
  const std::vector<double> aoi{0.0};
  EXPECT_DOUBLE_EQ(trip_cost(1, aoi, 2.0, 1.0, CostFn::linear(1.0)), 1.0);
}

TEST(TripCost, ConstantCostIgnoresChoice) {
  const CostFn c = CostFn::step(-1.0, 0.0, 3.0);  // 3 everywhere on x >= 0
  const std::vector<double> aoi{4.0, 0.0, 9.0};
  for (Location i = 1; i <= 3; ++i) EXPECT_NEAR(trip_cost(i, aoi, 7.0, 2.0, c), 9.0, 1e-12);
}

TEST(TripCost, RejectsShortInterval) {
  const std::vector<double> aoi{0.0};
  EXPECT_THROW(trip_cost(1, aoi, 1.5, 1.0, CostFn::linear(1.0)), std::invalid_argument);
}

TEST(OptimalPolicy, RoundRobinFromZero) {
  const auto in = evenly_spaced(3, 6, 1.0, CostFn::linear(1.0), 3.0);
  EXPECT_EQ(optimal_policy(in).visits, (std::vector<Location>{1, 2, 3, 1, 2, 3}));
}

TEST(OptimalPolicy, OldestFirst) {
  auto in = evenly_spaced(3, 1, 1.0, CostFn::linear(1.0), 3.0);
  in.initial_aoi = {5.0, 1.0, 1.0};
  EXPECT_EQ(optimal_policy(in).visits, std::vector<Location>{1});
}

TEST(OptimalPolicy, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 40; ++k) {
    const int sns = 1 + static_cast<int>(rng() % 3);
    const int trips = 1 + static_cast<int>(rng() % 5);
    const double r = 0.5 + u(rng);
    SymmetricInstance in;
    in.num_sns = sns;
    in.radius = r;
    in.cost = CostFn::exponential(0.1 + u(rng), 0.05 + 0.3 * u(rng));
    double t = 0.0;
    for (int m = 0; m < trips; ++m) {
      in.departures.push_back(t);
      t += 2 * r + 3.0 * u(rng);
    }
    in.horizon_end = t;
    for (int s = 0; s < sns; ++s) in.initial_aoi.push_back(5.0 * u(rng));
    const double policy = optimal_policy(in).total_cost;
    const double best = exhaustive_minimum(in);
    EXPECT_LE(policy, best * (1 + 1e-8) + 1e-12) << "case " << k;
  }
}

TEST(AoiAfterTrip, VisitedRestartsFromRadius) {
  const std::vector<double> aoi{2.0, 3.0};
  EXPECT_EQ(aoi_after_trip(2, aoi, 5.0, 1.0), (std::vector<double>{7.0, 4.0}));
}

TEST(Validate, RejectsCrowdedDepartures) {
  auto in = evenly_spaced(2, 3, 1.0, CostFn::linear(1.0), 2.0);
  EXPECT_NO_THROW(validate(in));
  in.departures[1] = 1.5;
  EXPECT_THROW(validate(in), std::invalid_argument);
}

TEST(SymmetricSolve, SlottedRoundRobin) {
  auto sym = evenly_spaced(3, 1, 2.0, CostFn::linear(1.0), 4.0);
  sym.horizon_end = 40.0;
  const Instance in = to_slotted(sym, RechargeModel{1.0, 1});
  const Solution s = symmetric_solve(in);
  std::vector<Location> visits;
  for (const auto& a : s.schedule.actions) {
    if (const auto* f = std::get_if<Fly>(&a); f && f->to != kBaseStation) visits.push_back(f->to);
  }
  ASSERT_GE(visits.size(), 3u);
  for (std::size_t k = 0; k < visits.size(); ++k) EXPECT_EQ(visits[k], Location(k % 3 + 1));
}

TEST(SymmetricSolve, RejectsAsymmetricInstance) {
  auto sym = evenly_spaced(2, 1, 2.0, CostFn::linear(1.0), 4.0);
  Instance in = to_slotted(sym, RechargeModel{});
  in.cost_fns[1] = CostFn::quadratic(1.0);
  EXPECT_THROW(symmetric_solve(in), std::invalid_argument);
}

}  // namespace
}  // namespace aus
