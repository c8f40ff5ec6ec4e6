// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aus/bench.hpp"
#include "aus/greedy.hpp"
#include "aus/instances.hpp"
#include "aus/labeling.hpp"
#include "aus/oracle.hpp"
#include "aus/symmetric.hpp"

namespace {

using namespace aus;
using Clock = std::chrono::steady_clock;

constexpr double kAbsTol = 1e-9;
constexpr double kRelTol = 1e-8;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool rel_le(double x, double y) { return x - y <= kRelTol * std::max(1.0, std::abs(y)); }

struct Ledger {
  int failures = 0;
  void line(int id, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("%s C%d %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
  }
};

// Replay check shared by every criterion that produces schedules.
struct ReplayAudit {
  std::size_t checked = 0;
  std::size_t mismatched = 0;
  void check(const Solution& s, const Instance& in) {
    ++checked;
    if (std::abs(replay(s.schedule, in).cumulative_cost - s.report.cumulative_cost) > kAbsTol) {
      ++mismatched;
    }
  }
};

// Criterion 1: unbounded GLA equals the oracle on small instances.
void oracle_equivalence(Ledger& ledger, ReplayAudit& audit) {
  constexpr int kInstances = 50;
  const auto start = Clock::now();
  int mismatches = 0;
  std::vector<std::uint64_t> bad;
  double worst_gap = 0.0;
  for (int k = 0; k < kInstances; ++k) {
    const std::uint64_t seed = 1 + k;
    const Instance in = desk_instance(seed);
    const Solution oracle = oracle_solve(in);
    const Solution gla = gla_solve(in, kUnboundedLabels);
    audit.check(oracle, in);
    audit.check(gla, in);
    const double gap = gla.report.cumulative_cost - oracle.report.cumulative_cost;
    worst_gap = std::max(worst_gap, std::abs(gap));
    if (std::abs(gap) > kAbsTol) {
      ++mismatches;
      bad.push_back(seed);
    }
  }
  const double secs = seconds_since(start);

  // Diagnostic only: the same search without dominance at SN nodes.
  int ablation_matches = 0;
  for (int k = 0; k < kInstances; ++k) {
    const Instance in = desk_instance(1 + k);
    GlaOptions options;
    options.max_labels = kUnboundedLabels;
    options.sensor_dominance = false;
    LabelSearch search(in, options);
    search.run();
    ablation_matches += std::abs(search.best().report.cumulative_cost -
                                 oracle_solve(in).report.cumulative_cost) <= kAbsTol;
  }
  std::ostringstream os;
  os << "oracle equivalence: " << kInstances - mismatches << "/" << kInstances
     << " instances match (tol 1e-9), worst gap " << worst_gap << ", " << secs << " s";
  if (!bad.empty()) {
    os << "; mismatched seeds";
    for (auto s : bad) os << " " << s;
  }
  os << "; without SN-node dominance " << ablation_matches << "/" << kInstances << " match";
  ledger.line(1, mismatches == 0 && secs < 60.0, os.str());
}

// Criterion 2: every label removed by dominance at a BS node does no better
// than its dominator under every common suffix.
void bs_dominance_soundness(Ledger& ledger) {
  constexpr int kInstances = 20;
  std::size_t pairs = 0;
  std::size_t suffixes = 0;
  std::size_t violations = 0;

  auto replayer_for = [](const Instance& in, const Label& l) {
    AoiState st(in.num_sns);
    st.slot = l.slot;
    st.delivered = l.onboard;
    st.onboard = l.onboard;
    st.aoi = l.aoi;
    return Replayer(in, st, l.energy, l.cost);
  };

  for (int k = 0; k < kInstances; ++k) {
    const Instance in = desk_instance(100 + k, 3, 6, 10);
    std::vector<std::pair<Label, Label>> removed;  // (dominator, dominated)
    GlaOptions options{kUnboundedLabels, [&](const InsertEvent& e) {
                         if (e.location != kBaseStation) return;
                         if (e.verdict.outcome == InsertOutcome::kDiscardedDominated) {
                           removed.emplace_back(e.arena[e.verdict.dominator], e.candidate);
                         }
                         for (LabelId id : e.verdict.dominated) {
                           removed.emplace_back(e.candidate, e.arena[id]);
                         }
                       }};
    LabelSearch search(in, options);
    search.run();

    for (const auto& [winner, loser] : removed) {
      ++pairs;
      enumerate_schedules(in, replayer_for(in, loser), false,
                          [&](const Schedule& suffix, const Replayer& loser_end) {
                            ++suffixes;
                            Replayer w = replayer_for(in, winner);
                            try {
                              for (const auto& a : suffix.actions) w.apply(a);
                              w.finish();
                            } catch (const ReplayError&) {
                              ++violations;  // dominator cannot follow the suffix
                              return;
                            }
                            if (w.cost() > loser_end.cost() + kAbsTol) ++violations;
                          });
    }
  }
  std::ostringstream os;
  os << "BS dominance soundness: " << kInstances << " instances, " << pairs
     << " removed labels, " << suffixes << " suffixes, " << violations << " violations";
  ledger.line(2, pairs > 0 && violations == 0, os.str());
}

CostFn random_cost_fn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (rng() % 5) {
    case 0:
      return CostFn::linear(0.1 + 2.0 * u(rng));
    case 1:
      return CostFn::quadratic(0.01 + 0.2 * u(rng));
    case 2:
      return CostFn::exponential(0.1 + u(rng), 0.01 + 0.3 * u(rng));
    case 3: {
      const double low = 3.0 * u(rng);
      return CostFn::step(1.0 + 10.0 * u(rng), low, low + 5.0 * u(rng));
    }
    default: {
      std::vector<std::pair<double, double>> pts;
      double x = 0.0;
      double y = u(rng);
      for (int i = 0; i < 4; ++i) {
        pts.emplace_back(x, y);
        x += 0.5 + 4.0 * u(rng);
        y += 3.0 * u(rng);
      }
      return CostFn::piecewise_linear(std::move(pts));
    }
  }
}

double exhaustive_symmetric(const SymmetricInstance& in) {
  const std::size_t m = in.departures.size();
  std::vector<Location> visits(m, 1);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    best = std::min(best, evaluate_visits(in, visits).total_cost);
    std::size_t k = 0;
    while (k < m && visits[k] == in.num_sns) visits[k++] = 1;
    if (k == m) break;
    ++visits[k];
  }
  return best;
}

// Criterion 3: max-AoI policy equals the exhaustive minimum.
void symmetric_optimality(Ledger& ledger, ReplayAudit& audit) {
  constexpr int kInstances = 100;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  double worst = 0.0;
  for (int k = 0; k < kInstances; ++k) {
    SymmetricInstance in;
    in.num_sns = 1 + static_cast<int>(rng() % 4);
    in.radius = 1 + static_cast<int>(rng() % 3);
    in.cost = random_cost_fn(rng);
    const int trips = 1 + static_cast<int>(rng() % 6);
    double t = 0.0;
    for (int m = 0; m < trips; ++m) {
      in.departures.push_back(t);
      t += 2.0 * in.radius + static_cast<int>(rng() % 4);
    }
    in.horizon_end = t;
    if (k % 2 == 1) {
      for (int s = 0; s < in.num_sns; ++s) in.initial_aoi.push_back(10.0 * u(rng));
    }
    const double policy = optimal_policy(in).total_cost;
    const double best = exhaustive_symmetric(in);
    const double rel = (policy - best) / std::max(1.0, std::abs(best));
    worst = std::max(worst, rel);
    if (!rel_le(policy, best)) ++mismatches;

    const Instance slotted = to_slotted(in, RechargeModel{1.0, 1});
    audit.check(symmetric_solve(slotted), slotted);
  }
  std::ostringstream os;
  os << "symmetric optimality: " << kInstances - mismatches << "/" << kInstances
     << " policies equal the exhaustive minimum (rel tol 1e-8), worst excess " << worst;
  ledger.line(3, mismatches == 0, os.str());
}

// Criterion 4: visiting the oldest SN never costs more than any other visit.
void oldest_first_sign(Ledger& ledger) {
  constexpr int kDraws = 1000;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kDraws; ++k) {
    const int sns = 1 + static_cast<int>(rng() % 6);
    std::vector<double> a0(sns);
    for (double& a : a0) a = 20.0 * u(rng);
    const double r = 0.2 + 3.0 * u(rng);
    const double dt = 2.0 * r + 10.0 * u(rng);
    const CostFn f = random_cost_fn(rng);
    const Location oldest =
        static_cast<Location>(std::max_element(a0.begin(), a0.end()) - a0.begin()) + 1;
    const Location other = 1 + static_cast<Location>(rng() % sns);
    const double h_star = trip_cost(oldest, a0, dt, r, f);
    const double h_i = trip_cost(other, a0, dt, r, f);
    worst = std::max(worst, (h_star - h_i) / std::max(1.0, std::abs(h_i)));
    if (!rel_le(h_star, h_i)) ++violations;
  }
  std::ostringstream os;
  os << "oldest-first sign: " << kDraws << " draws, " << violations
     << " violations (rel tol 1e-8), max (h* - h_i)/|h_i| " << worst;
  ledger.line(4, violations == 0, os.str());
}

bool has_hamiltonian_path(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.num_nodes + 1, std::vector<bool>(g.num_nodes + 1));
  for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = true;
  std::vector<int> order(g.num_nodes);
  std::iota(order.begin(), order.end(), 1);
  do {
    bool ok = true;
    for (std::size_t k = 1; ok && k < order.size(); ++k) ok = adj[order[k - 1]][order[k]];
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::vector<Graph> nonisomorphic_graphs_on_4() {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) slots.emplace_back(i, j);
  }
  auto index_of = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<int>(std::find(slots.begin(), slots.end(), std::pair{i, j}) -
                            slots.begin());
  };
  std::set<int> seen;
  std::vector<Graph> out;
  for (int mask = 0; mask < (1 << 6); ++mask) {
    int canonical = mask;
    std::vector<int> perm{1, 2, 3, 4};
    do {
      int image = 0;
      for (int e = 0; e < 6; ++e) {
        if (mask >> e & 1) {
          image |= 1 << index_of(perm[slots[e].first - 1], perm[slots[e].second - 1]);
        }
      }
      canonical = std::min(canonical, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(canonical).second) continue;
    Graph g{4, {}};
    for (int e = 0; e < 6; ++e) {
      if (canonical >> e & 1) g.edges.push_back(slots[e]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Criterion 5: zero-cost feasibility of the reduction equals Hamiltonicity.
void reduction_correctness(Ledger& ledger, ReplayAudit& audit) {
  const auto graphs = nonisomorphic_graphs_on_4();
  int agree = 0;
  int hamiltonian = 0;
  for (const Graph& g : graphs) {
    const Instance in = reduction_instance(g);
    const auto zero = zero_cost_schedule(in);
    const bool ham = has_hamiltonian_path(g);
    hamiltonian += ham;
    if (zero.has_value() == ham) ++agree;
    if (zero) {
      Solution s;
      s.schedule = *zero;
      s.report.cumulative_cost = 0.0;
      audit.check(s, in);
    }
  }
  std::ostringstream os;
  os << "reduction: " << agree << "/" << graphs.size() << " graphs agree ("
     << hamiltonian << " with a Hamiltonian path)";
  ledger.line(5, graphs.size() == 11 && agree == static_cast<int>(graphs.size()), os.str());
}

// Criteria 6 and 7 on the 20-seed ensemble.
void ensemble(Ledger& ledger, ReplayAudit& audit) {
  constexpr int kSeeds = 20;
  const std::vector<std::size_t> ks{1, 2, 5, 10};
  RandomParams params;
  params.horizon_minutes = 100.0;
  std::vector<Instance> instances;
  for (int k = 0; k < kSeeds; ++k) instances.push_back(random_instance(1 + k, 20, params).instance);

  auto timed = [&](const std::function<Solution(const Instance&)>& solve, double& mean_cost,
                   double& mean_ms) {
    mean_cost = 0.0;
    mean_ms = 0.0;
    for (const Instance& in : instances) {
      const auto start = Clock::now();
      const Solution s = solve(in);
      mean_ms += 1e3 * seconds_since(start);
      mean_cost += s.report.normalized_cost;
      audit.check(s, in);
    }
    mean_cost /= kSeeds;
    mean_ms /= kSeeds;
  };

  double greedy_cost = 0.0;
  double greedy_ms = 0.0;
  timed([](const Instance& in) { return greedy_solve(in); }, greedy_cost, greedy_ms);
  std::vector<double> costs(ks.size());
  std::vector<double> ms(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::size_t k = ks[i];
    timed([k](const Instance& in) { return gla_solve(in, k); }, costs[i], ms[i]);
  }

  const double improvement = (greedy_cost - costs[0]) / greedy_cost;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "GLA vs greedy (S=20, T=100, K=1, %d seeds): GLA %.4f, greedy %.4f, "
                "improvement %.2f%% (strictly below: %s; target >= 5%%)",
                kSeeds, costs[0], greedy_cost, 100.0 * improvement,
                costs[0] < greedy_cost ? "yes" : "no");
  ledger.line(6, costs[0] < greedy_cost && improvement >= 0.05, buf);

  bool runtime_increasing = true;
  std::ostringstream os;
  os << "K trend:";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::snprintf(buf, sizeof buf, " K=%zu cost %.4f %.1f ms;", ks[i], costs[i], ms[i]);
    os << buf;
    if (i > 0 && !(ms[i] > ms[i - 1])) runtime_increasing = false;
  }
  os << " cost(10) <= cost(1): " << (costs.back() <= costs.front() ? "yes" : "no")
     << ", runtime strictly increasing: " << (runtime_increasing ? "yes" : "no");
  ledger.line(7, costs.back() <= costs.front() && runtime_increasing, os.str());
}

// Criterion 9: instrumented label store.
void capacity_invariant(Ledger& ledger) {
  std::size_t events = 0;
  std::size_t over = 0;
  std::size_t dominated_pairs = 0;
  auto audit = [&](const Instance& in, std::size_t cap) {
    GlaOptions options{cap, [&](const InsertEvent& e) {
                         ++events;
                         if (e.cell.ids.size() > cap) ++over;
                         for (LabelId x : e.cell.ids) {
                           for (LabelId y : e.cell.ids) {
                             if (x != y && dominates(e.arena[x], e.arena[y])) ++dominated_pairs;
                           }
                         }
                       }};
    LabelSearch search(in, options);
    search.run();
  };
  for (int k = 0; k < 50; ++k) {
    for (std::size_t cap : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
      audit(desk_instance(1 + k), cap);
    }
  }
  for (int k = 0; k < 2; ++k) audit(random_instance(1 + k, 20, RandomParams{}).instance, 10);
  std::ostringstream os;
  os << "label capacity: " << events << " insertions audited, " << over
     << " cells above K, " << dominated_pairs << " stored dominated pairs";
  ledger.line(9, over == 0 && dominated_pairs == 0 && events > 0, os.str());
}

}  // namespace

int main() {
  Ledger ledger;
  ReplayAudit audit;
  oracle_equivalence(ledger, audit);
  bs_dominance_soundness(ledger);
  symmetric_optimality(ledger, audit);
  oldest_first_sign(ledger);
  reduction_correctness(ledger, audit);
  ensemble(ledger, audit);
  {
    std::ostringstream os;
    os << "replay consistency: " << audit.checked << " solutions, " << audit.mismatched
       << " differ from replay by more than 1e-9";
    ledger.line(8, audit.mismatched == 0 && audit.checked > 0, os.str());
  }
  capacity_invariant(ledger);
  std::printf("%d of 9 criteria failed\n", ledger.failures);
  return ledger.failures == 0 ? 0 : 1;
}
