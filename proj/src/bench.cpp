#include "aus/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "aus/aoi.hpp"
#include "aus/dominance.hpp"
#include "aus/greedy.hpp"
#include "aus/oracle.hpp"
#include "aus/symmetric.hpp"

namespace aus {

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::kGla:
      return "gla";
    case Algo::kGreedy:
      return "greedy";
    case Algo::kOracle:
      return "oracle";
    case Algo::kSymmetric:
      return "symmetric";
  }
  return "?";
}

std::optional<Algo> parse_algo(const std::string& name) {
  for (Algo a : {Algo::kGla, Algo::kGreedy, Algo::kOracle, Algo::kSymmetric}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

Solution run_algorithm(Algo algo, const Instance& instance, std::size_t max_labels) {
  switch (algo) {
    case Algo::kGla:
      return gla_solve(instance, max_labels);
    case Algo::kGreedy:
      return greedy_solve(instance);
    case Algo::kOracle:
      return oracle_solve(instance);
    case Algo::kSymmetric:
      return symmetric_solve(instance);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::vector<int> default_sweep_values(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kHorizon:
      return {25, 50, 75, 100, 125, 150};
    case SweepAxis::kSensors:
      return {5, 10, 15, 20, 25};
    case SweepAxis::kLabels:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  }
  return {};
}

namespace {

struct Task {
  std::size_t point;
  int seed_index;
  std::size_t algo_index;
};

struct Outcome {
  double cost = 0.0;
  double runtime_ms = 0.0;
};

void run_parallel(std::size_t count, int threads, const std::function<void(std::size_t)>& job) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const std::vector<int> values =
      config.values.empty() ? default_sweep_values(config.axis) : config.values;
  if (config.seeds < 1) throw std::invalid_argument("sweep: seeds must be >= 1");

  // One instance per (point, seed); K sweeps share the ensemble across points.
  std::vector<std::vector<Instance>> instances(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    RandomParams params = config.params;
    int sns = config.num_sns;
    params.horizon_minutes = config.horizon_min;
    if (config.axis == SweepAxis::kHorizon) params.horizon_minutes = values[p];
    if (config.axis == SweepAxis::kSensors) sns = values[p];
    for (int k = 0; k < config.seeds; ++k) {
      instances[p].push_back(random_instance(config.first_seed + k, sns, params).instance);
    }
  }

  std::vector<Task> tasks;
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (int k = 0; k < config.seeds; ++k) {
      for (std::size_t a = 0; a < config.algos.size(); ++a) tasks.push_back({p, k, a});
    }
  }
  std::vector<Outcome> outcomes(tasks.size());

  run_parallel(tasks.size(), config.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    const Instance& instance = instances[task.point][task.seed_index];
    const std::size_t labels = config.axis == SweepAxis::kLabels
                                   ? static_cast<std::size_t>(values[task.point])
                                   : config.max_labels;
    const auto start = std::chrono::steady_clock::now();
    const Solution solution = run_algorithm(config.algos[task.algo_index], instance, labels);
    const auto stop = std::chrono::steady_clock::now();
    const RunReport check = replay(solution.schedule, instance);
    if (std::abs(check.cumulative_cost - solution.report.cumulative_cost) > 1e-9) {
      throw std::runtime_error("sweep: replayed cost differs from reported cost");
    }
    outcomes[i].cost = solution.report.normalized_cost;
    outcomes[i].runtime_ms =
        config.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
  });

  std::vector<SweepRow> rows;
  for (std::size_t p = 0; p < values.size(); ++p) {
    for (std::size_t a = 0; a < config.algos.size(); ++a) {
      SweepRow row;
      row.value = values[p];
      row.algo = config.algos[a];
      double runtime = 0.0;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].point != p || tasks[i].algo_index != a) continue;
        row.costs.push_back(outcomes[i].cost);
        runtime += outcomes[i].runtime_ms;
      }
      const double n = static_cast<double>(row.costs.size());
      double sum = 0.0;
      for (double c : row.costs) sum += c;
      row.mean_cost = sum / n;
      double var = 0.0;
      for (double c : row.costs) var += (c - row.mean_cost) * (c - row.mean_cost);
      row.std_cost = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
      row.mean_runtime_ms = runtime / n;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepRow>& rows) {
  const char* column = axis == SweepAxis::kHorizon ? "T" : axis == SweepAxis::kSensors ? "S" : "K";
  os << column << ",algo,mean_cost,std,mean_runtime_ms\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%s,%.9f,%.9f,%.3f\n", r.value, to_string(r.algo).c_str(),
                  r.mean_cost, r.std_cost, r.mean_runtime_ms);
    os << buf;
  }
}

Instance desk_instance(std::uint64_t seed, int max_sns, int min_slots, int max_slots) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const int sns = std::uniform_int_distribution<int>(1, max_sns)(rng);
    const int slots = std::uniform_int_distribution<int>(min_slots, max_slots)(rng);
    RandomParams params;
    params.horizon_minutes = slots;
    try {
      return random_instance(rng(), sns, params).instance;
    } catch (const std::runtime_error&) {
      if (attempt > 1000) throw;  // the horizon admits no trip at all
    }
  }
}

bool run_verification(int seeds, std::uint64_t first_seed, std::ostream& os) {
  constexpr double kTol = 1e-9;
  bool all_ok = true;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    all_ok = all_ok && ok;
    os << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
  };

  int oracle_mismatch = 0;
  int below_oracle = 0;
  int replay_mismatch = 0;
  int store_violations = 0;
  for (int k = 0; k < seeds; ++k) {
    const Instance in = desk_instance(first_seed + k);
    const Solution oracle = oracle_solve(in);
    const double best = oracle.report.cumulative_cost;

    const Solution exact = gla_solve(in, kUnboundedLabels);
    if (std::abs(exact.report.cumulative_cost - best) > kTol) ++oracle_mismatch;

    std::vector<Solution> others{gla_solve(in, 1), gla_solve(in, 2), greedy_solve(in), exact,
                                 oracle};
    for (const auto& s : others) {
      if (s.report.cumulative_cost < best - kTol) ++below_oracle;
      if (std::abs(replay(s.schedule, in).cumulative_cost - s.report.cumulative_cost) > kTol) {
        ++replay_mismatch;
      }
    }

    for (std::size_t cap : {std::size_t{1}, std::size_t{3}}) {
      GlaOptions options{cap, [&](const InsertEvent& e) {
                           if (e.cell.ids.size() > cap) ++store_violations;
                           for (LabelId x : e.cell.ids) {
                             for (LabelId y : e.cell.ids) {
                               if (x != y && dominates(e.arena[x], e.arena[y])) ++store_violations;
                             }
                           }
                         }};
      LabelSearch search(in, options);
      search.run();
    }
  }
  const std::string n = std::to_string(seeds) + " instances";
  report(oracle_mismatch == 0, "unbounded GLA matches oracle",
         n + ", " + std::to_string(oracle_mismatch) + " mismatches");
  report(below_oracle == 0, "no solver beats the oracle", n);
  report(replay_mismatch == 0, "reported cost equals replay", n);
  report(store_violations == 0, "label cells within K and mutually non-dominated", n);
  return all_ok;
}

}  // namespace aus
