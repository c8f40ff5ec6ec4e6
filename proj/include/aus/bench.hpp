#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aus/instances.hpp"
#include "aus/labeling.hpp"
#include "aus/model.hpp"

namespace aus {

enum class Algo { kGla, kGreedy, kOracle, kSymmetric };

std::string to_string(Algo algo);
std::optional<Algo> parse_algo(const std::string& name);

Solution run_algorithm(Algo algo, const Instance& instance, std::size_t max_labels);

enum class SweepAxis { kHorizon, kSensors, kLabels };

struct SweepConfig {
  SweepAxis axis = SweepAxis::kSensors;
  std::vector<int> values;
  int seeds = 20;
  std::uint64_t first_seed = 1;
  int num_sns = 20;           // when not swept
  double horizon_min = 100.0; // when not swept
  std::size_t max_labels = 1; // when not swept
  std::vector<Algo> algos{Algo::kGla, Algo::kGreedy};
  RandomParams params;
  bool timing = true;  // false writes 0 runtimes so output is reproducible
  int threads = 1;
};

struct SweepRow {
  int value = 0;
  Algo algo = Algo::kGla;
  double mean_cost = 0.0;  // normalized cost
  double std_cost = 0.0;
  double mean_runtime_ms = 0.0;
  std::vector<double> costs;  // per seed, in seed order
};

/// Default points: T in 25..150 step 25, S in 5..25 step 5, K in 1..12.
std::vector<int> default_sweep_values(SweepAxis axis);

/// Evaluates every (point, seed, algorithm) combination. Each solver's
/// schedule is replayed and the replayed cost must match its report.
/// Results are merged by (point, algorithm) in a fixed order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Columns: <axis>,algo,mean_cost,std,mean_runtime_ms
void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepRow>& rows);

/// Small random instance for exhaustive checks: S in [1, max_sns] and
/// N in [min_slots, max_slots] drawn from the seed. Deterministic per seed.
Instance desk_instance(std::uint64_t seed, int max_sns = 3, int min_slots = 6,
                       int max_slots = 12);

/// Oracle, replay and label-store checks on small random instances. Prints
/// one PASS/FAIL line per check; returns true when all pass.
bool run_verification(int seeds, std::uint64_t first_seed, std::ostream& os);

}  // namespace aus
