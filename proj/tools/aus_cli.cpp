// aus: generate instances, run solvers, sweep ensembles, verify.
//
// Exit codes: 0 ok, 1 failure, 2 bad usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aus/bench.hpp"
#include "aus/instances.hpp"
#include "aus/io.hpp"
#include "aus/labeling.hpp"
#include "aus/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int env_threads() {
  if (const char* v = std::getenv("AUS_THREADS")) {
    try {
      return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed AUS_THREADS=" << v << "\n";
    }
  }
  return 1;
}

std::size_t parse_k(const std::string& text) {
  if (text == "inf" || text == "unbounded") return aus::kUnboundedLabels;
  const long long k = std::stoll(text);
  if (k < 1) throw CLI::ValidationError("--k", "must be >= 1 or 'inf'");
  return static_cast<std::size_t>(k);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    aus::write_file(path, content);
  }
}

aus::Instance load_instance(const std::string& path) {
  aus::Instance in =
      aus::instance_from_json(nlohmann::json::parse(aus::read_file(path)));
  if (const auto violations = aus::validate_structure(in); !violations.empty()) {
    throw aus::FormatError("instance " + path + " failed validation:\n" +
                           aus::format_violations(violations));
  }
  if (const auto violations = aus::validate(in); !violations.empty()) {
    std::cerr << "warning: " << aus::format_violations(violations);
  }
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AoI-optimal UAV data collection scheduling"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write an instance file");
  gen->require_subcommand(1);
  std::string out_path;

  auto* gen_random = gen->add_subcommand("random", "Random disk instance");
  std::uint64_t seed = 1;
  int sns = 20;
  double horizon = 100.0;
  std::string coords_path;
  gen_random->add_option("--seed", seed, "RNG seed");
  gen_random->add_option("--sns", sns, "Number of sensor nodes")->check(CLI::PositiveNumber);
  gen_random->add_option("--horizon", horizon, "Horizon T in minutes")->check(CLI::PositiveNumber);
  gen_random->add_option("--out", out_path, "Output file (default stdout)");
  gen_random->add_option("--coords", coords_path, "Also write coordinates as JSON");

  auto* gen_reduction = gen->add_subcommand("reduction", "Hamiltonian-path reduction");
  std::string edges_path;
  int nodes = 0;
  gen_reduction->add_option("--edges", edges_path, "Edge list, one \"i j\" per line")
      ->required();
  gen_reduction->add_option("--nodes", nodes, "Node count if isolated nodes exist");
  gen_reduction->add_option("--out", out_path, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one solver on an instance");
  std::string algo_name = "gla";
  std::string k_text = "1";
  std::string instance_path;
  std::string schedule_path;
  std::string report_path;
  std::string trace_path;
  solve->add_option("--algo", algo_name, "gla|greedy|oracle|symmetric")
      ->check(CLI::IsMember({"gla", "greedy", "oracle", "symmetric"}));
  solve->add_option("--k", k_text, "Labels per node for gla (integer or 'inf')");
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--schedule-out", schedule_path, "Schedule JSON (default stdout)");
  solve->add_option("--report-out", report_path, "Report JSON");
  solve->add_option("--trace-csv", trace_path, "Per-slot trace CSV");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Mean normalized cost over a seed ensemble");
  std::string vary;
  aus::SweepConfig config;
  std::vector<int> values;
  bool no_timing = false;
  std::string sweep_k = "1";
  sweep->add_option("--vary", vary, "t|s|k")->required()->check(CLI::IsMember({"t", "s", "k"}));
  sweep->add_option("--seeds", config.seeds, "Instances per point")->check(CLI::PositiveNumber);
  sweep->add_option("--first-seed", config.first_seed, "Seed of the first instance");
  sweep->add_option("--values", values, "Points to evaluate (default: built-in range)")
      ->delimiter(',');
  sweep->add_option("--sns", config.num_sns, "S when not varied")->check(CLI::PositiveNumber);
  sweep->add_option("--horizon", config.horizon_min, "T in minutes when not varied");
  sweep->add_option("--k", sweep_k, "K when not varied");
  sweep->add_flag("--no-timing", no_timing, "Write 0 for runtimes (reproducible output)");
  sweep->add_option("--out", out_path, "CSV file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Oracle and invariant checks on small instances");
  int verify_seeds = 30;
  std::uint64_t verify_first = 1;
  verify->add_option("--seeds", verify_seeds, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--first-seed", verify_first, "Seed of the first instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_random->parsed()) {
      aus::RandomParams params;
      params.horizon_minutes = horizon;
      const auto generated = aus::random_instance(seed, sns, params);
      emit(out_path, aus::to_json(generated.instance).dump(2) + "\n");
      if (!coords_path.empty()) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : generated.coordinates) pts.push_back({p.x, p.y});
        aus::write_file(coords_path, nlohmann::json{{"coordinates_m", pts}}.dump(2) + "\n");
      }
      return kOk;
    }
    if (gen_reduction->parsed()) {
      const auto graph = aus::read_edge_list(aus::read_file(edges_path), nodes);
      emit(out_path, aus::to_json(aus::reduction_instance(graph)).dump(2) + "\n");
      return kOk;
    }
    if (solve->parsed()) {
      const aus::Instance instance = load_instance(instance_path);
      const auto algo = *aus::parse_algo(algo_name);
      const aus::Solution solution = aus::run_algorithm(algo, instance, parse_k(k_text));
      emit(schedule_path, aus::to_json(solution.schedule).dump(2) + "\n");
      if (!report_path.empty()) {
        aus::write_file(report_path, aus::to_json(solution.report).dump(2) + "\n");
      }
      if (!trace_path.empty()) {
        std::ostringstream csv;
        aus::write_trace_csv(csv, solution.report);
        aus::write_file(trace_path, csv.str());
      }
      std::cerr << algo_name << ": cost " << solution.report.cumulative_cost << " (normalized "
                << solution.report.normalized_cost << ")\n";
      return kOk;
    }
    if (sweep->parsed()) {
      config.axis = vary == "t"   ? aus::SweepAxis::kHorizon
                    : vary == "s" ? aus::SweepAxis::kSensors
                                  : aus::SweepAxis::kLabels;
      config.values = values;
      config.max_labels = parse_k(sweep_k);
      config.timing = !no_timing;
      config.threads = env_threads();
      std::ostringstream csv;
      aus::write_sweep_csv(csv, config.axis, aus::run_sweep(config));
      emit(out_path, csv.str());
      return kOk;
    }
    if (verify->parsed()) {
      return aus::run_verification(verify_seeds, verify_first, std::cout) ? kOk : kFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
