// Copyright 2026 The knapsack-ca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "kca/bench.h"
#include "kca/cultural.h"
#include "kca/evolution.h"
#include "kca/format.h"
#include "kca/knapsack.h"
#include "kca/oracle.h"

namespace kca::cli {
namespace {

enum class Suite { kPaper, kRandom };
enum class AlgoChoice { kGa, kCa, kBoth };
enum class MethodChoice { kAuto, kDp, kBrute, kGreedy };

// Flags shared by solve and bench that map onto EvolutionConfig.
struct EngineFlags {
  int pop = 100;
  int iters = 50;
  double pc = 0.9;
  std::optional<double> pm;
  FitnessMode fitness = FitnessMode::kPenalized;
  MutationScheme mutation = MutationScheme::kPerIndividual;
  DiversityRule diversity = DiversityRule::kAtMost;
  std::uint64_t seed = 1;

  void Register(CLI::App* app) {
    app->add_option("--pop", pop, "Population size")->capture_default_str();
    app->add_option("--iters", iters, "Generations after the initial one")
        ->capture_default_str();
    app->add_option("--pc", pc, "Base crossover rate P_c")
        ->capture_default_str();
    app->add_option("--pm", pm,
                    "Pin the mutation rate instead of using 1 - p_c");
    app->add_option("--fitness", fitness, "Fitness: penalty or zero")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, FitnessMode>{
                {"penalty", FitnessMode::kPenalized},
                {"zero", FitnessMode::kZeroIfInvalid}},
            CLI::ignore_case));
    app->add_option("--mutation", mutation,
                    "Mutation: individual (one random bit with prob p_m) or "
                    "gene (every bit with prob p_m)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, MutationScheme>{
                {"individual", MutationScheme::kPerIndividual},
                {"gene", MutationScheme::kPerGene}},
            CLI::ignore_case));
    app->add_option("--diversity", diversity,
                    "Belief-space admission: at-most (nearest elite differs in "
                    "at most half the selected items) or at-least (every elite "
                    "differs in at least half)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, DiversityRule>{
                {"at-most", DiversityRule::kAtMost},
                {"at-least", DiversityRule::kAtLeast}},
            CLI::ignore_case));
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
  }

  EvolutionConfig ToConfig() const {
    EvolutionConfig config;
    config.population_size = pop;
    config.max_iterations = iters;
    config.base_crossover_rate = pc;
    if (pm) {
      config.couple_mutation_rate = false;
      config.base_mutation_rate = *pm;
    }
    config.fitness_mode = fitness;
    config.mutation_scheme = mutation;
    config.belief_diversity = diversity;
    config.seed = seed;
    config.Validate();
    return config;
  }
};

std::string ItemList(const Solution& s) {
  std::string items;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    if (!items.empty()) items += ' ';
    items += std::to_string(i + 1);
  }
  return items.empty() ? "(none)" : items;
}

void PrintSolution(std::ostream& out, const Instance& instance,
                   const EvaluatedSolution& e) {
  out << "best value: " << FormatNumber(e.total_value) << '\n'
      << "fitness: " << FormatNumber(e.fitness) << '\n'
      << "items: " << ItemList(e.solution) << '\n'
      << "weight: " << FormatNumber(e.total_weight) << " / "
      << FormatNumber(instance.capacity) << '\n'
      << "feasible: " << (e.feasible() ? "yes" : "no") << '\n';
}

std::string Label(const Instance& instance, const std::string& path) {
  return instance.name.empty() ? path : instance.name;
}

struct SolveFlags {
  std::string path;
  AlgoChoice algo = AlgoChoice::kCa;
  EngineFlags engine;
  std::string trace;
  bool verbose = false;
};

int Solve(const SolveFlags& flags, std::ostream& out) {
  const Instance instance = LoadInstance(flags.path);
  EvolutionConfig config = flags.engine.ToConfig();
  config.record_belief_snapshots = flags.verbose;
  std::ofstream trace_file;
  if (!flags.trace.empty()) {
    trace_file.open(flags.trace);
    if (!trace_file) {
      throw std::runtime_error("cannot write trace file '" + flags.trace + "'");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const RunResult result = flags.algo == AlgoChoice::kGa
                               ? RunGa(instance, config)
                               : RunCa(instance, config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  out << "instance: " << Label(instance, flags.path) << " (n=" << instance.size()
      << ", W=" << FormatNumber(instance.capacity) << ")\n"
      << "algorithm: " << (flags.algo == AlgoChoice::kGa ? "GA" : "CA")
      << '\n';
  PrintSolution(out, instance, result.best);
  if (instance.known_optimum) {
    out << "known optimum: " << FormatNumber(*instance.known_optimum) << '\n';
  }
  out << "elapsed: " << FormatNumber(seconds) << " s\n";
  if (trace_file.is_open()) WriteTraceCsv(result.trace, trace_file);
  return kExitOk;
}

struct BenchFlags {
  Suite suite = Suite::kPaper;
  AlgoChoice algo = AlgoChoice::kBoth;
  std::optional<int> runs;
  EngineFlags engine;
  std::string out;
  int jobs = 1;
  bool timing = false;
};

void PrintStatsTable(std::ostream& out, const std::vector<RunStats>& stats) {
  out << "P      Method  Runs  Best        Worst       Average     Median      "
         "Std.dev     Avg.time(s)  OP\n";
  auto cell = [&](const std::string& s, std::size_t width) {
    out << s << ' ';
    for (std::size_t i = s.size() + 1; i < width; ++i) out << ' ';
  };
  for (const auto& s : stats) {
    cell(s.instance_name, 7);
    cell(std::string(AlgorithmName(s.algorithm)), 8);
    cell(std::to_string(s.runs), 6);
    cell(FormatNumber(s.best), 12);
    cell(FormatNumber(s.worst), 12);
    cell(FormatNumber(s.average), 12);
    cell(FormatNumber(s.median), 12);
    cell(FormatNumber(s.std_dev), 12);
    char time[32];
    std::snprintf(time, sizeof time, "%.4f", s.avg_time_seconds);
    cell(time, 13);
    out << (s.optimum ? FormatNumber(*s.optimum) : "-") << '\n';
  }
}

int Bench(const BenchFlags& flags, std::ostream& out) {
  const int runs = flags.runs.value_or(flags.suite == Suite::kPaper ? 20 : 10);
  if (runs < 1) throw std::invalid_argument("--runs must be at least 1");
  if (flags.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  const EvolutionConfig config = flags.engine.ToConfig();

  std::ofstream csv;
  if (!flags.out.empty()) {
    csv.open(flags.out);
    if (!csv) throw std::runtime_error("cannot write '" + flags.out + "'");
  }

  std::vector<Instance> instances;
  if (flags.suite == Suite::kPaper) {
    instances = BuiltinProblems();
  } else {
    instances = RandomSuite(flags.engine.seed);
    for (auto& instance : instances) {
      instance.known_optimum = DpSolve(instance).optimum_value;
    }
  }

  std::vector<Algorithm> algorithms;
  if (flags.algo != AlgoChoice::kCa) algorithms.push_back(Algorithm::kGa);
  if (flags.algo != AlgoChoice::kGa) algorithms.push_back(Algorithm::kCa);

  std::vector<RunStats> stats;
  for (const auto& instance : instances) {
    for (Algorithm algorithm : algorithms) {
      stats.push_back(
          RunExperiment(instance, algorithm, config, runs, flags.jobs).stats);
    }
  }

  PrintStatsTable(out, stats);
  out << "(std.dev is the population standard deviation over " << runs
      << " runs; run i uses seed " << flags.engine.seed << " + i)\n";
  if (flags.suite == Suite::kRandom) {
    out << "\nPublished results for other methods on different random "
           "instances of the same sizes (context only):\n";
    for (const auto& row : LargeSuiteLiterature()) {
      out << row.problem << ' ' << row.method << ": best "
          << FormatNumber(row.best) << ", worst " << FormatNumber(row.worst)
          << ", average " << FormatNumber(row.average) << ", median "
          << FormatNumber(row.median) << '\n';
    }
  }
  if (csv.is_open()) {
    WriteStatsCsv(stats, csv, flags.timing);
    csv.close();
    if (!csv) throw std::runtime_error("failed writing '" + flags.out + "'");
  }
  return kExitOk;
}

struct GenFlags {
  std::optional<std::size_t> n;
  std::optional<double> capacity;
  std::string builtin;
  std::uint64_t seed = 1;
  std::string out;
};

int Gen(const GenFlags& flags, std::ostream& out) {
  Instance instance;
  if (!flags.builtin.empty()) {
    auto found = FindBuiltinProblem(flags.builtin);
    if (!found) {
      throw std::invalid_argument("unknown builtin problem '" + flags.builtin +
                                  "' (expected P1..P10)");
    }
    instance = std::move(*found);
  } else {
    if (!flags.n || !flags.capacity) {
      throw std::invalid_argument("gen needs --n and --capacity, or --builtin");
    }
    if (*flags.n < 1) throw std::invalid_argument("--n must be at least 1");
    if (!(*flags.capacity > 0.0)) {
      throw std::invalid_argument("--capacity must be positive");
    }
    instance = GenerateRandomInstance(*flags.n, *flags.capacity, flags.seed);
  }
  if (flags.out.empty()) {
    SerializeInstance(instance, out);
    return kExitOk;
  }
  std::ofstream file(flags.out);
  if (!file) throw std::runtime_error("cannot write '" + flags.out + "'");
  SerializeInstance(instance, file);
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + flags.out + "'");
  return kExitOk;
}

struct OracleFlags {
  std::string path;
  MethodChoice method = MethodChoice::kAuto;
};

int Oracle(const OracleFlags& flags, std::ostream& out) {
  const Instance instance = LoadInstance(flags.path);
  OracleResult result;
  switch (flags.method) {
    case MethodChoice::kAuto:
      result = ExactSolve(instance);
      break;
    case MethodChoice::kDp:
      result = DpSolve(instance);
      break;
    case MethodChoice::kBrute:
      result = BruteForceSolve(instance);
      break;
    case MethodChoice::kGreedy:
      result = GreedySolve(instance);
      break;
  }
  out << "instance: " << Label(instance, flags.path) << '\n'
      << "method: " << OracleMethodName(result.method) << '\n'
      << (result.method == OracleMethod::kGreedy ? "value: " : "optimum: ")
      << FormatNumber(result.optimum_value) << '\n'
      << "witness: " << result.witness.ToString() << '\n'
      << "items: " << ItemList(result.witness) << '\n'
      << "weight: " << FormatNumber(TotalWeight(instance, result.witness))
      << " / " << FormatNumber(instance.capacity) << '\n';
  if (instance.known_optimum) {
    out << "listed optimum: " << FormatNumber(*instance.known_optimum) << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cultural algorithm and GA solvers for the 0-1 knapsack problem",
               "kca"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run GA or CA on an instance");
  solve_cmd->add_option("instance", solve.path, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "ga or ca")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AlgoChoice>{{"ga", AlgoChoice::kGa},
                                            {"ca", AlgoChoice::kCa}},
          CLI::ignore_case));
  solve.engine.Register(solve_cmd);
  solve_cmd->add_option("--trace", solve.trace, "Write the convergence CSV");
  solve_cmd->add_flag("--verbose", solve.verbose,
                      "Add belief-space snapshots to the trace");

  BenchFlags bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Multi-run statistics over a problem suite");
  bench_cmd->add_option("--suite", bench.suite, "paper (P1-P10) or random")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Suite>{{"paper", Suite::kPaper},
                                       {"random", Suite::kRandom}},
          CLI::ignore_case));
  bench_cmd->add_option("--algo", bench.algo, "ga, ca or both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, AlgoChoice>{{"ga", AlgoChoice::kGa},
                                            {"ca", AlgoChoice::kCa},
                                            {"both", AlgoChoice::kBoth}},
          CLI::ignore_case));
  bench_cmd->add_option("--runs", bench.runs,
                        "Independent runs per instance (default 20 for paper, "
                        "10 for random)");
  bench.engine.Register(bench_cmd);
  bench_cmd->add_option("--out", bench.out, "Write the stats CSV");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->capture_default_str();
  bench_cmd->add_flag("--timing", bench.timing,
                      "Fill avg_time_s in the CSV (output is then not "
                      "reproducible byte for byte)");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance file");
  gen_cmd->add_option("--n", gen.n, "Item count");
  gen_cmd->add_option("--capacity", gen.capacity, "Knapsack capacity");
  gen_cmd->add_option("--builtin", gen.builtin,
                      "Export a builtin problem (P1..P10) instead");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

  OracleFlags oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exact optimum or greedy baseline");
  oracle_cmd->add_option("instance", oracle.path, "Instance file")->required();
  oracle_cmd->add_option("--method", oracle.method, "auto, dp, brute or greedy")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MethodChoice>{{"auto", MethodChoice::kAuto},
                                              {"dp", MethodChoice::kDp},
                                              {"brute", MethodChoice::kBrute},
                                              {"greedy", MethodChoice::kGreedy}},
          CLI::ignore_case));

  std::vector<const char*> argv{"kca"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return Solve(solve, out);
    if (bench_cmd->parsed()) return Bench(bench, out);
    if (gen_cmd->parsed()) return Gen(gen, out);
    if (oracle_cmd->parsed()) return Oracle(oracle, out);
  } catch (const std::exception& e) {
    err << "kca: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kca::cli
