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

// Experiment harness: the ten classic small benchmark problems, the eight
// random large-instance recipes, multi-run statistics and CSV export.

#ifndef KCA_BENCH_H_
#define KCA_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kca/evolution.h"
#include "kca/knapsack.h"
#include "kca/trace.h"

namespace kca {

enum class Algorithm { kGa, kCa, kGreedy, kOracle };

std::string_view AlgorithmName(Algorithm algorithm);

struct Summary {
  double best = 0.0;
  double worst = 0.0;
  double average = 0.0;
  double median = 0.0;
  // Population standard deviation (divisor = sample count).
  double std_dev = 0.0;
};

// Throws std::invalid_argument on an empty sample.
Summary Summarize(std::span<const double> samples);

struct RunStats {
  Algorithm algorithm = Algorithm::kCa;
  std::string instance_name;
  int runs = 0;
  double best = 0.0;
  double worst = 0.0;
  double average = 0.0;
  double median = 0.0;
  double std_dev = 0.0;
  double avg_time_seconds = 0.0;
  std::optional<double> optimum;
};

struct ExperimentResult {
  RunStats stats;
  // Per-run outcomes in seed order.
  std::vector<RunResult> runs;
  std::vector<double> seconds;
};

// P1..P10 with their published optima.
std::vector<Instance> BuiltinProblems();
std::optional<Instance> FindBuiltinProblem(std::string_view name);

struct SuiteRecipe {
  std::size_t n;
  double capacity;
};

// (n, W) of P11..P18.
std::span<const SuiteRecipe> RandomSuiteRecipes();

// P11..P18; instance k is generated with seed + k.
std::vector<Instance> RandomSuite(std::uint64_t seed);

// Runs `runs` independent runs, run i seeded with config.seed + i, on up to
// `jobs` threads. Results do not depend on `jobs`. The statistics are over the
// per-run best values. Greedy and oracle runs are deterministic repeats.
ExperimentResult RunExperiment(const Instance& instance, Algorithm algorithm,
                               const EvolutionConfig& config, int runs,
                               int jobs = 1);

inline constexpr std::string_view kStatsCsvHeader =
    "instance,algorithm,runs,best,worst,average,median,std_dev,avg_time_s,"
    "optimum";
inline constexpr std::string_view kTraceCsvHeader =
    "iteration,best_so_far,p_c,p_m,belief_min,belief_max";

// Timing is left empty unless include_timing is set, since wall-clock values
// would make otherwise identical runs differ byte for byte.
void WriteStatsCsv(std::span<const RunStats> stats, std::ostream& out,
                   bool include_timing = false);

// Appends belief_fitness and gene_frequency columns (';'-separated lists) when
// the trace carries belief snapshots.
void WriteTraceCsv(const ConvergenceTrace& trace, std::ostream& out);

// Published results of two gravitational-search variants on the random
// suite, shown alongside our own numbers for context only. Those instances
// were never published, so the figures are not comparable run for run.
struct LiteratureRow {
  std::string_view problem;
  std::string_view method;
  double best;
  double worst;
  double average;
  double median;
};

std::span<const LiteratureRow> LargeSuiteLiterature();

}  // namespace kca

#endif  // KCA_BENCH_H_
