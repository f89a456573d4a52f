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

#include "kca/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kca/cultural.h"
#include "kca/format.h"
#include "kca/oracle.h"

namespace kca {
namespace {

RunResult RunOnce(const Instance& instance, Algorithm algorithm,
                  const EvolutionConfig& config) {
  switch (algorithm) {
    case Algorithm::kGa:
      return RunGa(instance, config);
    case Algorithm::kCa:
      return RunCa(instance, config);
    case Algorithm::kGreedy:
    case Algorithm::kOracle: {
      const OracleResult r = algorithm == Algorithm::kGreedy
                                 ? GreedySolve(instance)
                                 : ExactSolve(instance);
      RunResult result;
      result.best = Evaluate(instance, r.witness, config.fitness_mode);
      return result;
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

void WriteOptional(std::ostream& out, const std::optional<double>& v) {
  if (v) out << FormatNumber(*v);
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGa:
      return "GA";
    case Algorithm::kCa:
      return "CA";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

Summary Summarize(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples to summarize");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  Summary s;
  s.worst = sorted.front();
  s.best = sorted.back();
  s.average = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
              static_cast<double>(n);
  s.median = n % 2 == 1 ? sorted[n / 2]
                        : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  if (s.worst == s.best) {
    // Summation rounding would otherwise leave a spurious nonzero spread.
    s.average = s.best;
    return s;
  }
  double sq = 0.0;
  for (double x : sorted) sq += (x - s.average) * (x - s.average);
  s.std_dev = std::sqrt(sq / static_cast<double>(n));
  s.average = std::clamp(s.average, s.worst, s.best);
  return s;
}

ExperimentResult RunExperiment(const Instance& instance, Algorithm algorithm,
                               const EvolutionConfig& config, int runs,
                               int jobs) {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  config.Validate();
  ExperimentResult result;
  result.runs.resize(static_cast<std::size_t>(runs));
  result.seconds.resize(static_cast<std::size_t>(runs));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < runs; i = next++) {
      EvolutionConfig run_config = config;
      run_config.seed = config.seed + static_cast<std::uint64_t>(i);
      const auto start = std::chrono::steady_clock::now();
      result.runs[static_cast<std::size_t>(i)] =
          RunOnce(instance, algorithm, run_config);
      result.seconds[static_cast<std::size_t>(i)] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
    }
  };
  const int threads = std::clamp(jobs, 1, runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<double> bests;
  bests.reserve(result.runs.size());
  for (const auto& run : result.runs) {
    bests.push_back(run.best.feasible() ? run.best.total_value
                                        : run.best.fitness);
  }
  const Summary summary = Summarize(bests);
  RunStats& stats = result.stats;
  stats.algorithm = algorithm;
  stats.instance_name = instance.name;
  stats.runs = runs;
  stats.best = summary.best;
  stats.worst = summary.worst;
  stats.average = summary.average;
  stats.median = summary.median;
  stats.std_dev = summary.std_dev;
  stats.avg_time_seconds =
      std::accumulate(result.seconds.begin(), result.seconds.end(), 0.0) /
      static_cast<double>(runs);
  stats.optimum = instance.known_optimum;
  return result;
}

void WriteStatsCsv(std::span<const RunStats> stats, std::ostream& out,
                   bool include_timing) {
  out << kStatsCsvHeader << '\n';
  for (const auto& s : stats) {
    out << s.instance_name << ',' << AlgorithmName(s.algorithm) << ','
        << s.runs << ',' << FormatNumber(s.best) << ','
        << FormatNumber(s.worst) << ',' << FormatNumber(s.average) << ','
        << FormatNumber(s.median) << ',' << FormatNumber(s.std_dev) << ',';
    if (include_timing) out << FormatNumber(s.avg_time_seconds);
    out << ',';
    WriteOptional(out, s.optimum);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed to write stats CSV");
}

void WriteTraceCsv(const ConvergenceTrace& trace, std::ostream& out) {
  const bool snapshots = std::any_of(
      trace.records.begin(), trace.records.end(),
      [](const TraceRecord& r) { return !r.gene_frequency.empty(); });
  out << kTraceCsvHeader;
  if (snapshots) out << ",belief_fitness,gene_frequency";
  out << '\n';
  auto join = [&](const std::vector<double>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out << ';';
      out << FormatNumber(xs[i]);
    }
  };
  for (const auto& r : trace.records) {
    out << r.iteration << ',';
    WriteOptional(out, r.best_so_far);
    out << ',' << FormatNumber(r.p_c) << ',' << FormatNumber(r.p_m) << ',';
    WriteOptional(out, r.belief_min);
    out << ',';
    WriteOptional(out, r.belief_max);
    if (snapshots) {
      out << ',';
      join(r.belief_fitness);
      out << ',';
      join(r.gene_frequency);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed to write trace CSV");
}

}  // namespace kca
