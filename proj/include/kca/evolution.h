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

// Generational GA engine shared by the GA baseline and the cultural
// algorithm: adaptive rate schedule, binary tournament selection, single-point
// crossover, bit-flip mutation and elitist replacement.

#ifndef KCA_EVOLUTION_H_
#define KCA_EVOLUTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kca/knapsack.h"
#include "kca/trace.h"

namespace kca {

using Rng = std::mt19937_64;

// How a child is mutated once its rate p_m is known.
enum class MutationScheme {
  // Every bit flips independently with probability p_m.
  kPerGene,
  // With probability p_m, one uniformly chosen bit flips.
  kPerIndividual,
};

// How a belief-space candidate's bit differences to the elites are bounded,
// relative to fraction * (items selected by the candidate). Cultural
// algorithm only.
enum class DiversityRule {
  // The nearest elite differs in at most that many positions.
  kAtMost,
  // Every elite differs in at least that many positions.
  kAtLeast,
};

struct EvolutionConfig {
  int population_size = 100;
  int max_iterations = 50;
  double base_crossover_rate = 0.9;
  // Used only when couple_mutation_rate is false.
  double base_mutation_rate = 0.1;
  // p_m = 1 - p_c each generation. Turning this off pins p_m to
  // base_mutation_rate for ablations.
  bool couple_mutation_rate = true;
  MutationScheme mutation_scheme = MutationScheme::kPerIndividual;
  FitnessMode fitness_mode = FitnessMode::kPenalized;
  std::uint64_t seed = 1;
  int elitism_count = 1;
  // Belief-space admission: bound on the bit differences to the elites, as a
  // fraction of the candidate's selected items.
  double belief_difference_fraction = 0.5;
  DiversityRule belief_diversity = DiversityRule::kAtMost;
  // Store elite fitnesses and gene frequencies in every trace record (CA).
  bool record_belief_snapshots = false;

  // Throws std::invalid_argument on out-of-range fields.
  void Validate() const;
};

struct RateSchedule {
  double p_c = 0.0;
  double p_m = 0.0;
};

// p_c = min(P_c / d(n) + floor(iter / 1000) * 0.1, 1) with the configured
// base rate P_c; p_m = 1 - p_c (or the pinned base rate, see
// EvolutionConfig::couple_mutation_rate). iter is 1-based.
RateSchedule AdaptiveRates(const EvolutionConfig& config, std::size_t n,
                           int iter);

struct Population {
  std::vector<EvaluatedSolution> members;
  int generation = 0;

  std::size_t size() const { return members.size(); }
};

// Index of the fittest member; ties go to the lower index.
std::size_t BestIndex(const Population& population);

// Indices of the k fittest members, fittest first, ties by lower index.
std::vector<std::size_t> TopIndices(const Population& population,
                                    std::size_t k);

// Uniform random bit strings, evaluated.
Population InitPopulation(const Instance& instance,
                          const EvolutionConfig& config, Rng& rng);

// Seeds a fresh stream from config.seed.
Population InitPopulation(const Instance& instance,
                          const EvolutionConfig& config);

// Binary tournament with replacement; on equal fitness the first draw wins.
const EvaluatedSolution& SelectParent(const Population& population, Rng& rng);

// Children a[0, cut) + b[cut, n) and b[0, cut) + a[cut, n).
std::pair<Solution, Solution> CrossoverAt(const Solution& a, const Solution& b,
                                          std::size_t cut);

// Cut drawn uniformly from {1, ..., n - 1}. For n < 2 the parents are copied.
// Throws DimensionError on unequal lengths.
std::pair<Solution, Solution> SinglePointCrossover(const Solution& a,
                                                   const Solution& b, Rng& rng);

Solution BitFlipMutation(Solution s, double p_m, Rng& rng);
Solution PointMutation(Solution s, double p_m, Rng& rng);
Solution Mutate(Solution s, double p_m, MutationScheme scheme, Rng& rng);

// Picks the two parents of the next pair of children.
using PairSelector =
    std::function<std::pair<const EvaluatedSolution*, const EvaluatedSolution*>(
        Rng&)>;

// Builds the next generation: elites copied, the rest bred in pairs from
// select_pair with crossover probability p_c and mutation rate p_m for
// generation pop.generation + 1.
Population Breed(const Instance& instance, const Population& population,
                 const EvolutionConfig& config, Rng& rng,
                 const PairSelector& select_pair);

// One GA generation: Breed with two tournament-selected parents.
Population GaStep(const Instance& instance, const Population& population,
                  const EvolutionConfig& config, Rng& rng);

// Running record of the best solutions evaluated during one run.
class BestTracker {
 public:
  void Observe(const Population& population);

  std::optional<double> best_feasible_value() const;
  // Best feasible solution seen, else the fittest infeasible one.
  const EvaluatedSolution& best() const;
  bool empty() const { return !best_any_; }

 private:
  std::optional<EvaluatedSolution> best_feasible_;
  std::optional<EvaluatedSolution> best_any_;
};

struct RunResult {
  EvaluatedSolution best;
  ConvergenceTrace trace;
};

// Initial population plus max_iterations GA steps.
RunResult RunGa(const Instance& instance, const EvolutionConfig& config);

}  // namespace kca

#endif  // KCA_EVOLUTION_H_
