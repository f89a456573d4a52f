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

#include "kca/evolution.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kca {

void EvolutionConfig::Validate() const {
  if (population_size < 2) {
    throw std::invalid_argument("population size must be at least 2, got " +
                                std::to_string(population_size));
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("iteration budget must be at least 1");
  }
  if (!(base_crossover_rate > 0.0 && base_crossover_rate <= 1.0)) {
    throw std::invalid_argument("crossover rate must lie in (0, 1]");
  }
  if (!(base_mutation_rate >= 0.0 && base_mutation_rate <= 1.0)) {
    throw std::invalid_argument("mutation rate must lie in [0, 1]");
  }
  if (!(belief_difference_fraction >= 0.0)) {
    throw std::invalid_argument("belief difference fraction must be >= 0");
  }
  if (elitism_count < 0 || elitism_count >= population_size) {
    throw std::invalid_argument(
        "elitism count must be nonnegative and below the population size");
  }
}

RateSchedule AdaptiveRates(const EvolutionConfig& config, std::size_t n,
                           int iter) {
  const double d = n >= 2 ? DimDamping(n) : 1.0;
  const double step = static_cast<double>(std::max(iter, 0) / 1000) * 0.1;
  RateSchedule rates;
  rates.p_c = std::min(config.base_crossover_rate / d + step, 1.0);
  rates.p_m =
      config.couple_mutation_rate ? 1.0 - rates.p_c : config.base_mutation_rate;
  return rates;
}

std::size_t BestIndex(const Population& population) {
  if (population.members.empty()) {
    throw std::invalid_argument("empty population has no best member");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population.members[i].fitness > population.members[best].fitness) {
      best = i;
    }
  }
  return best;
}

std::vector<std::size_t> TopIndices(const Population& population,
                                    std::size_t k) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return population.members[a].fitness > population.members[b].fitness;
  });
  order.resize(std::min(k, order.size()));
  return order;
}

Population InitPopulation(const Instance& instance,
                          const EvolutionConfig& config, Rng& rng) {
  config.Validate();
  std::bernoulli_distribution coin(0.5);
  Population population;
  population.members.reserve(static_cast<std::size_t>(config.population_size));
  for (int k = 0; k < config.population_size; ++k) {
    Solution s(instance.size());
    for (auto& bit : s.bits) bit = coin(rng);
    population.members.push_back(
        Evaluate(instance, std::move(s), config.fitness_mode));
  }
  return population;
}

Population InitPopulation(const Instance& instance,
                          const EvolutionConfig& config) {
  Rng rng(config.seed);
  return InitPopulation(instance, config, rng);
}

const EvaluatedSolution& SelectParent(const Population& population, Rng& rng) {
  if (population.members.empty()) {
    throw std::invalid_argument("cannot select from an empty population");
  }
  std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
  const auto& first = population.members[pick(rng)];
  const auto& second = population.members[pick(rng)];
  return second.fitness > first.fitness ? second : first;
}

std::pair<Solution, Solution> CrossoverAt(const Solution& a, const Solution& b,
                                          std::size_t cut) {
  if (a.size() != b.size()) {
    throw DimensionError("crossover parents differ in length");
  }
  cut = std::min(cut, a.size());
  Solution first = a;
  Solution second = b;
  std::swap_ranges(first.bits.begin() + static_cast<std::ptrdiff_t>(cut),
                   first.bits.end(),
                   second.bits.begin() + static_cast<std::ptrdiff_t>(cut));
  return {std::move(first), std::move(second)};
}

std::pair<Solution, Solution> SinglePointCrossover(const Solution& a,
                                                   const Solution& b,
                                                   Rng& rng) {
  if (a.size() != b.size()) {
    throw DimensionError("crossover parents differ in length");
  }
  if (a.size() < 2) return {a, b};
  std::uniform_int_distribution<std::size_t> cut(1, a.size() - 1);
  return CrossoverAt(a, b, cut(rng));
}

Solution BitFlipMutation(Solution s, double p_m, Rng& rng) {
  if (p_m <= 0.0) return s;
  std::bernoulli_distribution flip(std::min(p_m, 1.0));
  for (auto& bit : s.bits) {
    if (flip(rng)) bit ^= 1;
  }
  return s;
}

Solution PointMutation(Solution s, double p_m, Rng& rng) {
  if (p_m <= 0.0 || s.bits.empty()) return s;
  std::bernoulli_distribution mutate(std::min(p_m, 1.0));
  if (mutate(rng)) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 1);
    s.bits[pos(rng)] ^= 1;
  }
  return s;
}

Solution Mutate(Solution s, double p_m, MutationScheme scheme, Rng& rng) {
  switch (scheme) {
    case MutationScheme::kPerGene:
      return BitFlipMutation(std::move(s), p_m, rng);
    case MutationScheme::kPerIndividual:
      return PointMutation(std::move(s), p_m, rng);
  }
  return s;
}

Population Breed(const Instance& instance, const Population& population,
                 const EvolutionConfig& config, Rng& rng,
                 const PairSelector& select_pair) {
  const RateSchedule rates =
      AdaptiveRates(config, instance.size(), population.generation + 1);
  const std::size_t target = population.size();

  Population next;
  next.generation = population.generation + 1;
  next.members.reserve(target);
  for (std::size_t i : TopIndices(
           population, static_cast<std::size_t>(config.elitism_count))) {
    next.members.push_back(population.members[i]);
  }

  std::bernoulli_distribution recombine(rates.p_c);
  while (next.size() < target) {
    const auto [a, b] = select_pair(rng);
    auto children = recombine(rng)
                        ? SinglePointCrossover(a->solution, b->solution, rng)
                        : std::pair{a->solution, b->solution};
    next.members.push_back(Evaluate(
        instance,
        Mutate(std::move(children.first), rates.p_m, config.mutation_scheme,
               rng),
        config.fitness_mode));
    if (next.size() == target) break;
    next.members.push_back(Evaluate(
        instance,
        Mutate(std::move(children.second), rates.p_m, config.mutation_scheme,
               rng),
        config.fitness_mode));
  }
  return next;
}

Population GaStep(const Instance& instance, const Population& population,
                  const EvolutionConfig& config, Rng& rng) {
  return Breed(instance, population, config, rng, [&](Rng& r) {
    const auto* a = &SelectParent(population, r);
    const auto* b = &SelectParent(population, r);
    return std::pair{a, b};
  });
}

void BestTracker::Observe(const Population& population) {
  for (const auto& member : population.members) {
    if (member.feasible() &&
        (!best_feasible_ || member.total_value > best_feasible_->total_value)) {
      best_feasible_ = member;
    }
    if (!best_any_ || member.fitness > best_any_->fitness) best_any_ = member;
  }
}

std::optional<double> BestTracker::best_feasible_value() const {
  if (!best_feasible_) return std::nullopt;
  return best_feasible_->total_value;
}

const EvaluatedSolution& BestTracker::best() const {
  if (best_feasible_) return *best_feasible_;
  if (!best_any_) throw std::logic_error("no solution observed yet");
  return *best_any_;
}

RunResult RunGa(const Instance& instance, const EvolutionConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  Population population = InitPopulation(instance, config, rng);
  BestTracker tracker;
  RunResult result;
  result.trace.records.reserve(static_cast<std::size_t>(config.max_iterations) +
                               1);
  auto record = [&](const Population& pop) {
    tracker.Observe(pop);
    const RateSchedule rates =
        AdaptiveRates(config, instance.size(), std::max(pop.generation, 1));
    TraceRecord rec;
    rec.iteration = pop.generation;
    rec.best_so_far = tracker.best_feasible_value();
    rec.p_c = rates.p_c;
    rec.p_m = rates.p_m;
    result.trace.records.push_back(std::move(rec));
  };
  record(population);
  for (int it = 0; it < config.max_iterations; ++it) {
    population = GaStep(instance, population, config, rng);
    record(population);
  }
  result.best = tracker.best();
  return result;
}

}  // namespace kca
