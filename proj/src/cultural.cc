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

#include "kca/cultural.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kca {

BeliefSpace::BeliefSpace(std::size_t capacity, double difference_fraction,
                         DiversityRule rule)
    : capacity_(capacity), difference_fraction_(difference_fraction), rule_(rule) {
  if (capacity == 0) {
    throw std::invalid_argument("belief space capacity must be positive");
  }
  if (!(difference_fraction >= 0.0)) {
    throw std::invalid_argument("difference fraction must be nonnegative");
  }
  elites_.reserve(capacity);
}

std::size_t BeliefSpace::CapacityFor(std::size_t population_size) {
  return std::max<std::size_t>(1, (population_size + 9) / 10);
}

bool BeliefSpace::Admissible(const EvaluatedSolution& candidate) const {
  if (elites_.empty()) return true;
  if (!(candidate.fitness > min_fitness())) return false;
  const double bound =
      difference_fraction_ *
      static_cast<double>(std::max<std::size_t>(
          1, candidate.solution.CountSelected()));
  std::size_t nearest = candidate.solution.size() + 1;
  for (const auto& elite : elites_) {
    const std::size_t distance =
        HammingDistance(candidate.solution, elite.solution);
    if (distance == 0) return false;
    if (rule_ == DiversityRule::kAtLeast &&
        static_cast<double>(distance) < bound) {
      return false;
    }
    nearest = std::min(nearest, distance);
  }
  return rule_ == DiversityRule::kAtLeast ||
         static_cast<double>(nearest) <= bound;
}

bool BeliefSpace::Accept(const EvaluatedSolution& candidate) {
  if (!Admissible(candidate)) return false;
  if (elites_.size() == capacity_) elites_.pop_back();
  Insert(candidate);
  return true;
}

void BeliefSpace::Insert(EvaluatedSolution candidate) {
  // After every elite of equal or higher fitness, keeping sorted order.
  auto pos = std::upper_bound(
      elites_.begin(), elites_.end(), candidate.fitness,
      [](double f, const EvaluatedSolution& e) { return f > e.fitness; });
  elites_.insert(pos, std::move(candidate));
}

double BeliefSpace::min_fitness() const {
  if (elites_.empty()) throw std::logic_error("belief space is empty");
  return elites_.back().fitness;
}

double BeliefSpace::max_fitness() const {
  if (elites_.empty()) throw std::logic_error("belief space is empty");
  return elites_.front().fitness;
}

std::vector<double> BeliefSpace::GeneFrequency() const {
  if (elites_.empty()) return {};
  std::vector<double> freq(elites_.front().solution.size(), 0.0);
  for (const auto& e : elites_) {
    for (std::size_t i = 0; i < freq.size(); ++i) freq[i] += e.solution.bits[i];
  }
  for (auto& f : freq) f /= static_cast<double>(elites_.size());
  return freq;
}

BeliefSpace InitBeliefSpace(const Population& population,
                            double difference_fraction, DiversityRule rule) {
  if (population.members.empty()) {
    throw std::invalid_argument("belief space needs a nonempty population");
  }
  BeliefSpace belief(BeliefSpace::CapacityFor(population.size()),
                     difference_fraction, rule);
  for (std::size_t i : TopIndices(population, population.size())) {
    const auto& member = population.members[i];
    const bool duplicate = std::any_of(
        belief.elites_.begin(), belief.elites_.end(),
        [&](const EvaluatedSolution& e) { return e.solution == member.solution; });
    if (duplicate) continue;
    belief.elites_.push_back(member);
    if (belief.elites_.size() == belief.capacity_) break;
  }
  return belief;
}

std::pair<const EvaluatedSolution*, const EvaluatedSolution*>
InfluenceSelectParents(const BeliefSpace& belief, const Population& population,
                       Rng& rng) {
  if (belief.empty() || population.members.empty()) {
    throw std::invalid_argument(
        "influence needs a nonempty belief space and population");
  }
  std::uniform_int_distribution<std::size_t> elite(0, belief.size() - 1);
  std::uniform_int_distribution<std::size_t> member(0, population.size() - 1);
  const auto* first = &belief.elites()[elite(rng)];
  const auto* second = &population.members[member(rng)];
  return {first, second};
}

std::pair<Population, BeliefSpace> CaStep(const Instance& instance,
                                          const Population& population,
                                          BeliefSpace belief,
                                          const EvolutionConfig& config,
                                          Rng& rng) {
  Population next = Breed(instance, population, config, rng, [&](Rng& r) {
    return InfluenceSelectParents(belief, population, r);
  });
  for (const auto& member : next.members) belief.Accept(member);
  return {std::move(next), std::move(belief)};
}

RunResult RunCa(const Instance& instance, const EvolutionConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  Population population = InitPopulation(instance, config, rng);
  BeliefSpace belief = InitBeliefSpace(
      population, config.belief_difference_fraction, config.belief_diversity);
  BestTracker tracker;
  RunResult result;
  result.trace.records.reserve(static_cast<std::size_t>(config.max_iterations) +
                               1);
  auto record = [&](const Population& pop, const BeliefSpace& bs) {
    tracker.Observe(pop);
    const RateSchedule rates =
        AdaptiveRates(config, instance.size(), std::max(pop.generation, 1));
    TraceRecord rec;
    rec.iteration = pop.generation;
    rec.best_so_far = tracker.best_feasible_value();
    rec.p_c = rates.p_c;
    rec.p_m = rates.p_m;
    rec.belief_min = bs.min_fitness();
    rec.belief_max = bs.max_fitness();
    if (config.record_belief_snapshots) {
      for (const auto& e : bs.elites()) rec.belief_fitness.push_back(e.fitness);
      rec.gene_frequency = bs.GeneFrequency();
    }
    result.trace.records.push_back(std::move(rec));
  };
  record(population, belief);
  for (int it = 0; it < config.max_iterations; ++it) {
    auto [next, updated] = CaStep(instance, population, std::move(belief),
                                  config, rng);
    population = std::move(next);
    belief = std::move(updated);
    record(population, belief);
  }
  result.best = tracker.best();
  return result;
}

}  // namespace kca
