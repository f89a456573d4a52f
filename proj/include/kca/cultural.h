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

// Cultural algorithm: a situational belief space of elite solutions layered
// on the GA engine. The belief space supplies one parent of every crossover
// (influence) and admits new members by a fitness-plus-diversity rule
// (accept).

#ifndef KCA_CULTURAL_H_
#define KCA_CULTURAL_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "kca/evolution.h"
#include "kca/knapsack.h"

namespace kca {

class BeliefSpace {
 public:
  static constexpr double kDefaultDifferenceFraction = 0.5;

  explicit BeliefSpace(std::size_t capacity,
                       double difference_fraction = kDefaultDifferenceFraction,
                       DiversityRule rule = DiversityRule::kAtMost);

  // ceil(0.10 * population_size).
  static std::size_t CapacityFor(std::size_t population_size);

  // Admission test, without modifying the archive. With
  // bound = difference_fraction * max(1, items selected by the candidate):
  //  (a) the candidate is strictly fitter than the weakest elite,
  //  (b) kAtMost: its Hamming distance to the nearest elite is <= bound;
  //      kAtLeast: its Hamming distance to every elite is >= bound, and
  //  (c) it differs from every elite in at least one bit.
  bool Admissible(const EvaluatedSolution& candidate) const;

  // Inserts the candidate if Admissible, evicting the weakest elite when the
  // archive is full. Returns whether it was admitted.
  bool Accept(const EvaluatedSolution& candidate);

  // Fittest first.
  const std::vector<EvaluatedSolution>& elites() const { return elites_; }
  std::size_t size() const { return elites_.size(); }
  bool empty() const { return elites_.empty(); }
  std::size_t capacity() const { return capacity_; }
  double difference_fraction() const { return difference_fraction_; }
  DiversityRule rule() const { return rule_; }

  double min_fitness() const;
  double max_fitness() const;

  // Fraction of elites that pack each item. Diagnostic only.
  std::vector<double> GeneFrequency() const;

 private:
  friend BeliefSpace InitBeliefSpace(const Population&, double,
                                     DiversityRule);

  void Insert(EvaluatedSolution candidate);

  std::size_t capacity_;
  double difference_fraction_;
  DiversityRule rule_;
  std::vector<EvaluatedSolution> elites_;
};

// The fittest ceil(10%) distinct members of the population (ties by lower
// index). Duplicated bit vectors are skipped in favour of the next distinct
// member, so a population lacking diversity yields fewer elites.
BeliefSpace InitBeliefSpace(
    const Population& population,
    double difference_fraction = BeliefSpace::kDefaultDifferenceFraction,
    DiversityRule rule = DiversityRule::kAtMost);

// First parent uniform over the elites, second uniform over the population.
std::pair<const EvaluatedSolution*, const EvaluatedSolution*>
InfluenceSelectParents(const BeliefSpace& belief, const Population& population,
                       Rng& rng);

// One CA generation: Breed with belief-space parents, then offer every member
// of the new generation to Accept in population order.
std::pair<Population, BeliefSpace> CaStep(const Instance& instance,
                                          const Population& population,
                                          BeliefSpace belief,
                                          const EvolutionConfig& config,
                                          Rng& rng);

// Initial population and belief space plus max_iterations CA steps.
RunResult RunCa(const Instance& instance, const EvolutionConfig& config);

}  // namespace kca

#endif  // KCA_CULTURAL_H_
