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
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "kca/bench.h"
#include "test_util.h"

namespace kca {
namespace {

const Instance& P3() {
  static const Instance p3 = *FindBuiltinProblem("P3");
  return p3;
}

EvaluatedSolution Eval(const std::string& bits) {
  return Evaluate(P3(), Solution::FromString(bits), FitnessMode::kPenalized);
}

EvaluatedSolution WithFitness(const std::string& bits, double fitness) {
  EvaluatedSolution e = Eval(bits);
  e.fitness = fitness;
  return e;
}

TEST(BeliefSpaceTest, Capacity) {
  EXPECT_EQ(BeliefSpace::CapacityFor(100), 10u);
  EXPECT_EQ(BeliefSpace::CapacityFor(101), 11u);
  EXPECT_EQ(BeliefSpace::CapacityFor(5), 1u);
  EXPECT_EQ(BeliefSpace::CapacityFor(1), 1u);
  EXPECT_THROW(BeliefSpace(0), std::invalid_argument);
  EXPECT_THROW(BeliefSpace(3, -0.5), std::invalid_argument);
}

TEST(BeliefSpaceTest, InitTakesDistinctTop) {
  Population pop;
  for (const char* b : {"1000", "1101", "0100", "1101", "0011", "0001"}) {
    pop.members.push_back(Eval(b));
  }
  // 12 members would give capacity 2; with 6 the capacity is 1.
  BeliefSpace one = InitBeliefSpace(pop);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.elites()[0].solution.ToString(), "1101");

  for (int i = 0; i < 6; ++i) pop.members.push_back(Eval("0000"));
  BeliefSpace two = InitBeliefSpace(pop);
  ASSERT_EQ(two.capacity(), 2u);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two.elites()[0].solution.ToString(), "1101");
  EXPECT_EQ(two.elites()[1].solution.ToString(), "0011");
}

TEST(BeliefSpaceTest, InitWithIdenticalMembers) {
  Population pop;
  for (int i = 0; i < 100; ++i) pop.members.push_back(Eval("0110"));
  const BeliefSpace belief = InitBeliefSpace(pop);
  EXPECT_EQ(belief.capacity(), 10u);
  EXPECT_EQ(belief.size(), 1u);
  EXPECT_EQ(belief.min_fitness(), belief.max_fitness());
}

TEST(BeliefSpaceTest, EmptyArchiveAdmitsAnything) {
  BeliefSpace belief(2);
  EXPECT_TRUE(belief.Accept(Eval("1111")));
  EXPECT_EQ(belief.size(), 1u);
}

TEST(BeliefSpaceTest, RejectsDuplicatesAndWeakCandidates) {
  for (DiversityRule rule : {DiversityRule::kAtMost, DiversityRule::kAtLeast}) {
    BeliefSpace belief(1, 0.5, rule);
    ASSERT_TRUE(belief.Accept(Eval("1101")));
    EXPECT_FALSE(belief.Accept(Eval("1101")));
    EXPECT_FALSE(belief.Accept(WithFitness("0010", 35)));
    EXPECT_FALSE(belief.Accept(Eval("1000")));
    EXPECT_EQ(belief.elites()[0].solution.ToString(), "1101");
  }
}

TEST(BeliefSpaceTest, AtLeastRuleWorkedExample) {
  // Elite with 2 items and fitness 30; candidate 1101 scores 35 with 3 items
  // and sits 3 >= 0.5 * 3 bits away.
  BeliefSpace belief(1, 0.5, DiversityRule::kAtLeast);
  ASSERT_TRUE(belief.Accept(WithFitness("0011", 30)));
  const EvaluatedSolution candidate = Eval("1101");
  ASSERT_EQ(candidate.fitness, 35);
  ASSERT_EQ(candidate.solution.CountSelected(), 3u);
  EXPECT_TRUE(belief.Accept(candidate));
  ASSERT_EQ(belief.size(), 1u);
  EXPECT_EQ(belief.elites()[0].solution.ToString(), "1101");

  // One bit away is too close under this rule.
  BeliefSpace near(1, 0.5, DiversityRule::kAtLeast);
  ASSERT_TRUE(near.Accept(WithFitness("0101", 30)));
  EXPECT_FALSE(near.Accept(candidate));
}

TEST(BeliefSpaceTest, AtMostRuleWorkedExample) {
  const EvaluatedSolution candidate = Eval("1101");
  BeliefSpace near(1, 0.5, DiversityRule::kAtMost);
  ASSERT_TRUE(near.Accept(WithFitness("0101", 30)));
  EXPECT_TRUE(near.Accept(candidate));
  EXPECT_EQ(near.elites()[0].solution.ToString(), "1101");

  BeliefSpace far(1, 0.5, DiversityRule::kAtMost);
  ASSERT_TRUE(far.Accept(WithFitness("0011", 30)));
  EXPECT_FALSE(far.Accept(candidate));
}

TEST(BeliefSpaceTest, EvictsWeakestAndStaysSorted) {
  BeliefSpace belief(3, 4.0, DiversityRule::kAtMost);
  for (double f : {5.0, 9.0, 7.0}) {
    ASSERT_TRUE(belief.Accept(WithFitness(
        f == 5.0 ? "1000" : f == 9.0 ? "0100" : "0010", f)));
  }
  ASSERT_TRUE(belief.Accept(WithFitness("0001", 8.0)));
  std::vector<double> fitness;
  for (const auto& e : belief.elites()) fitness.push_back(e.fitness);
  EXPECT_EQ(fitness, (std::vector<double>{9.0, 8.0, 7.0}));
  EXPECT_EQ(belief.min_fitness(), 7.0);
  EXPECT_EQ(belief.max_fitness(), 9.0);
}

TEST(BeliefSpaceTest, GeneFrequency) {
  BeliefSpace belief(2, 4.0);
  belief.Accept(WithFitness("1100", 2));
  belief.Accept(WithFitness("1010", 3));
  EXPECT_EQ(belief.GeneFrequency(), (std::vector<double>{1.0, 0.5, 0.5, 0.0}));
}

TEST(InfluenceTest, UniformOverElitesAndPopulation) {
  Population pop;
  for (const char* b : {"0000", "0001", "0010", "0011", "0100", "0101", "0110",
                        "0111", "1000", "1001", "1010", "1011"}) {
    pop.members.push_back(Eval(b));
  }
  const BeliefSpace belief = InitBeliefSpace(pop);
  ASSERT_EQ(belief.size(), 2u);
  Rng rng(17);
  const int draws = 60000;
  std::vector<int> elite_hits(belief.size(), 0), member_hits(pop.size(), 0);
  for (int i = 0; i < draws; ++i) {
    const auto [first, second] = InfluenceSelectParents(belief, pop, rng);
    ++elite_hits[static_cast<std::size_t>(first - belief.elites().data())];
    ++member_hits[static_cast<std::size_t>(second - pop.members.data())];
  }
  auto chi_square = [](const std::vector<int>& hits, double expected) {
    double chi = 0;
    for (int h : hits) chi += (h - expected) * (h - expected) / expected;
    return chi;
  };
  // 0.999 quantiles: chi2(1) = 10.83, chi2(11) = 31.26.
  EXPECT_LT(chi_square(elite_hits, draws / 2.0), 10.83);
  EXPECT_LT(chi_square(member_hits, draws / 12.0), 31.26);
}

TEST(CaStepTest, InvariantsOverRandomInstances) {
  std::mt19937_64 gen(71);
  EvolutionConfig config;
  config.population_size = 30;
  for (int trial = 0; trial < 10; ++trial) {
    const Instance instance = testing_util::RandomSmallInstance(gen, 40, true);
    config.seed = static_cast<std::uint64_t>(trial + 100);
    config.belief_diversity =
        trial % 2 ? DiversityRule::kAtLeast : DiversityRule::kAtMost;
    Rng rng(config.seed);
    Population pop = InitPopulation(instance, config, rng);
    BeliefSpace belief = InitBeliefSpace(pop, config.belief_difference_fraction,
                                         config.belief_diversity);
    double best = pop.members[BestIndex(pop)].fitness;
    double belief_min = belief.min_fitness();
    for (int step = 0; step < 100; ++step) {
      auto [next, updated] = CaStep(instance, pop, belief, config, rng);
      ASSERT_EQ(next.size(), pop.size());
      ASSERT_LE(updated.size(), updated.capacity());
      ASSERT_GE(updated.size(), belief.size());
      const double next_best = next.members[BestIndex(next)].fitness;
      ASSERT_GE(next_best, best);
      ASSERT_GE(updated.min_fitness(), belief_min);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < updated.size(); ++i) {
        ASSERT_TRUE(seen.insert(updated.elites()[i].solution.ToString()).second);
        if (i > 0) {
          ASSERT_GE(updated.elites()[i - 1].fitness, updated.elites()[i].fitness);
        }
      }
      best = next_best;
      belief_min = updated.min_fitness();
      pop = std::move(next);
      belief = std::move(updated);
    }
  }
}

TEST(RunCaTest, SolvesSmallProblemsEveryRun) {
  EvolutionConfig config;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    config.seed = seed;
    EXPECT_EQ(RunCa(*FindBuiltinProblem("P1"), config).best.total_value, 295);
    EXPECT_EQ(RunCa(*FindBuiltinProblem("P7"), config).best.total_value, 107);
    EXPECT_EQ(RunCa(*FindBuiltinProblem("P9"), config).best.total_value, 130);
  }
}

TEST(RunCaTest, TraceAndDeterminism) {
  const Instance p2 = *FindBuiltinProblem("P2");
  EvolutionConfig config;
  config.seed = 4;
  config.record_belief_snapshots = true;
  const RunResult a = RunCa(p2, config);
  const RunResult b = RunCa(p2, config);
  ASSERT_EQ(a.trace.size(), 51u);
  EXPECT_EQ(a.best.solution, b.best.solution);
  double previous = -1e300;
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    const TraceRecord& rec = a.trace.records[i];
    ASSERT_TRUE(rec.best_so_far.has_value());
    EXPECT_GE(*rec.best_so_far, previous);
    previous = *rec.best_so_far;
    EXPECT_EQ(rec.best_so_far, b.trace.records[i].best_so_far);
    ASSERT_TRUE(rec.belief_min.has_value());
    EXPECT_LE(*rec.belief_min, *rec.belief_max);
    EXPECT_EQ(rec.gene_frequency.size(), p2.size());
    EXPECT_FALSE(rec.belief_fitness.empty());
    EXPECT_LE(rec.belief_fitness.size(), 10u);
  }
  EXPECT_EQ(previous, a.best.total_value);
}

}  // namespace
}  // namespace kca
