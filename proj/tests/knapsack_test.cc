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

#include "kca/knapsack.h"

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "kca/bench.h"
#include "test_util.h"

namespace kca {
namespace {

// Frozen from tests/fixtures/reference_values.py (closed-form evaluation).
constexpr double kDamping4 = 1.326634259978;
constexpr double kDamping10 = 1.834032445248;
constexpr double kDamping20 = 2.097188700365;
constexpr double kP3AllOnesPenalized = -479.651079967933;

Instance P3() { return *FindBuiltinProblem("P3"); }
Instance P4() { return *FindBuiltinProblem("P4"); }

TEST(TotalValueTest, SumsSelectedValues) {
  EXPECT_EQ(TotalValue(P3(), Solution::FromString("1101")), 35);
  EXPECT_EQ(TotalValue(P3(), Solution::FromString("0000")), 0);
  EXPECT_EQ(TotalValue(P4(), Solution::FromString("1111")), 41);
}

TEST(TotalWeightTest, SumsSelectedWeights) {
  EXPECT_EQ(TotalWeight(P3(), Solution::FromString("1111")), 27);
  EXPECT_EQ(TotalWeight(P3(), Solution::FromString("0000")), 0);
  EXPECT_EQ(TotalWeight(P4(), Solution::FromString("1100")), 6);
}

TEST(ViolationTest, ExcessOverCapacity) {
  EXPECT_EQ(Violation(P3(), Solution::FromString("1111")), 7);
  EXPECT_EQ(Violation(P3(), Solution::FromString("1101")), 0);
  EXPECT_EQ(Violation(P4(), Solution::FromString("1111")), 8);
}

TEST(KnapsackTest, LengthMismatchIsDimensionError) {
  EXPECT_THROW(TotalValue(P3(), Solution::FromString("101")), DimensionError);
  EXPECT_THROW(TotalWeight(P3(), Solution(5)), DimensionError);
  EXPECT_THROW(Violation(P3(), Solution(0)), DimensionError);
  EXPECT_THROW(Evaluate(P3(), Solution(2), FitnessMode::kPenalized),
               DimensionError);
}

TEST(DimDampingTest, NaturalLogValues) {
  EXPECT_NEAR(DimDamping(4), kDamping4, 1e-12);
  EXPECT_NEAR(DimDamping(10), kDamping10, 1e-12);
  EXPECT_NEAR(DimDamping(20), kDamping20, 1e-12);
  // ln(ln(e^e)) = 1.
  EXPECT_NEAR(1.0 + std::log(std::log(std::exp(std::exp(1.0)))), 2.0, 1e-12);
}

TEST(DimDampingTest, ClampedAtOneForTinyDimensions) {
  // ln ln 2 < 0, so the damping would dip below one.
  EXPECT_EQ(DimDamping(2), 1.0);
  EXPECT_GT(DimDamping(3), 1.0);
  EXPECT_THROW(DimDamping(1), std::domain_error);
  EXPECT_THROW(DimDamping(0), std::domain_error);
}

TEST(DimDampingTest, MonotoneAndAtLeastOne) {
  double previous = DimDamping(2);
  for (std::size_t n = 3; n <= 5000; ++n) {
    const double d = DimDamping(n);
    EXPECT_GE(d, 1.0);
    EXPECT_GE(d, previous) << n;
    previous = d;
  }
}

TEST(EvaluateTest, FeasibleFitnessIsValue) {
  const auto e =
      Evaluate(P3(), Solution::FromString("1101"), FitnessMode::kPenalized);
  EXPECT_EQ(e.fitness, 35);
  EXPECT_EQ(e.total_weight, 18);
  EXPECT_TRUE(e.feasible());
}

TEST(EvaluateTest, PenalizedInfeasible) {
  const auto e =
      Evaluate(P3(), Solution::FromString("1111"), FitnessMode::kPenalized);
  EXPECT_EQ(e.violation, 7);
  EXPECT_EQ(e.total_value, 48);
  EXPECT_NEAR(e.fitness, kP3AllOnesPenalized, 1e-9);
  EXPECT_FALSE(e.feasible());
}

TEST(EvaluateTest, ZeroIfInvalid) {
  EXPECT_EQ(Evaluate(P3(), Solution::FromString("1111"),
                     FitnessMode::kZeroIfInvalid)
                .fitness,
            0);
  EXPECT_EQ(Evaluate(P3(), Solution::FromString("1101"),
                     FitnessMode::kZeroIfInvalid)
                .fitness,
            35);
}

TEST(EvaluateTest, PropertiesOnRandomSolutions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance instance = testing_util::RandomSmallInstance(rng, 12, false);
    const Solution s = testing_util::RandomSolution(rng, instance.size());
    const auto e = Evaluate(instance, s, FitnessMode::kPenalized);
    EXPECT_GE(e.violation, 0.0);
    EXPECT_EQ(e.violation == 0.0, e.total_weight <= instance.capacity);
    EXPECT_EQ(e.violation,
              std::max(e.total_weight - instance.capacity, 0.0));
    if (e.feasible()) {
      EXPECT_EQ(e.fitness, e.total_value);
    } else {
      EXPECT_LT(e.fitness, e.total_value);
    }
    // Pure: a second evaluation is identical.
    const auto again = Evaluate(instance, s, FitnessMode::kPenalized);
    EXPECT_EQ(again.fitness, e.fitness);
    EXPECT_EQ(again.solution, e.solution);
  }
}

TEST(InstanceTest, ValidationRejectsBadData) {
  EXPECT_THROW(MakeInstance({1, 2}, {1}, 3), std::invalid_argument);
  EXPECT_THROW(MakeInstance({1, 0}, {1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(MakeInstance({1, 1}, {1, -1}, 3), std::invalid_argument);
  EXPECT_THROW(MakeInstance({1, 1}, {1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(MakeInstance({}, {}, 1), std::invalid_argument);
}

TEST(ParseInstanceTest, ParsesP3) {
  const Instance p = ParseInstanceString(
      "4 20\n6 9\n5 11\n9 13\n7 15\n# optimum 35\n");
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.capacity, 20);
  EXPECT_EQ(p.weights, (std::vector<double>{6, 5, 9, 7}));
  EXPECT_EQ(p.values, (std::vector<double>{9, 11, 13, 15}));
  ASSERT_TRUE(p.known_optimum.has_value());
  EXPECT_EQ(*p.known_optimum, 35);
}

TEST(ParseInstanceTest, ToleratesCommentsAndWhitespace) {
  const Instance p = ParseInstanceString(
      "# name demo\n\n  2\t10   # header\n3 4 # first\n\n 5   6\n");
  EXPECT_EQ(p.name, "demo");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.weights[1], 5);
  EXPECT_FALSE(p.known_optimum.has_value());
}

TEST(ParseInstanceTest, Errors) {
  EXPECT_THROW(ParseInstanceString(""), ParseError);
  EXPECT_THROW(ParseInstanceString("# only a comment\n"), ParseError);
  try {
    ParseInstanceString("4 20\n6 9\n5 11\n9 13\n");
    FAIL() << "count mismatch accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  try {
    ParseInstanceString("2 20\n6 9\n5 -1\n");
    FAIL() << "negative value accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(ParseInstanceString("x 20\n1 1\n"), ParseError);
  EXPECT_THROW(ParseInstanceString("1 0\n1 1\n"), ParseError);
  EXPECT_THROW(ParseInstanceString("1 5\n1 1\n2 2\n"), ParseError);
  EXPECT_THROW(ParseInstanceString("1 5\n1 1 1\n"), ParseError);
  EXPECT_THROW(ParseInstanceString("1 5\n1 abc\n"), ParseError);
}

TEST(ParseInstanceTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(5);
  std::vector<Instance> instances = BuiltinProblems();
  for (int i = 0; i < 50; ++i) {
    instances.push_back(testing_util::RandomSmallInstance(rng, 15, i % 2 == 0));
  }
  for (const auto& original : instances) {
    const Instance parsed =
        ParseInstanceString(SerializeInstanceString(original));
    EXPECT_EQ(parsed.name, original.name);
    EXPECT_EQ(parsed.weights, original.weights);
    EXPECT_EQ(parsed.values, original.values);
    EXPECT_EQ(parsed.capacity, original.capacity);
    EXPECT_EQ(parsed.known_optimum, original.known_optimum);
  }
}

TEST(GenerateRandomInstanceTest, DeterministicAndInRange) {
  const Instance a = GenerateRandomInstance(100, 1100, 42);
  const Instance b = GenerateRandomInstance(100, 1100, 42);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, GenerateRandomInstance(100, 1100, 43).values);
  EXPECT_EQ(a.capacity, 1100);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_GE(a.weights[i], 5);
    EXPECT_LE(a.weights[i], 20);
    EXPECT_GE(a.values[i], 50);
    EXPECT_LE(a.values[i], 100);
    EXPECT_EQ(a.weights[i], std::floor(a.weights[i]));
  }
  EXPECT_NO_THROW(ValidateInstance(a));
  EXPECT_THROW(GenerateRandomInstance(0, 10, 1), std::invalid_argument);
  EXPECT_THROW(GenerateRandomInstance(5, 0, 1), std::invalid_argument);
}

TEST(GenerateRandomInstanceTest, DrawsCoverTheWholeRange) {
  const Instance a = GenerateRandomInstance(5000, 1, 3);
  EXPECT_EQ(*std::min_element(a.weights.begin(), a.weights.end()), 5);
  EXPECT_EQ(*std::max_element(a.weights.begin(), a.weights.end()), 20);
  EXPECT_EQ(*std::min_element(a.values.begin(), a.values.end()), 50);
  EXPECT_EQ(*std::max_element(a.values.begin(), a.values.end()), 100);
}

TEST(SolutionTest, StringConversionAndHamming) {
  const Solution a = Solution::FromString("10110");
  EXPECT_EQ(a.ToString(), "10110");
  EXPECT_EQ(a.CountSelected(), 3u);
  EXPECT_EQ(HammingDistance(a, Solution::FromString("00111")), 2u);
  EXPECT_THROW(Solution::FromString("10a"), std::invalid_argument);
  EXPECT_THROW(HammingDistance(a, Solution(3)), DimensionError);
}

}  // namespace
}  // namespace kca
