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

// Exact and heuristic reference solvers used as ground truth for the
// evolutionary solvers.

#ifndef KCA_ORACLE_H_
#define KCA_ORACLE_H_

#include <cstddef>
#include <stdexcept>
#include <string_view>

#include "kca/knapsack.h"

namespace kca {

// The requested method cannot handle the instance within its limits.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance does not satisfy the method's input requirements.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OracleMethod { kBruteForce, kDynamicProgramming, kGreedy };

std::string_view OracleMethodName(OracleMethod method);

struct OracleResult {
  // For kGreedy this is the achieved value, a lower bound on the optimum.
  double optimum_value = 0.0;
  Solution witness;
  OracleMethod method = OracleMethod::kBruteForce;
};

inline constexpr std::size_t kMaxBruteForceItems = 25;
inline constexpr std::size_t kMaxDpCells = std::size_t{1} << 31;

// Enumerates all 2^n subsets in Gray-code order. Among optimal subsets the
// lexicographically smallest bit vector (bit 0 most significant) is returned.
// Throws BudgetError when n > kMaxBruteForceItems.
OracleResult BruteForceSolve(const Instance& instance);

// Weight-indexed O(n * W) dynamic program. Requires integral weights and
// capacity (PreconditionError) and at most kMaxDpCells table cells
// (BudgetError). Values may be real.
OracleResult DpSolve(const Instance& instance);

// Sorts by value/weight descending (ties: lower index first) and packs every
// item that still fits.
OracleResult GreedySolve(const Instance& instance);

bool HasIntegralWeights(const Instance& instance);

// Dynamic programming when weights are integral, brute force otherwise.
OracleResult ExactSolve(const Instance& instance);

}  // namespace kca

#endif  // KCA_ORACLE_H_
