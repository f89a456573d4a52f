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

#include "kca/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace kca {
namespace {

// True when a precedes b with bit 0 as the most significant position.
bool LexLess(const Solution& a, const Solution& b) {
  return std::lexicographical_compare(a.bits.begin(), a.bits.end(),
                                      b.bits.begin(), b.bits.end());
}

}  // namespace

std::string_view OracleMethodName(OracleMethod method) {
  switch (method) {
    case OracleMethod::kBruteForce:
      return "brute_force";
    case OracleMethod::kDynamicProgramming:
      return "dynamic_programming";
    case OracleMethod::kGreedy:
      return "greedy";
  }
  return "unknown";
}

OracleResult BruteForceSolve(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kMaxBruteForceItems) {
    throw BudgetError("brute force is limited to " +
                      std::to_string(kMaxBruteForceItems) + " items, got " +
                      std::to_string(n));
  }
  // Incremental Gray-code sums drift for real data, so anything that looks
  // like a candidate is re-scored with a fresh sum before it is compared.
  const double total_weight =
      std::accumulate(instance.weights.begin(), instance.weights.end(), 0.0);
  const double total_value =
      std::accumulate(instance.values.begin(), instance.values.end(), 0.0);
  const double weight_slack = 1e-9 * std::max(1.0, total_weight);
  const double value_slack = 1e-9 * std::max(1.0, total_value);

  Solution current(n);
  OracleResult best{0.0, Solution(n), OracleMethod::kBruteForce};
  double weight = 0.0;
  double value = 0.0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(k));
    if (current.bits[flip]) {
      current.bits[flip] = 0;
      weight -= instance.weights[flip];
      value -= instance.values[flip];
    } else {
      current.bits[flip] = 1;
      weight += instance.weights[flip];
      value += instance.values[flip];
    }
    if (weight > instance.capacity + weight_slack) continue;
    if (value < best.optimum_value - value_slack) continue;
    if (TotalWeight(instance, current) > instance.capacity) continue;
    const double exact = TotalValue(instance, current);
    if (exact > best.optimum_value ||
        (exact == best.optimum_value && LexLess(current, best.witness))) {
      best.optimum_value = exact;
      best.witness = current;
    }
  }
  return best;
}

bool HasIntegralWeights(const Instance& instance) {
  return std::all_of(instance.weights.begin(), instance.weights.end(),
                     [](double w) { return w == std::floor(w); });
}

OracleResult DpSolve(const Instance& instance) {
  if (!HasIntegralWeights(instance)) {
    throw PreconditionError(
        "dynamic programming needs integral weights; use brute force");
  }
  const std::size_t n = instance.size();
  // With integral weights, a fractional capacity is equivalent to its floor.
  const double floor_capacity = std::floor(instance.capacity);
  if (floor_capacity >= static_cast<double>(kMaxDpCells)) {
    throw BudgetError("capacity too large for the dynamic programming table");
  }
  const auto capacity = static_cast<std::size_t>(floor_capacity);
  if (n > kMaxDpCells / (capacity + 1)) {
    throw BudgetError("dynamic programming table of " + std::to_string(n) +
                      " x " + std::to_string(capacity + 1) +
                      " cells exceeds the budget");
  }

  // best[c]: max value with total weight <= c over the items seen so far.
  // take[i * (capacity + 1) + c]: item i improved best[c] when it was added.
  std::vector<double> best(capacity + 1, 0.0);
  std::vector<bool> take(n * (capacity + 1), false);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = instance.weights[i];
    if (w > floor_capacity) continue;
    const auto wi = static_cast<std::size_t>(w);
    const double v = instance.values[i];
    const std::size_t row = i * (capacity + 1);
    for (std::size_t c = capacity; c >= wi; --c) {
      const double with = best[c - wi] + v;
      if (with > best[c]) {
        best[c] = with;
        take[row + c] = true;
      }
    }
  }

  OracleResult result{best[capacity], Solution(n),
                      OracleMethod::kDynamicProgramming};
  std::size_t c = capacity;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * (capacity + 1) + c]) {
      result.witness.bits[i] = 1;
      c -= static_cast<std::size_t>(instance.weights[i]);
    }
  }
  // Report the witness's own sum so value and witness agree bit for bit.
  result.optimum_value = TotalValue(instance, result.witness);
  return result;
}

OracleResult GreedySolve(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.values[a] / instance.weights[a] >
           instance.values[b] / instance.weights[b];
  });
  OracleResult result{0.0, Solution(n), OracleMethod::kGreedy};
  double load = 0.0;
  for (std::size_t i : order) {
    if (load + instance.weights[i] <= instance.capacity) {
      load += instance.weights[i];
      result.witness.bits[i] = 1;
    }
  }
  result.optimum_value = TotalValue(instance, result.witness);
  return result;
}

OracleResult ExactSolve(const Instance& instance) {
  return HasIntegralWeights(instance) ? DpSolve(instance)
                                      : BruteForceSolve(instance);
}

}  // namespace kca
