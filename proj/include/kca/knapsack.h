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

// Problem representation for the 0-1 knapsack problem: instances, bit-vector
// solutions, penalized fitness and the plain-text instance format.

#ifndef KCA_KNAPSACK_H_
#define KCA_KNAPSACK_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kca {

// Raised when a solution length does not match the instance item count.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for malformed instance text. line() is 1-based, 0 when the error is
// not tied to a particular line (e.g. an empty stream).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct Instance {
  std::string name;
  std::vector<double> weights;
  std::vector<double> values;
  double capacity = 0.0;
  std::optional<double> known_optimum;

  std::size_t size() const { return weights.size(); }
};

// Throws std::invalid_argument unless weights and values have equal nonzero
// length and every weight, value and the capacity are finite and positive.
void ValidateInstance(const Instance& instance);

// Builds and validates an instance.
Instance MakeInstance(std::vector<double> weights, std::vector<double> values,
                      double capacity, std::string name = {},
                      std::optional<double> known_optimum = std::nullopt);

// Bit i set means item i is packed. Bits are stored one per byte so that
// Hamming distances and sums stay branch-free.
struct Solution {
  std::vector<std::uint8_t> bits;

  Solution() = default;
  explicit Solution(std::size_t n) : bits(n, 0) {}
  explicit Solution(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  static Solution FromString(std::string_view zeros_and_ones);

  std::size_t size() const { return bits.size(); }
  bool operator[](std::size_t i) const { return bits[i] != 0; }
  std::size_t CountSelected() const;
  std::string ToString() const;

  friend bool operator==(const Solution&, const Solution&) = default;
};

std::size_t HammingDistance(const Solution& a, const Solution& b);

enum class FitnessMode { kPenalized, kZeroIfInvalid };

struct EvaluatedSolution {
  Solution solution;
  double total_value = 0.0;
  double total_weight = 0.0;
  double violation = 0.0;
  double fitness = 0.0;

  bool feasible() const { return violation == 0.0; }
};

double TotalValue(const Instance& instance, const Solution& solution);
double TotalWeight(const Instance& instance, const Solution& solution);

// max(total_weight - capacity, 0).
double Violation(const Instance& instance, const Solution& solution);

// d = 1 + ln(ln n), floored at 1. Shrinks the penalty coefficient 100/d as the
// dimension grows. Throws std::domain_error for n < 2.
double DimDamping(std::size_t n);

// Penalized mode: value - (100/d) * violation. Zero-if-invalid mode: value
// when feasible, 0 otherwise.
EvaluatedSolution Evaluate(const Instance& instance, Solution solution,
                           FitnessMode mode);

// Text format:
//   <n> <W>
//   <w_1> <v_1>
//   ...
//   # optimum <value>     (optional)
// '#' starts a comment anywhere; "# optimum" and "# name" comments are read.
Instance ParseInstance(std::istream& in);
Instance ParseInstanceString(std::string_view text);
Instance LoadInstance(const std::string& path);

// Reals are written in shortest round-trip form, so parsing the output yields
// the same doubles.
void SerializeInstance(const Instance& instance, std::ostream& out);
std::string SerializeInstanceString(const Instance& instance);

// Integer weights uniform in [5, 20] and values uniform in [50, 100],
// deterministic for a given seed.
Instance GenerateRandomInstance(std::size_t n, double capacity,
                                std::uint64_t seed);

inline constexpr int kMinRandomWeight = 5;
inline constexpr int kMaxRandomWeight = 20;
inline constexpr int kMinRandomValue = 50;
inline constexpr int kMaxRandomValue = 100;

}  // namespace kca

#endif  // KCA_KNAPSACK_H_
