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

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "kca/format.h"

namespace kca {
namespace {

void CheckLength(const Instance& instance, const Solution& solution) {
  if (solution.size() != instance.size()) {
    throw DimensionError("solution has " + std::to_string(solution.size()) +
                         " bits but the instance has " +
                         std::to_string(instance.size()) + " items");
  }
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Tokenize(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    pos = s.find_first_not_of(" \t\r\n\v\f", pos);
    if (pos == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r\n\v\f", pos);
    if (end == std::string_view::npos) end = s.size();
    tokens.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

double ParseReal(std::string_view token, int line, const char* what) {
  double value = 0.0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

double ParsePositive(std::string_view token, int line, const char* what) {
  const double value = ParseReal(token, line, what);
  if (!(value > 0.0)) {
    throw ParseError(line, std::string(what) + " must be positive, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

void ValidateInstance(const Instance& instance) {
  if (instance.weights.empty()) {
    throw std::invalid_argument("instance must have at least one item");
  }
  if (instance.weights.size() != instance.values.size()) {
    throw std::invalid_argument("weights and values differ in length");
  }
  if (!(instance.capacity > 0.0) || !std::isfinite(instance.capacity)) {
    throw std::invalid_argument("capacity must be positive");
  }
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (!(instance.weights[i] > 0.0) || !std::isfinite(instance.weights[i])) {
      throw std::invalid_argument("weight of item " + std::to_string(i) +
                                  " must be positive");
    }
    if (!(instance.values[i] > 0.0) || !std::isfinite(instance.values[i])) {
      throw std::invalid_argument("value of item " + std::to_string(i) +
                                  " must be positive");
    }
  }
}

Instance MakeInstance(std::vector<double> weights, std::vector<double> values,
                      double capacity, std::string name,
                      std::optional<double> known_optimum) {
  Instance instance{std::move(name), std::move(weights), std::move(values),
                    capacity, known_optimum};
  ValidateInstance(instance);
  return instance;
}

Solution Solution::FromString(std::string_view zeros_and_ones) {
  Solution s(zeros_and_ones.size());
  for (std::size_t i = 0; i < zeros_and_ones.size(); ++i) {
    const char c = zeros_and_ones[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    s.bits[i] = c == '1';
  }
  return s;
}

std::size_t Solution::CountSelected() const {
  std::size_t count = 0;
  for (auto b : bits) count += b;
  return count;
}

std::string Solution::ToString() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

std::size_t HammingDistance(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) {
    throw DimensionError("Hamming distance of bit vectors of unequal length");
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += a.bits[i] != b.bits[i];
  return distance;
}

double TotalValue(const Instance& instance, const Solution& solution) {
  CheckLength(instance, solution);
  double total = 0.0;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution.bits[i]) total += instance.values[i];
  }
  return total;
}

double TotalWeight(const Instance& instance, const Solution& solution) {
  CheckLength(instance, solution);
  double total = 0.0;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution.bits[i]) total += instance.weights[i];
  }
  return total;
}

double Violation(const Instance& instance, const Solution& solution) {
  return std::max(TotalWeight(instance, solution) - instance.capacity, 0.0);
}

double DimDamping(std::size_t n) {
  if (n < 2) {
    throw std::domain_error("dimension damping needs at least 2 items");
  }
  return std::max(1.0, 1.0 + std::log(std::log(static_cast<double>(n))));
}

EvaluatedSolution Evaluate(const Instance& instance, Solution solution,
                           FitnessMode mode) {
  CheckLength(instance, solution);
  EvaluatedSolution e;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (solution.bits[i]) {
      e.total_value += instance.values[i];
      e.total_weight += instance.weights[i];
    }
  }
  e.violation = std::max(e.total_weight - instance.capacity, 0.0);
  switch (mode) {
    case FitnessMode::kPenalized:
      if (e.violation > 0.0) {
        // A single-item instance has no meaningful damping; use d = 1.
        const double d = instance.size() >= 2 ? DimDamping(instance.size()) : 1.0;
        e.fitness = e.total_value - (100.0 / d) * e.violation;
      } else {
        e.fitness = e.total_value;
      }
      break;
    case FitnessMode::kZeroIfInvalid:
      e.fitness = e.violation > 0.0 ? 0.0 : e.total_value;
      break;
  }
  e.solution = std::move(solution);
  return e;
}

Instance ParseInstance(std::istream& in) {
  Instance instance;
  std::optional<std::size_t> declared;
  int line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view(line);
    const auto hash = view.find('#');
    if (hash != std::string_view::npos) {
      const auto comment = Trim(view.substr(hash + 1));
      if (comment.starts_with("optimum")) {
        const auto tokens = Tokenize(comment.substr(7));
        if (tokens.size() != 1) {
          throw ParseError(line_number, "expected '# optimum <value>'");
        }
        instance.known_optimum = ParseReal(tokens[0], line_number, "optimum");
      } else if (comment.starts_with("name ")) {
        instance.name = std::string(Trim(comment.substr(5)));
      }
      view = view.substr(0, hash);
    }
    const auto tokens = Tokenize(view);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_number, "expected two fields, found " +
                                        std::to_string(tokens.size()));
    }
    if (!declared) {
      std::size_t n = 0;
      const auto t = tokens[0];
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
      if (ec != std::errc() || ptr != t.data() + t.size() || n == 0) {
        throw ParseError(line_number, "invalid item count '" + std::string(t) +
                                          "'");
      }
      declared = n;
      instance.capacity = ParsePositive(tokens[1], line_number, "capacity");
      instance.weights.reserve(n);
      instance.values.reserve(n);
      continue;
    }
    if (instance.weights.size() == *declared) {
      throw ParseError(line_number, "more item lines than the declared " +
                                        std::to_string(*declared));
    }
    instance.weights.push_back(ParsePositive(tokens[0], line_number, "weight"));
    instance.values.push_back(ParsePositive(tokens[1], line_number, "value"));
  }
  if (!declared) throw ParseError(0, "missing '<n> <W>' header");
  if (instance.weights.size() != *declared) {
    throw ParseError(line_number, "header declares " +
                                      std::to_string(*declared) +
                                      " items but " +
                                      std::to_string(instance.weights.size()) +
                                      " were listed");
  }
  return instance;
}

Instance ParseInstanceString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseInstance(in);
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  try {
    Instance instance = ParseInstance(in);
    return instance;
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

void SerializeInstance(const Instance& instance, std::ostream& out) {
  if (!instance.name.empty()) out << "# name " << instance.name << '\n';
  out << instance.size() << ' ' << FormatExact(instance.capacity) << '\n';
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out << FormatExact(instance.weights[i]) << ' '
        << FormatExact(instance.values[i]) << '\n';
  }
  if (instance.known_optimum) {
    out << "# optimum " << FormatExact(*instance.known_optimum) << '\n';
  }
}

std::string SerializeInstanceString(const Instance& instance) {
  std::ostringstream out;
  SerializeInstance(instance, out);
  return out.str();
}

Instance GenerateRandomInstance(std::size_t n, double capacity,
                                std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (!(capacity > 0.0)) throw std::invalid_argument("capacity must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(kMinRandomWeight, kMaxRandomWeight);
  std::uniform_int_distribution<int> value(kMinRandomValue, kMaxRandomValue);
  Instance instance;
  instance.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
  instance.capacity = capacity;
  instance.weights.reserve(n);
  instance.values.reserve(n);
  // Each item draws its value then its weight, so a prefix of a longer
  // instance with the same seed matches a shorter one.
  for (std::size_t i = 0; i < n; ++i) {
    instance.values.push_back(value(rng));
    instance.weights.push_back(weight(rng));
  }
  return instance;
}

}  // namespace kca
