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

#include "kca/format.h"

#include <array>
#include <charconv>
#include <cstdio>

namespace kca {

std::string FormatExact(double value) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string FormatNumber(double value) {
  std::array<char, 32> buf;
  const int len = std::snprintf(buf.data(), buf.size(), "%.10g", value);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace kca
