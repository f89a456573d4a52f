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

#include <string_view>

#include "kca/bench.h"

namespace kca {

std::vector<Instance> BuiltinProblems() {
  std::vector<Instance> p;
  p.push_back(MakeInstance({95, 4, 60, 32, 23, 72, 80, 62, 65, 46},
                           {55, 10, 47, 5, 4, 50, 8, 61, 85, 87}, 269, "P1",
                           295));
  p.push_back(MakeInstance({92, 4,  43, 83, 84, 68, 92, 82, 6,  44,
                            32, 18, 56, 83, 25, 96, 70, 48, 14, 58},
                           {44, 46, 90, 72, 91, 40, 75, 35, 8,  54,
                            78, 40, 77, 15, 61, 17, 75, 29, 75, 63},
                           878, "P2", 1024));
  p.push_back(MakeInstance({6, 5, 9, 7}, {9, 11, 13, 15}, 20, "P3", 35));
  p.push_back(MakeInstance({2, 4, 6, 7}, {6, 10, 12, 13}, 11, "P4", 23));
  p.push_back(MakeInstance(
      {56.358531, 80.874050, 47.987304, 89.596240, 74.660482, 85.894345,
       51.353496, 1.498459, 36.445204, 16.589862, 44.569231, 0.466933,
       37.788018, 57.118442, 60.716575},
      {0.125126, 19.330424, 58.500931, 35.029145, 82.284005, 17.410810,
       71.050142, 30.399487, 9.140294, 14.731285, 98.852504, 11.908322,
       0.891140, 53.166295, 60.176397},
      375, "P5", 481.0694));
  // Listed as 51 in some result tables; exhaustive search gives 52.
  p.push_back(MakeInstance({30, 25, 20, 18, 17, 11, 5, 2, 1, 1},
                           {20, 18, 17, 15, 15, 10, 5, 3, 1, 1}, 60, "P6", 52));
  p.push_back(MakeInstance({31, 10, 20, 19, 4, 3, 6}, {70, 20, 39, 37, 7, 5, 10},
                           50, "P7", 107));
  p.push_back(MakeInstance(
      {983, 982, 981, 980, 979, 978, 488, 976, 972, 486, 486, 972,
       972, 485, 485, 969, 966, 483, 964, 963, 961, 958, 959},
      {981, 980, 979, 978, 977, 976, 487, 974, 970, 485, 485, 970,
       970, 484, 484, 976, 974, 482, 962, 961, 959, 958, 857},
      10000, "P8", 9767));
  p.push_back(MakeInstance({15, 20, 17, 8, 31}, {33, 24, 36, 37, 12}, 80, "P9",
                           130));
  p.push_back(MakeInstance({84, 83, 43, 4,  44, 6,  82, 92, 25, 83,
                            56, 18, 58, 14, 48, 70, 96, 32, 68, 92},
                           {91, 72, 90, 46, 55, 8,  35, 75, 61, 15,
                            77, 40, 63, 75, 29, 75, 17, 78, 40, 44},
                           879, "P10", 1025));
  return p;
}

std::optional<Instance> FindBuiltinProblem(std::string_view name) {
  for (auto& instance : BuiltinProblems()) {
    if (instance.name == name) return std::move(instance);
  }
  return std::nullopt;
}

std::span<const SuiteRecipe> RandomSuiteRecipes() {
  static constexpr SuiteRecipe kRecipes[] = {
      {100, 1100},  {200, 1500},   {300, 1700},   {500, 2000},
      {800, 5000},  {1000, 10000}, {1200, 14000}, {1500, 16000},
  };
  return kRecipes;
}

std::vector<Instance> RandomSuite(std::uint64_t seed) {
  std::vector<Instance> suite;
  std::uint64_t k = 0;
  for (const auto& recipe : RandomSuiteRecipes()) {
    Instance instance =
        GenerateRandomInstance(recipe.n, recipe.capacity, seed + k);
    instance.name = "P" + std::to_string(11 + k);
    suite.push_back(std::move(instance));
    ++k;
  }
  return suite;
}

std::span<const LiteratureRow> LargeSuiteLiterature() {
  static constexpr LiteratureRow kRows[] = {
      {"P11", "DGSA", 7029, 6034, 6602.01, 6715},
      {"P11", "CDGSA", 7245, 5172, 6449.20, 6581},
      {"P12", "DGSA", 11024, 9821, 10429.58, 10598},
      {"P12", "CDGSA", 11168, 8267, 11006.5, 11063},
      {"P13", "DGSA", 13892, 12957, 13379.2, 13420},
      {"P13", "CDGSA", 14025, 12730, 13602.09, 13732},
      {"P14", "DGSA", 21891, 20063, 20957.14, 21164},
      {"P14", "CDGSA", 27451, 22173, 25903.55, 26508},
      {"P15", "DGSA", 47213, 45810, 46431, 46605},
      {"P15", "CDGSA", 55048, 47204, 52761.37, 53892},
      {"P16", "DGSA", 70825, 68941, 69730.12, 69940},
      {"P16", "CDGSA", 73698, 69752, 70454.38, 71653},
      {"P17", "DGSA", 89617, 86752, 88013.75, 88351},
      {"P17", "CDGSA", 90139, 86984, 89452.64, 89953},
      {"P18", "DGSA", 109541, 107203, 108429.8, 108870},
      {"P18", "CDGSA", 111964, 108927, 110726.79, 111248},
  };
  return kRows;
}

}  // namespace kca
