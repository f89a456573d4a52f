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

#ifndef KCA_TRACE_H_
#define KCA_TRACE_H_

#include <optional>
#include <vector>

namespace kca {

// One row per generation, generation 0 being the initial population.
struct TraceRecord {
  int iteration = 0;
  // Best feasible value seen up to and including this generation; empty until
  // a feasible solution has been evaluated.
  std::optional<double> best_so_far;
  double p_c = 0.0;
  double p_m = 0.0;
  std::optional<double> belief_min;
  std::optional<double> belief_max;
  // Elite fitnesses and per-item inclusion frequency over the elites. Filled
  // only when a run records belief snapshots.
  std::vector<double> belief_fitness;
  std::vector<double> gene_frequency;
};

struct ConvergenceTrace {
  std::vector<TraceRecord> records;

  std::size_t size() const { return records.size(); }
};

}  // namespace kca

#endif  // KCA_TRACE_H_
