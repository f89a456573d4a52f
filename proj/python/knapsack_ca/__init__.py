# Copyright 2026 The knapsack-ca Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""0-1 knapsack solvers: a genetic algorithm, a cultural algorithm and exact
oracles, backed by a C++ core."""

from ._core import (
    BudgetError,
    DiversityRule,
    EvaluatedSolution,
    EvolutionConfig,
    FitnessMode,
    Instance,
    MutationScheme,
    OracleResult,
    ParseError,
    RunResult,
    RunStats,
    TraceRecord,
    adaptive_rates,
    brute_force_solve,
    builtin_problems,
    dim_damping,
    dp_solve,
    evaluate,
    exact_solve,
    find_builtin_problem,
    generate_instance,
    greedy_solve,
    load_instance,
    parse_instance,
    random_suite,
    run_ca,
    run_experiment,
    run_ga,
    serialize_instance,
    stats_csv,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
