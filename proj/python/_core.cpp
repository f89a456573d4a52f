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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "kca/bench.h"
#include "kca/cultural.h"
#include "kca/evolution.h"
#include "kca/knapsack.h"
#include "kca/oracle.h"
#include "kca/trace.h"

namespace py = pybind11;

namespace {

using BitsArg = std::variant<std::string, std::vector<int>>;

kca::Solution ToSolution(const BitsArg& bits) {
  if (const auto* s = std::get_if<std::string>(&bits)) {
    return kca::Solution::FromString(*s);
  }
  const auto& v = std::get<std::vector<int>>(bits);
  kca::Solution out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) throw py::value_error("bits must be 0 or 1");
    out.bits[i] = static_cast<std::uint8_t>(v[i]);
  }
  return out;
}

kca::Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "ga" || name == "GA") return kca::Algorithm::kGa;
  if (name == "ca" || name == "CA") return kca::Algorithm::kCa;
  if (name == "greedy") return kca::Algorithm::kGreedy;
  if (name == "oracle") return kca::Algorithm::kOracle;
  throw py::value_error("algorithm must be ga, ca, greedy or oracle");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "0-1 knapsack GA and cultural algorithm engines";

  py::register_exception<kca::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<kca::BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::enum_<kca::FitnessMode>(m, "FitnessMode")
      .value("PENALIZED", kca::FitnessMode::kPenalized)
      .value("ZERO_IF_INVALID", kca::FitnessMode::kZeroIfInvalid);
  py::enum_<kca::MutationScheme>(m, "MutationScheme")
      .value("PER_GENE", kca::MutationScheme::kPerGene)
      .value("PER_INDIVIDUAL", kca::MutationScheme::kPerIndividual);
  py::enum_<kca::DiversityRule>(m, "DiversityRule")
      .value("AT_MOST", kca::DiversityRule::kAtMost)
      .value("AT_LEAST", kca::DiversityRule::kAtLeast);

  py::class_<kca::Instance>(m, "Instance")
      .def(py::init([](std::vector<double> weights, std::vector<double> values,
                       double capacity, std::string name,
                       std::optional<double> known_optimum) {
             return kca::MakeInstance(std::move(weights), std::move(values),
                                      capacity, std::move(name), known_optimum);
           }),
           py::arg("weights"), py::arg("values"), py::arg("capacity"),
           py::arg("name") = "", py::arg("known_optimum") = py::none())
      .def_readonly("name", &kca::Instance::name)
      .def_readonly("weights", &kca::Instance::weights)
      .def_readonly("values", &kca::Instance::values)
      .def_readonly("capacity", &kca::Instance::capacity)
      .def_readonly("known_optimum", &kca::Instance::known_optimum)
      .def("__len__", &kca::Instance::size)
      .def("__repr__", [](const kca::Instance& i) {
        return "<Instance " + (i.name.empty() ? "?" : i.name) +
               " n=" + std::to_string(i.size()) + ">";
      });

  py::class_<kca::EvaluatedSolution>(m, "EvaluatedSolution")
      .def_property_readonly(
          "bits", [](const kca::EvaluatedSolution& e) { return e.solution.ToString(); })
      .def_readonly("total_value", &kca::EvaluatedSolution::total_value)
      .def_readonly("total_weight", &kca::EvaluatedSolution::total_weight)
      .def_readonly("violation", &kca::EvaluatedSolution::violation)
      .def_readonly("fitness", &kca::EvaluatedSolution::fitness)
      .def_property_readonly("feasible", &kca::EvaluatedSolution::feasible);

  m.def("dim_damping", &kca::DimDamping, py::arg("n"));
  m.def(
      "evaluate",
      [](const kca::Instance& inst, const BitsArg& bits, kca::FitnessMode mode) {
        return kca::Evaluate(inst, ToSolution(bits), mode);
      },
      py::arg("instance"), py::arg("bits"),
      py::arg("mode") = kca::FitnessMode::kPenalized);
  m.def("parse_instance", &kca::ParseInstanceString, py::arg("text"));
  m.def("load_instance", &kca::LoadInstance, py::arg("path"));
  m.def("serialize_instance", &kca::SerializeInstanceString, py::arg("instance"));
  m.def("generate_instance", &kca::GenerateRandomInstance, py::arg("n"),
        py::arg("capacity"), py::arg("seed"));

  py::class_<kca::OracleResult>(m, "OracleResult")
      .def_readonly("optimum_value", &kca::OracleResult::optimum_value)
      .def_property_readonly(
          "witness", [](const kca::OracleResult& r) { return r.witness.ToString(); })
      .def_property_readonly("method", [](const kca::OracleResult& r) {
        return std::string(kca::OracleMethodName(r.method));
      });
  m.def("brute_force_solve", &kca::BruteForceSolve, py::arg("instance"));
  m.def("dp_solve", &kca::DpSolve, py::arg("instance"));
  m.def("greedy_solve", &kca::GreedySolve, py::arg("instance"));
  m.def("exact_solve", &kca::ExactSolve, py::arg("instance"));

  py::class_<kca::EvolutionConfig>(m, "EvolutionConfig")
      .def(py::init<>())
      .def_readwrite("population_size", &kca::EvolutionConfig::population_size)
      .def_readwrite("max_iterations", &kca::EvolutionConfig::max_iterations)
      .def_readwrite("base_crossover_rate",
                     &kca::EvolutionConfig::base_crossover_rate)
      .def_readwrite("base_mutation_rate",
                     &kca::EvolutionConfig::base_mutation_rate)
      .def_readwrite("couple_mutation_rate",
                     &kca::EvolutionConfig::couple_mutation_rate)
      .def_readwrite("mutation_scheme", &kca::EvolutionConfig::mutation_scheme)
      .def_readwrite("fitness_mode", &kca::EvolutionConfig::fitness_mode)
      .def_readwrite("seed", &kca::EvolutionConfig::seed)
      .def_readwrite("elitism_count", &kca::EvolutionConfig::elitism_count)
      .def_readwrite("belief_difference_fraction",
                     &kca::EvolutionConfig::belief_difference_fraction)
      .def_readwrite("belief_diversity", &kca::EvolutionConfig::belief_diversity)
      .def_readwrite("record_belief_snapshots",
                     &kca::EvolutionConfig::record_belief_snapshots)
      .def("validate", &kca::EvolutionConfig::Validate);

  m.def(
      "adaptive_rates",
      [](const kca::EvolutionConfig& c, std::size_t n, int iteration) {
        const auto r = kca::AdaptiveRates(c, n, iteration);
        return py::make_tuple(r.p_c, r.p_m);
      },
      py::arg("config"), py::arg("n"), py::arg("iteration"));

  py::class_<kca::TraceRecord>(m, "TraceRecord")
      .def_readonly("iteration", &kca::TraceRecord::iteration)
      .def_readonly("best_so_far", &kca::TraceRecord::best_so_far)
      .def_readonly("p_c", &kca::TraceRecord::p_c)
      .def_readonly("p_m", &kca::TraceRecord::p_m)
      .def_readonly("belief_min", &kca::TraceRecord::belief_min)
      .def_readonly("belief_max", &kca::TraceRecord::belief_max)
      .def_readonly("belief_fitness", &kca::TraceRecord::belief_fitness)
      .def_readonly("gene_frequency", &kca::TraceRecord::gene_frequency);

  py::class_<kca::RunResult>(m, "RunResult")
      .def_readonly("best", &kca::RunResult::best)
      .def_property_readonly(
          "trace", [](const kca::RunResult& r) { return r.trace.records; })
      .def("trace_csv", [](const kca::RunResult& r) {
        std::ostringstream out;
        kca::WriteTraceCsv(r.trace, out);
        return out.str();
      });

  m.def("run_ga", &kca::RunGa, py::arg("instance"),
        py::arg("config") = kca::EvolutionConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("run_ca", &kca::RunCa, py::arg("instance"),
        py::arg("config") = kca::EvolutionConfig{},
        py::call_guard<py::gil_scoped_release>());

  m.def("builtin_problems", &kca::BuiltinProblems);
  m.def("find_builtin_problem", &kca::FindBuiltinProblem, py::arg("name"));
  m.def("random_suite", &kca::RandomSuite, py::arg("seed"));

  py::class_<kca::RunStats>(m, "RunStats")
      .def_property_readonly("algorithm", [](const kca::RunStats& s) {
        return std::string(kca::AlgorithmName(s.algorithm));
      })
      .def_readonly("instance_name", &kca::RunStats::instance_name)
      .def_readonly("runs", &kca::RunStats::runs)
      .def_readonly("best", &kca::RunStats::best)
      .def_readonly("worst", &kca::RunStats::worst)
      .def_readonly("average", &kca::RunStats::average)
      .def_readonly("median", &kca::RunStats::median)
      .def_readonly("std_dev", &kca::RunStats::std_dev)
      .def_readonly("avg_time_seconds", &kca::RunStats::avg_time_seconds)
      .def_readonly("optimum", &kca::RunStats::optimum);

  m.def(
      "run_experiment",
      [](const kca::Instance& inst, const std::string& algorithm,
         const kca::EvolutionConfig& config, int runs, int jobs) {
        const kca::Algorithm alg = ParseAlgorithm(algorithm);
        py::gil_scoped_release release;
        return kca::RunExperiment(inst, alg, config, runs, jobs).stats;
      },
      py::arg("instance"), py::arg("algorithm"),
      py::arg("config") = kca::EvolutionConfig{}, py::arg("runs") = 20,
      py::arg("jobs") = 1);

  m.def(
      "stats_csv",
      [](const std::vector<kca::RunStats>& stats, bool include_timing) {
        std::ostringstream out;
        kca::WriteStatsCsv(stats, out, include_timing);
        return out.str();
      },
      py::arg("stats"), py::arg("include_timing") = false);
}
