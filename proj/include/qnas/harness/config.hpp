// Copyright 2026 The QNAS Authors.
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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnas/bench/objective.hpp"
#include "qnas/bo/fit.hpp"
#include "qnas/evo/evolve.hpp"
#include "qnas/metric/shape.hpp"
#include "qnas/ot/circuit_distance.hpp"

namespace qnas {

enum class SearchMode { ExpectedImprovement, Random };

struct ExperimentConfig {
  ObjectiveSpec objective;
  int init_samples = 5;
  int iterations = 30;  // evaluations after the initial samples
  int trials = 6;       // seeds run by `qnas search`: seed, seed + 1, ...
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::ExpectedImprovement;
  std::vector<double> nus = {0.1, 0.2, 0.4, 0.8};
  OtOptions ot;
  ShapeConfig shape;
  int max_shape_qubits = 4;
  FitOptions fit;
  EvoConfig evo;
  std::filesystem::path output_dir = "runs";

  /// Budgets 30 / 30 / 20 and 6 / 6 / 3 trials for QFT / MaxCut / QGAN.
  static ExperimentConfig preset(ObjectiveKind kind);

  /// Throws ConfigurationError on inconsistent settings.
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Keys absent from the file keep the preset of the objective's kind.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

std::string mode_name(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

}  // namespace qnas
