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

#include "qnas/harness/config.hpp"

#include <fstream>

#include "qnas/core/errors.hpp"

namespace qnas {

ExperimentConfig ExperimentConfig::preset(ObjectiveKind kind) {
  ExperimentConfig c;
  c.objective = ObjectiveSpec::preset(kind);
  c.iterations = kind == ObjectiveKind::QGAN ? 20 : 30;
  c.trials = kind == ObjectiveKind::QGAN ? 3 : 6;
  return c;
}

void ExperimentConfig::validate() const {
  if (init_samples < 1) throw ConfigurationError("init_samples must be at least 1");
  if (iterations < 0) throw ConfigurationError("iterations must be non-negative");
  if (trials < 1) throw ConfigurationError("trials must be at least 1");
  if (nus.empty()) throw ConfigurationError("at least one structural weight nu is required");
  for (double nu : nus)
    if (!(nu > 0)) throw ConfigurationError("structural weights must be positive for the distance to be a metric");
  if (ot.eta < 0 || !(ot.big_m > 0)) throw ConfigurationError("invalid transport options");
  if (shape.samples < 1 || shape.restarts < 1 || shape.max_iters < 1) throw ConfigurationError("invalid shape settings");
  if (max_shape_qubits < 1) throw ConfigurationError("max_shape_qubits must be positive");
  if (objective.n_gates < 1 || objective.n_qubits < 1) throw ConfigurationError("objective needs qubits and gates");
  double p = 0;
  for (double v : evo.change_probs) {
    if (v < 0) throw ConfigurationError("change probabilities must be non-negative");
    p += v;
  }
  if (!(p > 0)) throw ConfigurationError("change probabilities sum to zero");
  if (evo.type_change_prob < 0 || evo.type_change_prob > 1) throw ConfigurationError("type_change_prob must lie in [0, 1]");
}

std::string mode_name(SearchMode m) { return m == SearchMode::Random ? "random" : "ei"; }

SearchMode parse_search_mode(const std::string& s) {
  if (s == "ei") return SearchMode::ExpectedImprovement;
  if (s == "random") return SearchMode::Random;
  throw ConfigurationError("unknown search mode \"" + s + "\" (expected ei or random)");
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {
      {"objective", to_json(c.objective)},
      {"search",
       {{"init_samples", c.init_samples},
        {"iterations", c.iterations},
        {"trials", c.trials},
        {"seed", c.seed},
        {"mode", mode_name(c.mode)},
        {"output_dir", c.output_dir.string()}}},
      {"kernel", {{"nus", c.nus}}},
      {"ot", {{"eta", c.ot.eta}, {"big_m", c.ot.big_m}}},
      {"shape",
       {{"samples", c.shape.samples},
        {"max_iters", c.shape.max_iters},
        {"tol", c.shape.tol},
        {"restarts", c.shape.restarts},
        {"seed", c.shape.seed},
        {"max_qubits", c.max_shape_qubits}}},
      {"gp", {{"random_starts", c.fit.random_starts}, {"max_iters", c.fit.max_iters}}},
      {"evo",
       {{"c_tau", c.evo.c_tau},
        {"c_k", c.evo.c_k},
        {"c_off", c.evo.c_off},
        {"change_probs", c.evo.change_probs},
        {"type_change_prob", c.evo.type_change_prob}}},
  };
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  try {
    const ObjectiveSpec obj = objective_spec_from_json(j.at("objective"));
    ExperimentConfig c = ExperimentConfig::preset(obj.kind);
    c.objective = obj;
    if (j.contains("search")) {
      const auto& s = j.at("search");
      c.init_samples = s.value("init_samples", c.init_samples);
      c.iterations = s.value("iterations", c.iterations);
      c.trials = s.value("trials", c.trials);
      c.seed = s.value("seed", c.seed);
      if (s.contains("mode")) c.mode = parse_search_mode(s.at("mode").get<std::string>());
      if (s.contains("output_dir")) c.output_dir = s.at("output_dir").get<std::string>();
    }
    if (j.contains("kernel")) c.nus = j.at("kernel").value("nus", c.nus);
    if (j.contains("ot")) {
      c.ot.eta = j.at("ot").value("eta", c.ot.eta);
      c.ot.big_m = j.at("ot").value("big_m", c.ot.big_m);
    }
    if (j.contains("shape")) {
      const auto& s = j.at("shape");
      c.shape.samples = s.value("samples", c.shape.samples);
      c.shape.max_iters = s.value("max_iters", c.shape.max_iters);
      c.shape.tol = s.value("tol", c.shape.tol);
      c.shape.restarts = s.value("restarts", c.shape.restarts);
      c.shape.seed = s.value("seed", c.shape.seed);
      c.max_shape_qubits = s.value("max_qubits", c.max_shape_qubits);
    }
    if (j.contains("gp")) {
      c.fit.random_starts = j.at("gp").value("random_starts", c.fit.random_starts);
      c.fit.max_iters = j.at("gp").value("max_iters", c.fit.max_iters);
    }
    if (j.contains("evo")) {
      const auto& e = j.at("evo");
      c.evo.c_tau = e.value("c_tau", c.evo.c_tau);
      c.evo.c_k = e.value("c_k", c.evo.c_k);
      c.evo.c_off = e.value("c_off", c.evo.c_off);
      c.evo.change_probs = e.value("change_probs", c.evo.change_probs);
      c.evo.type_change_prob = e.value("type_change_prob", c.evo.type_change_prob);
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed experiment config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigurationError(e.what());
  }
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(path.string() + ": " + e.what());
  }
  return experiment_config_from_json(j);
}

}  // namespace qnas
