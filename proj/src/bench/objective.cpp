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

#include "qnas/bench/objective.hpp"

#include <stdexcept>

#include "qnas/bench/qft.hpp"

namespace qnas {

std::string objective_name(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::QFT: return "qft";
    case ObjectiveKind::MaxCut: return "maxcut";
    case ObjectiveKind::QGAN: return "qgan";
  }
  throw std::logic_error("bad objective kind");
}

ObjectiveKind parse_objective_kind(const std::string& s) {
  if (s == "qft" || s == "QFT") return ObjectiveKind::QFT;
  if (s == "maxcut" || s == "MaxCut") return ObjectiveKind::MaxCut;
  if (s == "qgan" || s == "QGAN") return ObjectiveKind::QGAN;
  throw std::invalid_argument("unknown objective \"" + s + "\" (expected qft, maxcut or qgan)");
}

ObjectiveSpec ObjectiveSpec::preset(ObjectiveKind kind) {
  ObjectiveSpec s;
  s.kind = kind;
  switch (kind) {
    case ObjectiveKind::QFT: s.n_qubits = 2; s.n_gates = 6; break;
    case ObjectiveKind::MaxCut: s.n_qubits = 9; s.n_gates = 5; break;
    case ObjectiveKind::QGAN: s.n_qubits = 3; s.n_gates = 12; break;
  }
  return s;
}

nlohmann::json to_json(const ObjectiveSpec& s) {
  return {
      {"kind", objective_name(s.kind)},
      {"n_qubits", s.n_qubits},
      {"n_gates", s.n_gates},
      {"maxcut", {{"graphs", s.maxcut_graphs}, {"first_seed", s.maxcut_first_seed}}},
      {"qgan",
       {{"epochs", s.qgan.epochs},
        {"batch", s.qgan.batch},
        {"dataset", s.qgan.dataset},
        {"learning_rate", s.qgan.learning_rate},
        {"init_range", s.qgan.init_range},
        {"fd_step", s.qgan.fd_step},
        {"leaky_slope", s.qgan.leaky_slope},
        {"seed", s.qgan.seed}}},
      {"train",
       {{"restarts", s.train.restarts},
        {"fd_step", s.train.fd_step},
        {"bound", s.train.bound},
        {"init_range", s.train.init_range},
        {"max_iters", s.train.max_iters},
        {"seed", s.train.seed}}},
  };
}

ObjectiveSpec objective_spec_from_json(const nlohmann::json& j) {
  ObjectiveSpec s = ObjectiveSpec::preset(parse_objective_kind(j.at("kind").get<std::string>()));
  s.n_qubits = j.value("n_qubits", s.n_qubits);
  s.n_gates = j.value("n_gates", s.n_gates);
  if (j.contains("maxcut")) {
    const auto& m = j.at("maxcut");
    s.maxcut_graphs = m.value("graphs", s.maxcut_graphs);
    s.maxcut_first_seed = m.value("first_seed", s.maxcut_first_seed);
  }
  if (j.contains("qgan")) {
    const auto& q = j.at("qgan");
    s.qgan.epochs = q.value("epochs", s.qgan.epochs);
    s.qgan.batch = q.value("batch", s.qgan.batch);
    s.qgan.dataset = q.value("dataset", s.qgan.dataset);
    s.qgan.learning_rate = q.value("learning_rate", s.qgan.learning_rate);
    s.qgan.init_range = q.value("init_range", s.qgan.init_range);
    s.qgan.fd_step = q.value("fd_step", s.qgan.fd_step);
    s.qgan.leaky_slope = q.value("leaky_slope", s.qgan.leaky_slope);
    s.qgan.seed = q.value("seed", s.qgan.seed);
  }
  if (j.contains("train")) {
    const auto& t = j.at("train");
    s.train.restarts = t.value("restarts", s.train.restarts);
    s.train.fd_step = t.value("fd_step", s.train.fd_step);
    s.train.bound = t.value("bound", s.train.bound);
    s.train.init_range = t.value("init_range", s.train.init_range);
    s.train.max_iters = t.value("max_iters", s.train.max_iters);
    s.train.seed = t.value("seed", s.train.seed);
  }
  if (s.n_qubits < 1 || s.n_gates < 1) throw std::invalid_argument("objective needs positive qubit and gate counts");
  return s;
}

Objective::Objective(ObjectiveSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == ObjectiveKind::MaxCut) {
    if (spec_.maxcut_graphs < 1) throw std::invalid_argument("MaxCut needs at least one graph");
    problems_ = qnas::maxcut_problems(spec_.n_qubits, spec_.maxcut_graphs, spec_.maxcut_first_seed);
  }
  if (spec_.kind == ObjectiveKind::QGAN && spec_.n_qubits != 3) {
    throw std::invalid_argument("the QGAN objective is defined on 3 qubits");
  }
}

double Objective::evaluate(const Circuit& c) const {
  if (c.n_qubits() != spec_.n_qubits) {
    throw std::invalid_argument("circuit has " + std::to_string(c.n_qubits()) + " qubits, objective expects " +
                                std::to_string(spec_.n_qubits));
  }
  switch (spec_.kind) {
    case ObjectiveKind::QFT: return qft_objective(c, spec_.train).fidelity;
    case ObjectiveKind::MaxCut: return maxcut_objective(c, problems_, spec_.train);
    case ObjectiveKind::QGAN: return train_qgan(c, spec_.qgan).kl;
  }
  throw std::logic_error("bad objective kind");
}

}  // namespace qnas
