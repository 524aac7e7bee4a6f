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

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnas/bench/maxcut.hpp"
#include "qnas/bench/qgan.hpp"
#include "qnas/bench/train.hpp"
#include "qnas/core/circuit.hpp"

namespace qnas {

enum class ObjectiveKind { QFT, MaxCut, QGAN };

std::string objective_name(ObjectiveKind k);
ObjectiveKind parse_objective_kind(const std::string& s);

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::QFT;
  int n_qubits = 2;
  int n_gates = 6;
  int maxcut_graphs = 10;
  std::uint64_t maxcut_first_seed = 0;
  QganConfig qgan;
  TrainConfig train;

  /// Fidelity and normalized cut are maximized, D_KL is minimized.
  bool maximize() const { return kind != ObjectiveKind::QGAN; }

  /// QFT: 2 qubits / 6 gates; MaxCut: 9 qubits / 5 gates; QGAN: 3 qubits / 12 gates.
  static ObjectiveSpec preset(ObjectiveKind kind);
};

nlohmann::json to_json(const ObjectiveSpec& s);
/// Missing keys fall back to the preset of the given kind.
ObjectiveSpec objective_spec_from_json(const nlohmann::json& j);

class Objective {
 public:
  explicit Objective(ObjectiveSpec spec);

  const ObjectiveSpec& spec() const { return spec_; }

  /// Objective value in the benchmark's own units.
  double evaluate(const Circuit& c) const;

  /// Value mapped so that larger is better.
  double score(double value) const { return spec_.maximize() ? value : -value; }

  const std::vector<MaxcutProblem>& maxcut_problems() const { return problems_; }

 private:
  ObjectiveSpec spec_;
  std::vector<MaxcutProblem> problems_;
};

}  // namespace qnas
