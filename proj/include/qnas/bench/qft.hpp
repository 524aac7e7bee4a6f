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

#include <span>

#include "qnas/bench/train.hpp"
#include "qnas/core/circuit.hpp"
#include "qnas/core/simulator.hpp"

namespace qnas {

/// (1/sqrt d) sum_{s,t} exp(2 pi i s t / d) |t><s|.
UnitaryOp qft_unitary(int n_qubits);

/// Mean anchor fidelity (1/K) sum_k |<psi_k| target^dagger U(params) |psi_k>|^2
/// against a fixed target, with the MUB anchors of the circuit's dimension.
class AnchorFidelity {
 public:
  AnchorFidelity(const UnitaryOp& target, int n_qubits);
  double operator()(const Circuit& c, std::span<const double> params) const;

 private:
  int n_;
  Eigen::MatrixXcd anchors_;  // d x K
  Eigen::MatrixXcd targets_;  // target * anchors
};

struct QftResult {
  double fidelity = 0.0;
  std::vector<double> params;
};

/// Trains the circuit for the QFT of its own qubit count; returns the best
/// fidelity over the restarts.
QftResult qft_objective(const Circuit& c, const TrainConfig& cfg = {});

}  // namespace qnas
