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

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "qnas/core/circuit.hpp"

namespace qnas {

using StateVector = Eigen::VectorXcd;
using UnitaryOp = Eigen::MatrixXcd;

// Conventions: RP(t) = exp(-i t P / 2) for P in {X, Y, Z}; RPP(t) =
// exp(-i t P(x)P / 2); CRP(t) = |0><0| (x) I + |1><1| (x) RP(t). Qubit 0 is
// the most significant bit of a basis-state index.

/// 2x2 (single-qubit) or 4x4 (two-qubit, local index 2*b(w0) + b(w1)) matrix.
/// `theta` is ignored for fixed gates.
Eigen::MatrixXcd local_matrix(GateType t, double theta);

/// Full 2^n unitary with the gate on its wires and identity elsewhere.
/// Throws std::invalid_argument when theta is given for a fixed gate or
/// missing for a parametrized one.
UnitaryOp gate_unitary(const Gate& g, std::optional<double> theta, int n_qubits);

/// U_L ... U_1, gate 0 applied first.
UnitaryOp circuit_unitary(const Circuit& c, std::span<const double> params);

StateVector apply_circuit(const Circuit& c, std::span<const double> params, const StateVector& state);

/// Applies one gate to every column of `states` in place.
void apply_gate_inplace(const Gate& g, double theta, int n_qubits, Eigen::MatrixXcd& states);

/// Applies the circuit to every column of `states` in place.
void apply_circuit_inplace(const Circuit& c, std::span<const double> params, Eigen::MatrixXcd& states);

StateVector basis_state(int n_qubits, std::size_t index);

}  // namespace qnas

namespace qnas {

/// Embeds a 2^k x 2^k operator acting on `wires` (first wire = most
/// significant local bit) into the 2^n space, identity elsewhere.
Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& local, std::span<const int> wires, int n_qubits);

}  // namespace qnas
