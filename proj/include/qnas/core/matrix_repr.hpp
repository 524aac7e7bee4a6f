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

#include <Eigen/Dense>

#include "qnas/core/circuit.hpp"

namespace qnas {

/// (n+1) x N placeholder matrix used by sampling. Rows 0..n-1 mark the
/// wires a gate acts on, the last row holds the gate's representative
/// number.
struct MatrixRepr {
  Eigen::MatrixXd matrix;
};

/// Single-qubit gates put 1.0 on their wire; two-qubit gates put 0.75 on
/// the first wire and 0.25 on the second.
MatrixRepr encode_matrix(const Circuit& c);

/// Total: every (n+1) x N matrix decodes to a valid circuit. The gate type
/// is the one whose representative number is nearest the last-row value
/// (single-qubit types only when n_qubits == 1); wires are the largest
/// entries of the first n rows, lowest row index on ties.
Circuit decode_matrix(const MatrixRepr& m, int n_qubits);

}  // namespace qnas
