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

#include "qnas/core/gate.hpp"

namespace qnas {

/// U = exp(i t H) with H Hermitian, ||H||_* = 1 in the 2^n space. For a
/// parametrized gate U(theta) = exp(i theta t H): H is the direction of the
/// family and t its rate per radian.
struct GeneratorDecomposition {
  Eigen::MatrixXcd H;
  double t = 0.0;
};

/// Sum of singular values.
double nuclear_norm(const Eigen::MatrixXcd& m);

/// Unnormalized generator on the gate's own wires (2x2 or 4x4): the
/// derivative of the family at zero for rotations, the principal log for
/// fixed gates (eigenphases in (-pi, pi], -1 taken as +pi).
Eigen::MatrixXcd local_generator(GateType t);

/// Throws DegenerateGeneratorError when the generator vanishes.
GeneratorDecomposition hermitian_generator(const Gate& g, int n_qubits);

/// ||H1 - H2||_* / 2 in the 2^n space. Evaluated exactly on the union of
/// the two gates' wires, which gives the same value as the full space.
double core_distance(const Gate& g1, const Gate& g2, int n_qubits);

}  // namespace qnas
