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

#include "qnas/bench/qft.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qnas/mub/mub.hpp"

namespace qnas {

UnitaryOp qft_unitary(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("QFT needs at least one qubit");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  UnitaryOp u(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index s = 0; s < d; ++s)
    for (Eigen::Index t = 0; t < d; ++t)
      u(t, s) = std::polar(norm, 2 * std::numbers::pi * static_cast<double>((s * t) % d) / static_cast<double>(d));
  return u;
}

AnchorFidelity::AnchorFidelity(const UnitaryOp& target, int n_qubits)
    : n_(n_qubits), anchors_(shared_mub(n_qubits).anchor_matrix()), targets_(target * anchors_) {
  if (target.rows() != anchors_.rows()) throw std::invalid_argument("target dimension does not match qubit count");
}

double AnchorFidelity::operator()(const Circuit& c, std::span<const double> params) const {
  if (c.n_qubits() != n_) throw std::invalid_argument("circuit qubit count does not match the fidelity target");
  Eigen::MatrixXcd states = anchors_;
  apply_circuit_inplace(c, params, states);
  return (targets_.conjugate().cwiseProduct(states)).colwise().sum().cwiseAbs2().mean();
}

QftResult qft_objective(const Circuit& c, const TrainConfig& cfg) {
  const AnchorFidelity fid(qft_unitary(c.n_qubits()), c.n_qubits());
  const TrainResult r =
      train_minimize([&](std::span<const double> p) { return 1.0 - fid(c, p); }, c.param_count(), cfg);
  return {std::clamp(1.0 - r.value, 0.0, 1.0), r.params};
}

}  // namespace qnas
