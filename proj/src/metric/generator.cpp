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

#include "qnas/metric/generator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qnas/core/errors.hpp"
#include "qnas/core/simulator.hpp"

namespace qnas {

namespace {

Eigen::MatrixXcd principal_log_generator(const Eigen::MatrixXcd& u) {
  // u is unitary, hence normal: the Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd& t = schur.matrixT();
  Eigen::VectorXd phase(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    double p = std::arg(t(i, i));
    if (p <= -std::numbers::pi + 1e-12) p = std::numbers::pi;
    phase(i) = p;
  }
  return q * phase.cast<std::complex<double>>().asDiagonal() * q.adjoint();
}

Eigen::MatrixXcd pauli_of(GateType t) {
  switch (t) {
    case GateType::RX: case GateType::CRX: case GateType::RXX:
      return local_matrix(GateType::X, 0.0);
    case GateType::RY: case GateType::CRY: case GateType::RYY:
      return local_matrix(GateType::Y, 0.0);
    default:
      return local_matrix(GateType::Z, 0.0);
  }
}

}  // namespace

double nuclear_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().sum();
}

Eigen::MatrixXcd local_generator(GateType t) {
  if (!is_parametrized(t)) return principal_log_generator(local_matrix(t, 0.0));
  // d/dtheta exp(-i theta G / 2) at 0 = i * (-G / 2).
  switch (t) {
    case GateType::RX: case GateType::RY: case GateType::RZ:
      return -0.5 * pauli_of(t);
    case GateType::CRX: case GateType::CRY: case GateType::CRZ: {
      Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(4, 4);
      g.block(2, 2, 2, 2) = -0.5 * pauli_of(t);
      return g;
    }
    default: {
      const Eigen::MatrixXcd p = pauli_of(t);
      Eigen::MatrixXcd g(4, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.block(2 * i, 2 * j, 2, 2) = -0.5 * p(i, j) * p;
      return g;
    }
  }
}

GeneratorDecomposition hermitian_generator(const Gate& g, int n_qubits) {
  validate_gate(g, n_qubits);
  const Eigen::MatrixXcd full = embed_operator(local_generator(g.type), g.wires(), n_qubits);
  const double t = nuclear_norm(full);
  if (t < 1e-12) throw DegenerateGeneratorError("gate " + to_string(g) + " has a vanishing generator");
  return {full / t, t};
}

double core_distance(const Gate& g1, const Gate& g2, int n_qubits) {
  validate_gate(g1, n_qubits);
  validate_gate(g2, n_qubits);
  std::vector<int> support;
  auto relabel = [&support](int w) {
    for (std::size_t i = 0; i < support.size(); ++i)
      if (support[i] == w) return static_cast<int>(i);
    support.push_back(w);
    return static_cast<int>(support.size() - 1);
  };
  std::vector<int> w1, w2;
  for (int w : g1.wires()) w1.push_back(relabel(w));
  for (int w : g2.wires()) w2.push_back(relabel(w));
  const int m = static_cast<int>(support.size());

  auto normalized = [m](const Gate& g, const std::vector<int>& wires) {
    Eigen::MatrixXcd h = embed_operator(local_generator(g.type), wires, m);
    const double t = nuclear_norm(h);
    if (t < 1e-12) throw DegenerateGeneratorError("gate " + to_string(g) + " has a vanishing generator");
    return Eigen::MatrixXcd(h / t);
  };
  return 0.5 * nuclear_norm(normalized(g1, w1) - normalized(g2, w2));
}

}  // namespace qnas
