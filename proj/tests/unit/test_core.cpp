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

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "qnas/core/circuit.hpp"
#include "qnas/core/circuit_json.hpp"
#include "qnas/core/dag.hpp"
#include "qnas/core/matrix_repr.hpp"
#include "qnas/core/parallel.hpp"
#include "qnas/core/random.hpp"
#include "qnas/core/simulator.hpp"

using namespace qnas;
using cd = std::complex<double>;
using Eigen::MatrixXcd;

namespace {

const cd I(0, 1);

MatrixXcd pauli(char p) {
  MatrixXcd m(2, 2);
  if (p == 'X') m << 0, 1, 1, 0;
  if (p == 'Y') m << 0, -I, I, 0;
  if (p == 'Z') m << 1, 0, 0, -1;
  if (p == 'I') m.setIdentity();
  return m;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// exp(-i t P / 2) for an involutory P: cos(t/2) I - i sin(t/2) P.
MatrixXcd involution_rotation(const MatrixXcd& p, double t) {
  return std::cos(t / 2) * MatrixXcd::Identity(p.rows(), p.cols()) - I * std::sin(t / 2) * p;
}

MatrixXcd controlled(const MatrixXcd& u) {
  MatrixXcd out = MatrixXcd::Zero(4, 4);
  out.topLeftCorner(2, 2).setIdentity();
  out.bottomRightCorner(2, 2) = u;
  return out;
}

double max_diff(const MatrixXcd& a, const MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(GateCatalog, MetadataIsConsistent) {
  int fixed = 0;
  for (GateType t : kAllGateTypes) {
    EXPECT_EQ(parse_gate_type(gate_name(t)), t);
    fixed += !is_parametrized(t);
    EXPECT_EQ(param_dim(t), is_parametrized(t) ? 1 : 0);
  }
  EXPECT_EQ(fixed, kNumFixedTypes);
  EXPECT_FALSE(parse_gate_type("SWAP"));
  EXPECT_TRUE(is_controlled(GateType::CRY));
  EXPECT_FALSE(is_controlled(GateType::RXX));
}

TEST(GateCatalog, RepresentativeNumbersFollowTheLayout) {
  EXPECT_DOUBLE_EQ(representative_number(GateType::H), 0.1 / 8);
  EXPECT_DOUBLE_EQ(representative_number(GateType::CZ), 0.1 * 7 / 8);
  EXPECT_DOUBLE_EQ(representative_number(GateType::RX), 0.1 + 0.9 / 10);
  EXPECT_DOUBLE_EQ(representative_number(GateType::RZZ), 0.1 + 0.9 * 9 / 10);
}

TEST(GateCatalog, ValidationRejectsBadWires) {
  EXPECT_THROW(validate_gate(Gate(GateType::CX, 1, 1), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate(GateType::RX, 3), 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(Gate(GateType::RX, -1), 3), std::invalid_argument);
  EXPECT_NO_THROW(validate_gate(Gate(GateType::CRZ, 2, 0), 3));
  Circuit c(2);
  EXPECT_THROW(c.push_back(Gate(GateType::CX, 0, 2)), std::invalid_argument);
}

TEST(Simulator, LocalMatricesMatchClosedForms) {
  const double t = 0.7321;
  EXPECT_LT(max_diff(local_matrix(GateType::RX, t), involution_rotation(pauli('X'), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::RY, t), involution_rotation(pauli('Y'), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::RZ, t), involution_rotation(pauli('Z'), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::RXX, t), involution_rotation(kron(pauli('X'), pauli('X')), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::RYY, t), involution_rotation(kron(pauli('Y'), pauli('Y')), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::RZZ, t), involution_rotation(kron(pauli('Z'), pauli('Z')), t)), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::CRX, t), controlled(involution_rotation(pauli('X'), t))), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::CRY, t), controlled(involution_rotation(pauli('Y'), t))), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::CRZ, t), controlled(involution_rotation(pauli('Z'), t))), 1e-14);
  EXPECT_LT(max_diff(local_matrix(GateType::CX, 0), controlled(pauli('X'))), 1e-15);
  EXPECT_LT(max_diff(local_matrix(GateType::CY, 0), controlled(pauli('Y'))), 1e-15);
  EXPECT_LT(max_diff(local_matrix(GateType::CZ, 0), controlled(pauli('Z'))), 1e-15);
  MatrixXcd h(2, 2);
  h << 1, 1, 1, -1;
  EXPECT_LT(max_diff(local_matrix(GateType::H, 0), h / std::sqrt(2.0)), 1e-15);
}

TEST(Simulator, EmbeddingMatchesKroneckerProducts) {
  // Qubit 0 is the most significant bit, so a gate on qubit 1 of 3 is I (x) U (x) I.
  const MatrixXcd u = local_matrix(GateType::RY, 0.4);
  EXPECT_LT(max_diff(gate_unitary(Gate(GateType::RY, 1), 0.4, 3), kron(kron(pauli('I'), u), pauli('I'))), 1e-14);
  // CX with control 0 and target 2 on 3 qubits: |0><0| (x) I (x) I + |1><1| (x) I (x) X.
  MatrixXcd p0 = MatrixXcd::Zero(2, 2), p1 = MatrixXcd::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const MatrixXcd oracle = kron(kron(p0, pauli('I')), pauli('I')) + kron(kron(p1, pauli('I')), pauli('X'));
  EXPECT_LT(max_diff(gate_unitary(Gate(GateType::CX, 0, 2), std::nullopt, 3), oracle), 1e-15);
  // Reversed control: control 2, target 0.
  const MatrixXcd rev = kron(kron(pauli('I'), pauli('I')), p0) + kron(kron(pauli('X'), pauli('I')), p1);
  EXPECT_LT(max_diff(gate_unitary(Gate(GateType::CX, 2, 0), std::nullopt, 3), rev), 1e-15);
}

TEST(Simulator, ThetaPresenceIsChecked) {
  EXPECT_THROW(gate_unitary(Gate(GateType::RX, 0), std::nullopt, 1), std::invalid_argument);
  EXPECT_THROW(gate_unitary(Gate(GateType::H, 0), 0.3, 1), std::invalid_argument);
  Circuit c(2);
  c.push_back(Gate(GateType::RX, 0));
  const std::vector<double> none;
  EXPECT_THROW(circuit_unitary(c, none), std::invalid_argument);
}

TEST(Simulator, StateEvolutionAgreesWithUnitary) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = random_circuit(4, 12, rng);
    std::vector<double> theta(c.param_count());
    for (double& t : theta) t = rng.uniform(-3, 3);
    const MatrixXcd u = circuit_unitary(c, theta);
    EXPECT_LT((u.adjoint() * u - MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12);
    const Eigen::VectorXcd psi = haar_state(16, rng);
    EXPECT_LT((apply_circuit(c, theta, psi) - u * psi).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Simulator, BellStateFromHadamardAndCnot) {
  Circuit c(2);
  c.push_back(Gate(GateType::H, 0));
  c.push_back(Gate(GateType::CX, 0, 1));
  const std::vector<double> none;
  const Eigen::VectorXcd psi = apply_circuit(c, none, basis_state(2, 0));
  EXPECT_NEAR(psi(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi(3).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(psi(1)) + std::abs(psi(2)), 0.0, 1e-15);
}

TEST(CircuitIo, JsonRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Circuit c = random_circuit(5, 15, rng);
    EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c);
  }
  EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n_qubits":2,"gates":[{"type":"CX","wires":[0]}]})")),
               std::invalid_argument);
  EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n_qubits":2,"gates":[{"type":"FOO","wires":[0]}]})")),
               std::invalid_argument);
}

TEST(CircuitDag, RoundTripIsIdentity) {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const Circuit c = random_circuit(4, 1 + i % 12, rng);
    const CircuitDag dag = circuit_to_dag(c);
    EXPECT_EQ(dag.nodes.size(), c.size() + 8);
    EXPECT_EQ(dag_to_circuit(dag), c);
  }
}

TEST(CircuitDag, CycleIsRejected) {
  Circuit c(1);
  c.push_back(Gate(GateType::H, 0));
  c.push_back(Gate(GateType::X, 0));
  CircuitDag dag = circuit_to_dag(c);
  dag.add_edge(2, 1, 0);
  EXPECT_THROW(dag_to_circuit(dag), std::invalid_argument);
}

TEST(MatrixRepr, EncodeDecodeRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Circuit c = random_circuit(3, 8, rng);
    const MatrixRepr m = encode_matrix(c);
    EXPECT_EQ(m.matrix.rows(), 4);
    EXPECT_EQ(decode_matrix(m, 3), c);
  }
}

TEST(MatrixRepr, DecodingIsTotal) {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    MatrixRepr m{Eigen::MatrixXd::Random(4, 6)};
    const Circuit c = decode_matrix(m, 3);
    EXPECT_EQ(c.size(), 6u);
  }
}

TEST(Random, StreamsAreReproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c = Rng::derive(7, 1), d = Rng::derive(7, 2);
  EXPECT_NE(c.next(), d.next());
}

TEST(Random, HaarUnitaryIsUnitaryWithUniformDiagonalPhases) {
  Rng rng(9);
  std::complex<double> mean_trace = 0;
  const int n = 400;
  for (int i = 0; i < n; ++i) {
    const MatrixXcd u = haar_unitary(4, rng);
    EXPECT_LT((u.adjoint() * u - MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
    mean_trace += u.trace();
  }
  // E[Tr U] = 0 under the Haar measure; |Tr U| has unit second moment.
  EXPECT_LT(std::abs(mean_trace / double(n)), 0.15);
}

TEST(Random, CategoricalFollowsWeights) {
  Rng rng(11);
  const std::vector<double> w = {1, 0, 3};
  int counts[3] = {};
  for (int i = 0; i < 40000; ++i) ++counts[rng.categorical(w)];
  EXPECT_EQ(counts[1], 0);
  EXPECT_NEAR(counts[2] / 40000.0, 0.75, 0.01);
}

TEST(Parallel, CoversEveryIndexAndRethrows) {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 3) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(ParamBinding, SharedParametersAreScaled) {
  ParamBinding b{{0, 1, 0}, {2.0, -1.0, 0.5}, 2};
  const std::vector<double> shared = {1.0, 3.0};
  const auto angles = b.bind(shared);
  ASSERT_EQ(angles.size(), 3u);
  EXPECT_DOUBLE_EQ(angles[0], 2.0);
  EXPECT_DOUBLE_EQ(angles[1], -3.0);
  EXPECT_DOUBLE_EQ(angles[2], 0.5);
}
