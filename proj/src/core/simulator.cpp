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

#include "qnas/core/simulator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnas {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Eigen::Matrix2cd pauli(GateType t) {
  Eigen::Matrix2cd m;
  switch (t) {
    case GateType::X: case GateType::CX: case GateType::RX: case GateType::CRX: case GateType::RXX:
      m << 0, 1, 1, 0;
      break;
    case GateType::Y: case GateType::CY: case GateType::RY: case GateType::CRY: case GateType::RYY:
      m << 0, -kI, kI, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::Matrix2cd rotation(GateType t, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return c * Eigen::Matrix2cd::Identity() - kI * s * pauli(t);
}

Eigen::Matrix4cd controlled(const Eigen::Matrix2cd& u) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m.block<2, 2>(2, 2) = u;
  return m;
}

void require_theta(const Gate& g, const std::optional<double>& theta) {
  if (g.parametrized() && !theta) {
    throw std::invalid_argument("gate " + to_string(g) + " needs an angle");
  }
  if (!g.parametrized() && theta) {
    throw std::invalid_argument("fixed gate " + to_string(g) + " takes no angle");
  }
}

}  // namespace

Eigen::MatrixXcd local_matrix(GateType t, double theta) {
  switch (t) {
    case GateType::H: {
      Eigen::Matrix2cd h;
      h << 1, 1, 1, -1;
      return h / std::sqrt(2.0);
    }
    case GateType::X: case GateType::Y: case GateType::Z:
      return pauli(t);
    case GateType::CX: case GateType::CY: case GateType::CZ:
      return controlled(pauli(t));
    case GateType::RX: case GateType::RY: case GateType::RZ:
      return rotation(t, theta);
    case GateType::CRX: case GateType::CRY: case GateType::CRZ:
      return controlled(rotation(t, theta));
    case GateType::RXX: case GateType::RYY: case GateType::RZZ: {
      const Eigen::Matrix2cd p = pauli(t);
      Eigen::Matrix4cd pp;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) pp.block<2, 2>(2 * i, 2 * j) = p(i, j) * p;
      return std::cos(theta / 2) * Eigen::Matrix4cd::Identity() - kI * std::sin(theta / 2) * pp;
    }
  }
  throw std::logic_error("unhandled gate type");
}

void apply_gate_inplace(const Gate& g, double theta, int n_qubits, Eigen::MatrixXcd& states) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (static_cast<std::size_t>(states.rows()) != dim) {
    throw std::invalid_argument("state dimension " + std::to_string(states.rows()) +
                                " does not match " + std::to_string(n_qubits) + " qubits");
  }
  validate_gate(g, n_qubits);
  const Eigen::MatrixXcd u = local_matrix(g.type, theta);
  const std::size_t m0 = std::size_t{1} << (n_qubits - 1 - g.w[0]);

  if (g.arity() == 1) {
    const cd u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (Eigen::Index col = 0; col < states.cols(); ++col) {
      cd* a = states.col(col).data();
      for (std::size_t base = 0; base < dim; base += 2 * m0) {
        for (std::size_t i = base; i < base + m0; ++i) {
          const cd a0 = a[i], a1 = a[i | m0];
          a[i] = u00 * a0 + u01 * a1;
          a[i | m0] = u10 * a0 + u11 * a1;
        }
      }
    }
    return;
  }

  const std::size_t m1 = std::size_t{1} << (n_qubits - 1 - g.w[1]);
  const std::size_t both = m0 | m1;
  for (Eigen::Index col = 0; col < states.cols(); ++col) {
    cd* a = states.col(col).data();
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & both) continue;
      const std::size_t idx[4] = {i, i | m1, i | m0, i | both};
      const cd v[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
      for (int r = 0; r < 4; ++r) {
        a[idx[r]] = u(r, 0) * v[0] + u(r, 1) * v[1] + u(r, 2) * v[2] + u(r, 3) * v[3];
      }
    }
  }
}

void apply_circuit_inplace(const Circuit& c, std::span<const double> params, Eigen::MatrixXcd& states) {
  if (static_cast<int>(params.size()) != c.param_count()) {
    throw std::invalid_argument("circuit takes " + std::to_string(c.param_count()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  std::size_t p = 0;
  for (const Gate& g : c.gates()) {
    const double theta = g.parametrized() ? params[p++] : 0.0;
    apply_gate_inplace(g, theta, c.n_qubits(), states);
  }
}

UnitaryOp gate_unitary(const Gate& g, std::optional<double> theta, int n_qubits) {
  require_theta(g, theta);
  UnitaryOp u = UnitaryOp::Identity(Eigen::Index{1} << n_qubits, Eigen::Index{1} << n_qubits);
  apply_gate_inplace(g, theta.value_or(0.0), n_qubits, u);
  return u;
}

UnitaryOp circuit_unitary(const Circuit& c, std::span<const double> params) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  UnitaryOp u = UnitaryOp::Identity(dim, dim);
  apply_circuit_inplace(c, params, u);
  return u;
}

StateVector apply_circuit(const Circuit& c, std::span<const double> params, const StateVector& state) {
  Eigen::MatrixXcd s = state;
  apply_circuit_inplace(c, params, s);
  return s.col(0);
}

StateVector basis_state(int n_qubits, std::size_t index) {
  StateVector s = StateVector::Zero(Eigen::Index{1} << n_qubits);
  s(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

}  // namespace qnas

namespace qnas {

Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& local, std::span<const int> wires, int n_qubits) {
  const int k = static_cast<int>(wires.size());
  if (local.rows() != (Eigen::Index{1} << k) || local.cols() != local.rows()) {
    throw std::invalid_argument("local operator size does not match " + std::to_string(k) + " wire(s)");
  }
  std::size_t mask = 0;
  std::vector<std::size_t> bit(k);
  for (int i = 0; i < k; ++i) {
    if (wires[i] < 0 || wires[i] >= n_qubits) throw std::invalid_argument("wire out of range");
    bit[i] = std::size_t{1} << (n_qubits - 1 - wires[i]);
    if (mask & bit[i]) throw std::invalid_argument("repeated wire");
    mask |= bit[i];
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  auto local_index = [&](std::size_t full) {
    std::size_t l = 0;
    for (int i = 0; i < k; ++i) l = (l << 1) | ((full & bit[i]) ? 1 : 0);
    return l;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = local(local_index(r), local_index(c));
    }
  }
  return out;
}

}  // namespace qnas
