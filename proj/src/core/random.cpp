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

#include "qnas/core/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qnas {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ull)));
}

std::uint64_t Rng::uniform_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_int over an empty range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int with hi < lo");
  return lo + static_cast<int>(uniform_int(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2 * std::numbers::pi * u2);
  has_spare_ = true;
  return r * std::cos(2 * std::numbers::pi * u2);
}

std::size_t Rng::categorical(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("categorical weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("categorical weights sum to zero");
  double u = uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  // Rounding can leave u just above the last bucket.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return weights.size() - 1;
}

Eigen::MatrixXcd haar_unitary(int d, Rng& rng) {
  Eigen::MatrixXcd z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = {rng.normal(), rng.normal()};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

Eigen::VectorXcd haar_state(int d, Rng& rng) {
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = {rng.normal(), rng.normal()};
  return v / v.norm();
}

GateType random_gate_type(int n_qubits, Rng& rng) {
  if (n_qubits == 1) {
    return kSingleQubitGateTypes[rng.uniform_int(kSingleQubitGateTypes.size())];
  }
  return kAllGateTypes[rng.uniform_int(kAllGateTypes.size())];
}

Gate random_placement(GateType t, int n_qubits, Rng& rng) {
  if (arity(t) > n_qubits) {
    throw std::invalid_argument("gate " + std::string(gate_name(t)) + " does not fit on " +
                                std::to_string(n_qubits) + " qubit(s)");
  }
  const int q0 = rng.uniform_int(0, n_qubits - 1);
  if (arity(t) == 1) return Gate(t, q0);
  int q1 = rng.uniform_int(0, n_qubits - 2);
  if (q1 >= q0) ++q1;
  return Gate(t, q0, q1);
}

Circuit random_circuit(int n_qubits, int n_gates, Rng& rng) {
  if (n_gates < 1) throw std::invalid_argument("random_circuit needs at least one gate");
  Circuit c(n_qubits);
  for (int i = 0; i < n_gates; ++i) {
    c.push_back(random_placement(random_gate_type(n_qubits, rng), n_qubits, rng));
  }
  return c;
}

}  // namespace qnas
