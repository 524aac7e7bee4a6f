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

#include <cstdint>
#include <random>
#include <span>

#include <Eigen/Dense>

#include "qnas/core/circuit.hpp"

namespace qnas {

/// mt19937_64 with distribution code written out here so that streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  /// Independent stream keyed by (seed, stream).
  static Rng derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n).
  std::uint64_t uniform_int(std::uint64_t n);
  /// Uniform on [lo, hi] inclusive.
  int uniform_int(int lo, int hi);
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Index drawn with probability proportional to weights[i].
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-distributed d x d unitary (QR of a Ginibre matrix, phases fixed).
Eigen::MatrixXcd haar_unitary(int d, Rng& rng);

/// Haar-distributed unit vector in C^d.
Eigen::VectorXcd haar_state(int d, Rng& rng);

/// Uniform catalog type (single-qubit types only when n_qubits == 1).
GateType random_gate_type(int n_qubits, Rng& rng);

/// Gate of the given type with wires drawn uniformly without replacement.
Gate random_placement(GateType t, int n_qubits, Rng& rng);

Circuit random_circuit(int n_qubits, int n_gates, Rng& rng);

}  // namespace qnas
