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
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qnas/core/gate.hpp"
#include "qnas/core/random.hpp"

namespace qnas {

struct ShapeConfig {
  int samples = 12;        // angles 2 pi t / samples, t < samples
  int max_iters = 200;
  double tol = 1e-8;       // stop when one sweep lowers the objective by less
  int restarts = 3;        // V = I first, then Haar-random starts
  std::uint64_t seed = 0;
};

/// Minimizer of the anchor-sum misalignment between the orbits of two
/// parametrized gates, taken over both argument orders so that it is
/// symmetric. `distance` is +inf when exactly one gate is fixed and
/// 0 when both are.
struct ShapeSolution {
  double distance = 0.0;
  Eigen::MatrixXcd V;      // d x d unitary
  Eigen::MatrixXcd M;      // d x K, unit columns
  Eigen::MatrixXd alpha;   // K x T phases
  int iterations = 0;
  bool converged = true;
  bool swapped = false;    // V, M and alpha align g2 onto g1 rather than g1 onto g2
  /// Objective after every single update (alpha, V, alpha, M, ...) of the
  /// returned restart, starting from the initial point.
  std::vector<double> trace;
};

ShapeSolution shape_distance(const Gate& g1, const Gate& g2, int n_qubits, const ShapeConfig& cfg = {});

/// Single descent from a given starting V (M starts at its closed form).
ShapeSolution shape_descent(const Gate& g1, const Gate& g2, int n_qubits, const ShapeConfig& cfg,
                            const Eigen::MatrixXcd& v0);

/// (1 / 2KT) sum_{k,t} || e^{i alpha_kt} V U1(theta_t) psi_k - U2(theta_t) M e_k ||^2.
double shape_objective(const Gate& g1, const Gate& g2, int n_qubits, int samples, const Eigen::MatrixXcd& V,
                       const Eigen::MatrixXcd& M, const Eigen::MatrixXd& alpha);

/// Monte-Carlo estimate of the Haar-integral form with V held fixed: for each
/// random state the counterpart and the phases are optimized, and the mean
/// 1 - (1/T) sum_t |<U2(theta_t) phi | V U1(theta_t) psi>| is returned.
double shape_integral_estimate(const Gate& g1, const Gate& g2, int n_qubits, int samples,
                               const Eigen::MatrixXcd& V, int n_states, Rng& rng);

}  // namespace qnas
