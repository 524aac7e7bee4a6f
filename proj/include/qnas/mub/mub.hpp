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
#include <vector>

#include <Eigen/Dense>

namespace qnas {

/// d + 1 mutually unbiased bases of C^d, d = 2^n: the standard basis first,
/// then one basis per Teichmuller element. Vectors are materialized on
/// demand from Z4 phase codes, so even n = 9 stays small.
class MubSet {
 public:
  explicit MubSet(int n_qubits);

  int n_qubits() const { return n_; }
  int dim() const { return d_; }
  int num_bases() const { return d_ + 1; }
  /// K = d(d + 1).
  std::size_t num_anchors() const { return static_cast<std::size_t>(d_) * (d_ + 1); }

  /// Basis `j` as a d x d matrix whose columns are the basis vectors.
  Eigen::MatrixXcd basis(int j) const;
  /// Anchor k = basis(k / d).col(k % d).
  Eigen::VectorXcd anchor(std::size_t k) const;
  /// All anchors as columns of a d x K matrix. Guarded to d <= 64.
  Eigen::MatrixXcd anchor_matrix() const;

  /// Z4 phase exponent of component x of vector b in non-standard basis a
  /// (a, b, x index the Teichmuller set).
  std::uint8_t phase_code(int a, int b, int x) const;

 private:
  int n_;
  int d_;
  std::vector<std::uint8_t> trace_of_power_;  // tr(xi^k), k < d - 1
};

/// (1/K) sum_k |<psi_k|U|psi_k>|^2 over the anchors.
double haar_average_fidelity(const Eigen::MatrixXcd& u, const MubSet& mub);

/// Closed form (d + |Tr U|^2) / (d (d + 1)).
double haar_average_fidelity_exact(const Eigen::MatrixXcd& u);

/// Process-wide cache; construction happens once per n.
const MubSet& shared_mub(int n_qubits);

}  // namespace qnas
