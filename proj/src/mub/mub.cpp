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

#include "qnas/mub/mub.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qnas/mub/galois_ring.hpp"

namespace qnas {

namespace {

// Teichmuller index: 0 -> zero, j + 1 -> xi^j.
int log_index(int t) { return t - 1; }

const std::complex<double> kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

MubSet::MubSet(int n_qubits) : n_(n_qubits) {
  GaloisRing ring(n_qubits);  // validates n
  d_ = 1 << n_qubits;
  const int q1 = d_ - 1;
  trace_of_power_.resize(q1);
  GrElement p = ring.one();
  for (int k = 0; k < q1; ++k) {
    trace_of_power_[k] = static_cast<std::uint8_t>(ring.trace(p));
    p = ring.mul(p, ring.generator());
  }
}

std::uint8_t MubSet::phase_code(int a, int b, int x) const {
  // tr((a + 2b) x) = tr(a x) + 2 tr(b x); products of Teichmuller elements
  // stay in the set, so only tr(xi^k) is needed.
  const int q1 = d_ - 1;
  auto tr_product = [&](int u, int v) -> int {
    if (u == 0 || v == 0) return 0;
    return trace_of_power_[(log_index(u) + log_index(v)) % q1];
  };
  return static_cast<std::uint8_t>((tr_product(a, x) + 2 * tr_product(b, x)) & 3);
}

Eigen::MatrixXcd MubSet::basis(int j) const {
  if (j < 0 || j > d_) throw std::out_of_range("basis index " + std::to_string(j));
  if (j == 0) return Eigen::MatrixXcd::Identity(d_, d_);
  const int a = j - 1;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d_));
  Eigen::MatrixXcd m(d_, d_);
  for (int b = 0; b < d_; ++b)
    for (int x = 0; x < d_; ++x) m(x, b) = norm * kPowersOfI[phase_code(a, b, x)];
  return m;
}

Eigen::VectorXcd MubSet::anchor(std::size_t k) const {
  if (k >= num_anchors()) throw std::out_of_range("anchor index " + std::to_string(k));
  const int j = static_cast<int>(k / d_);
  const int b = static_cast<int>(k % d_);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d_);
  if (j == 0) {
    v(b) = 1.0;
    return v;
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(d_));
  for (int x = 0; x < d_; ++x) v(x) = norm * kPowersOfI[phase_code(j - 1, b, x)];
  return v;
}

Eigen::MatrixXcd MubSet::anchor_matrix() const {
  if (d_ > 64) throw std::invalid_argument("anchor_matrix is limited to d <= 64");
  Eigen::MatrixXcd m(d_, num_anchors());
  for (int j = 0; j <= d_; ++j) m.middleCols(static_cast<Eigen::Index>(j) * d_, d_) = basis(j);
  return m;
}

double haar_average_fidelity(const Eigen::MatrixXcd& u, const MubSet& mub) {
  if (u.rows() != mub.dim() || u.cols() != mub.dim()) {
    throw std::invalid_argument("unitary of size " + std::to_string(u.rows()) + " vs MUB dimension " +
                                std::to_string(mub.dim()));
  }
  double sum = 0.0;
  for (int j = 0; j < mub.num_bases(); ++j) {
    const Eigen::MatrixXcd b = mub.basis(j);
    const Eigen::MatrixXcd ub = u * b;
    for (int k = 0; k < mub.dim(); ++k) sum += std::norm(b.col(k).dot(ub.col(k)));
  }
  return sum / static_cast<double>(mub.num_anchors());
}

double haar_average_fidelity_exact(const Eigen::MatrixXcd& u) {
  const double d = static_cast<double>(u.rows());
  return (d + std::norm(u.trace())) / (d * (d + 1));
}

const MubSet& shared_mub(int n_qubits) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MubSet>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n_qubits];
  if (!slot) slot = std::make_unique<MubSet>(n_qubits);
  return *slot;
}

}  // namespace qnas
