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

#include "qnas/harness/mds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qnas/bench/ansatz.hpp"

namespace qnas {

MdsResult mds_embed(const Eigen::MatrixXd& d, int dims) {
  const Eigen::Index n = d.rows();
  if (d.cols() != n) throw std::invalid_argument("distance matrix must be square");
  if (dims < 1) throw std::invalid_argument("embedding needs at least one dimension");
  if (n > 0 && (d - d.transpose()).cwiseAbs().maxCoeff() > 1e-8) throw std::invalid_argument("distance matrix is not symmetric");
  if (n > 0 && d.diagonal().cwiseAbs().maxCoeff() > 1e-8) throw std::invalid_argument("distance matrix has a nonzero diagonal");

  const Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / std::max<Eigen::Index>(n, 1));
  const Eigen::MatrixXd b = -0.5 * j * d.cwiseAbs2() * j;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (b + b.transpose()));

  MdsResult r;
  r.coords = Eigen::MatrixXd::Zero(n, dims);
  r.eigenvalues = Eigen::VectorXd::Zero(dims);
  // Eigenvalues come out ascending.
  for (int k = 0; k < dims && k < n; ++k) {
    const Eigen::Index col = n - 1 - k;
    const double lambda = std::max(es.eigenvalues()(col), 0.0);
    r.eigenvalues(k) = lambda;
    r.coords.col(k) = es.eigenvectors().col(col) * std::sqrt(lambda);
  }
  return r;
}

std::vector<std::vector<int>> nearest_neighbors(const Eigen::MatrixXd& coords, int k) {
  const int n = static_cast<int>(coords.rows());
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (j != i) idx.push_back(j);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return (coords.row(a) - coords.row(i)).squaredNorm() < (coords.row(b) - coords.row(i)).squaredNorm();
    });
    idx.resize(std::min<std::size_t>(idx.size(), std::max(k, 0)));
    out[i] = std::move(idx);
  }
  return out;
}

bool mutual_neighbors(const std::vector<std::vector<int>>& nn, int i, int j) {
  auto has = [&](int a, int b) { return std::find(nn[a].begin(), nn[a].end(), b) != nn[a].end(); };
  return has(i, j) && has(j, i);
}

Eigen::MatrixXd template_distance_matrix(double nu, bool normalized, int depth, const GateDistanceTable& table,
                                         const OtOptions& opt) {
  std::vector<CircuitFeatures> feats;
  for (int id = 1; id <= kTemplateCount; ++id) feats.push_back(make_features(ansatz_catalog(id, 4, depth), opt));
  const double nus[] = {nu};
  const DistanceMatrices m = distance_matrices(feats, nus, table, opt);
  return normalized ? m.normalized[0] : m.raw[0];
}

}  // namespace qnas
