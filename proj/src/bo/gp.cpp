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

#include "qnas/bo/gp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qnas/core/errors.hpp"
#include "qnas/numerics/normal.hpp"

namespace qnas {

namespace {

double median_nonzero(const std::vector<Eigen::MatrixXd>& mats, std::size_t k) {
  std::vector<double> v;
  const Eigen::MatrixXd& m = mats[k];
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) > 0) v.push_back(m(i, j));
  if (v.empty()) return 1.0;
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return v[v.size() / 2];
}

void check_sizes(const KernelHyperparams& hp, std::size_t n_nu) {
  if (hp.beta.size() != n_nu || hp.beta_bar.size() != n_nu) {
    throw std::invalid_argument("kernel has " + std::to_string(hp.beta.size()) + " rates for " +
                                std::to_string(n_nu) + " structural weights");
  }
}

}  // namespace

KernelHyperparams default_hyperparams(const ObservationSet& obs) {
  const Eigen::VectorXd y = obs.y_vector();
  double var = 0.0;
  if (y.size() > 1) var = (y.array() - y.mean()).square().sum() / static_cast<double>(y.size());
  if (!(var > 1e-12)) var = 1.0;
  KernelHyperparams hp;
  hp.alpha = hp.alpha_bar = var / 2;
  for (std::size_t k = 0; k < obs.nus().size(); ++k) {
    hp.beta.push_back(1.0 / median_nonzero(obs.distances().raw, k));
    hp.beta_bar.push_back(1.0 / median_nonzero(obs.distances().normalized, k));
  }
  hp.noise = std::max(kNoiseFloor, 1e-4 * var);
  return hp;
}

Eigen::MatrixXd kernel_matrix(const DistanceMatrices& d, const KernelHyperparams& hp) {
  check_sizes(hp, d.raw.size());
  const Eigen::Index n = d.raw.empty() ? 0 : d.raw[0].rows();
  Eigen::MatrixXd e1 = Eigen::MatrixXd::Zero(n, n), e2 = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < d.raw.size(); ++k) {
    e1 -= hp.beta[k] * d.raw[k];
    e2 -= hp.beta_bar[k] * d.normalized[k];
  }
  return hp.alpha * e1.array().exp().matrix() + hp.alpha_bar * e2.array().exp().matrix();
}

Eigen::VectorXd kernel_vector(const QueryDistances& d, const KernelHyperparams& hp) {
  check_sizes(hp, d.raw.size());
  const Eigen::Index n = d.raw.empty() ? 0 : d.raw[0].size();
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n), e2 = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k < d.raw.size(); ++k) {
    if (!d.raw[k].allFinite() || !d.normalized[k].allFinite()) {
      throw std::invalid_argument("kernel received a non-finite distance");
    }
    e1 -= hp.beta[k] * d.raw[k];
    e2 -= hp.beta_bar[k] * d.normalized[k];
  }
  return hp.alpha * e1.array().exp().matrix() + hp.alpha_bar * e2.array().exp().matrix();
}

GpModel::GpModel(const ObservationSet& obs, const KernelHyperparams& hp) : obs_(&obs), hp_(hp) {
  if (obs.size() == 0) throw std::invalid_argument("GP needs at least one observation");
  hp_.noise = std::max(hp_.noise, kNoiseFloor);
  const Eigen::VectorXd y = obs.y_vector();
  prior_mean_ = y.mean();
  const Eigen::MatrixXd k = kernel_matrix(obs.distances(), hp_);
  min_eig_ = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(k, Eigen::EigenvaluesOnly).eigenvalues()(0);

  const double scale = hp_.alpha + hp_.alpha_bar;
  Eigen::MatrixXd kx = k;
  kx.diagonal().array() += hp_.noise;
  llt_.compute(kx);
  for (double j = 1e-6 * scale; llt_.info() != Eigen::Success; j *= 10) {
    if (j > 1e-2 * scale * (1 + 1e-9)) {
      throw ConditioningError("kernel matrix is not positive definite even with jitter " + std::to_string(j / 10));
    }
    jitter_ = j;
    Eigen::MatrixXd kj = kx;
    kj.diagonal().array() += j;
    llt_.compute(kj);
  }
  weights_ = llt_.solve((y.array() - prior_mean_).matrix());
}

GpPrediction GpModel::predict(const QueryDistances& d) const {
  const Eigen::VectorXd ks = kernel_vector(d, hp_);
  GpPrediction p;
  p.mean = prior_mean_ + ks.dot(weights_);
  const Eigen::VectorXd v = llt_.matrixL().solve(ks);
  p.variance = std::max(0.0, hp_.alpha + hp_.alpha_bar - v.squaredNorm());
  return p;
}

double expected_improvement(double mean, double sigma, double f_best) {
  const double gap = mean - f_best;
  if (!(sigma > 0)) return std::max(0.0, gap);
  const double z = gap / sigma;
  return std::max(0.0, gap * normal_cdf(z) + sigma * normal_pdf(z));
}

}  // namespace qnas
