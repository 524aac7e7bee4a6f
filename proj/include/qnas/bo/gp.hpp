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

#include <vector>

#include <Eigen/Dense>

#include "qnas/bo/observations.hpp"

namespace qnas {

/// k(x, x') = alpha exp(-sum_i beta_i d_i) + alpha_bar exp(-sum_i beta_bar_i dbar_i)
/// with d_i / dbar_i the raw / normalized OT distance at the i-th nu.
struct KernelHyperparams {
  double alpha = 1.0;
  double alpha_bar = 1.0;
  std::vector<double> beta;
  std::vector<double> beta_bar;
  double noise = 1e-4;  // sigma^2
};

inline constexpr double kNoiseFloor = 1e-8;

/// Median heuristic: alpha = alpha_bar = var(y)/2, beta_i = 1/median of the
/// nonzero d_i, sigma^2 = 1e-4 var(y). A constant y uses unit variance.
KernelHyperparams default_hyperparams(const ObservationSet& obs);

/// Training block without the noise term.
Eigen::MatrixXd kernel_matrix(const DistanceMatrices& d, const KernelHyperparams& hp);
/// Row k(query, X).
Eigen::VectorXd kernel_vector(const QueryDistances& d, const KernelHyperparams& hp);

struct GpPrediction {
  double mean = 0.0;
  double variance = 0.0;  // clamped at 0
};

/// Posterior with a constant prior mean equal to mean(y). The Cholesky
/// factor of K + sigma^2 I is computed once; if it fails, jitter starting at
/// 1e-6 (alpha + alpha_bar) is added and grown x10 up to 1e-2 of that scale
/// before ConditioningError is thrown.
class GpModel {
 public:
  GpModel(const ObservationSet& obs, const KernelHyperparams& hp);

  GpPrediction predict(const QueryDistances& d) const;
  GpPrediction predict(const Circuit& c) const { return predict(obs_->distances_to(c)); }

  const KernelHyperparams& hyperparams() const { return hp_; }
  double prior_mean() const { return prior_mean_; }
  /// Diagonal jitter added beyond sigma^2 (0 when none was needed).
  double jitter() const { return jitter_; }
  /// Smallest eigenvalue of the noiseless kernel matrix.
  double min_eigenvalue() const { return min_eig_; }
  /// Jitter level used by the negative-eigenvalue audit.
  double audit_threshold() const { return 1e-6 * (hp_.alpha + hp_.alpha_bar); }

 private:
  const ObservationSet* obs_;
  KernelHyperparams hp_;
  double prior_mean_ = 0.0;
  double jitter_ = 0.0;
  double min_eig_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd weights_;  // (K + sigma^2 I)^{-1} (y - m)
};

/// E[(f - f_best)^+] for f ~ N(mean, sigma^2); maximization orientation.
double expected_improvement(double mean, double sigma, double f_best);

}  // namespace qnas
