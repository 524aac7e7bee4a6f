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

#include "qnas/bo/gp.hpp"

namespace qnas {

struct FitOptions {
  int random_starts = 4;  // besides the median-heuristic start
  int max_iters = 100;
  std::uint64_t seed = 0;
};

struct FitResult {
  KernelHyperparams hp;
  double log_likelihood = 0.0;
  double default_log_likelihood = 0.0;
  bool degenerate = false;  // constant y: defaults returned unfitted
};

/// log N(y | mean(y) 1, K + sigma^2 I). Returns -inf when the matrix cannot
/// be factored.
double log_marginal_likelihood(const ObservationSet& obs, const KernelHyperparams& hp);

/// Hyperparameters in log space: [alpha, alpha_bar, beta..., beta_bar..., sigma^2].
Eigen::VectorXd pack_log(const KernelHyperparams& hp);
KernelHyperparams unpack_log(const Eigen::VectorXd& v, std::size_t n_nu);

/// Log marginal likelihood and its gradient with respect to pack_log().
double log_marginal_likelihood(const ObservationSet& obs, const Eigen::VectorXd& log_params, Eigen::VectorXd* grad);

/// Maximum-likelihood fit by projected L-BFGS in log space, started from the
/// median heuristic and from seeded random points inside the bounds. The
/// result is never worse than the default start.
FitResult fit_hyperparams(const ObservationSet& obs, const FitOptions& opt = {});

}  // namespace qnas
