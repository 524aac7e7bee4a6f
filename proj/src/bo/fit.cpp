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

#include "qnas/bo/fit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qnas/core/random.hpp"
#include "qnas/numerics/lbfgs.hpp"

namespace qnas {

Eigen::VectorXd pack_log(const KernelHyperparams& hp) {
  const std::size_t m = hp.beta.size();
  Eigen::VectorXd v(3 + 2 * m);
  v(0) = std::log(hp.alpha);
  v(1) = std::log(hp.alpha_bar);
  for (std::size_t k = 0; k < m; ++k) {
    v(2 + k) = std::log(hp.beta[k]);
    v(2 + m + k) = std::log(hp.beta_bar[k]);
  }
  v(2 + 2 * m) = std::log(hp.noise);
  return v;
}

KernelHyperparams unpack_log(const Eigen::VectorXd& v, std::size_t m) {
  if (v.size() != static_cast<Eigen::Index>(3 + 2 * m)) throw std::invalid_argument("hyperparameter vector size");
  KernelHyperparams hp;
  hp.alpha = std::exp(v(0));
  hp.alpha_bar = std::exp(v(1));
  for (std::size_t k = 0; k < m; ++k) {
    hp.beta.push_back(std::exp(v(2 + k)));
    hp.beta_bar.push_back(std::exp(v(2 + m + k)));
  }
  hp.noise = std::max(kNoiseFloor, std::exp(v(2 + 2 * m)));
  return hp;
}

double log_marginal_likelihood(const ObservationSet& obs, const Eigen::VectorXd& log_params, Eigen::VectorXd* grad) {
  const std::size_t m = obs.nus().size();
  const KernelHyperparams hp = unpack_log(log_params, m);
  const DistanceMatrices& d = obs.distances();
  const Eigen::Index n = static_cast<Eigen::Index>(obs.size());
  const Eigen::VectorXd y = obs.y_vector();
  const Eigen::VectorXd r = (y.array() - y.mean()).matrix();

  Eigen::MatrixXd s1 = Eigen::MatrixXd::Zero(n, n), s2 = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    s1 -= hp.beta[k] * d.raw[k];
    s2 -= hp.beta_bar[k] * d.normalized[k];
  }
  const Eigen::MatrixXd e1 = s1.array().exp().matrix(), e2 = s2.array().exp().matrix();
  Eigen::MatrixXd kx = hp.alpha * e1 + hp.alpha_bar * e2;
  kx.diagonal().array() += hp.noise;
  Eigen::LLT<Eigen::MatrixXd> llt(kx);
  if (llt.info() != Eigen::Success) {
    if (grad) grad->setZero(log_params.size());
    return -std::numeric_limits<double>::infinity();
  }
  const Eigen::VectorXd a = llt.solve(r);
  const double logdet = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double ll = -0.5 * r.dot(a) - 0.5 * logdet - 0.5 * n * std::log(2 * std::numbers::pi);

  if (grad) {
    // dL/dp = 1/2 tr((a a^T - K^{-1}) dK/dp).
    const Eigen::MatrixXd w = a * a.transpose() - llt.solve(Eigen::MatrixXd::Identity(n, n));
    auto contract = [&w](const Eigen::MatrixXd& dk) { return 0.5 * (w.array() * dk.array()).sum(); };
    grad->resize(log_params.size());
    const Eigen::MatrixXd k1 = hp.alpha * e1, k2 = hp.alpha_bar * e2;
    (*grad)(0) = contract(k1);
    (*grad)(1) = contract(k2);
    for (std::size_t k = 0; k < m; ++k) {
      (*grad)(2 + k) = contract(-hp.beta[k] * (k1.array() * d.raw[k].array()).matrix());
      (*grad)(2 + m + k) = contract(-hp.beta_bar[k] * (k2.array() * d.normalized[k].array()).matrix());
    }
    // The floor makes sigma^2 flat below it.
    (*grad)(2 + 2 * m) = std::exp(log_params(2 + 2 * m)) > kNoiseFloor ? 0.5 * hp.noise * w.trace() : 0.0;
  }
  return ll;
}

double log_marginal_likelihood(const ObservationSet& obs, const KernelHyperparams& hp) {
  return log_marginal_likelihood(obs, pack_log(hp), nullptr);
}

FitResult fit_hyperparams(const ObservationSet& obs, const FitOptions& opt) {
  const KernelHyperparams defaults = default_hyperparams(obs);
  FitResult res;
  res.hp = defaults;
  res.default_log_likelihood = obs.size() > 0 ? log_marginal_likelihood(obs, defaults) : 0.0;
  res.log_likelihood = res.default_log_likelihood;

  const Eigen::VectorXd y = obs.y_vector();
  const bool constant = y.size() == 0 || (y.array() - y.mean()).abs().maxCoeff() <= 1e-12 * std::max(1.0, std::abs(y.mean()));
  if (obs.size() < 3 || constant) {
    res.hp.noise = kNoiseFloor;
    res.degenerate = constant;
    if (obs.size() > 0) res.log_likelihood = log_marginal_likelihood(obs, res.hp);
    return res;
  }

  const std::size_t m = obs.nus().size();
  const Eigen::VectorXd x0 = pack_log(defaults);
  const double amp = 2 * defaults.alpha;  // var(y)
  Eigen::VectorXd lo(x0.size()), hi(x0.size());
  lo(0) = lo(1) = std::log(1e-4 * amp);
  hi(0) = hi(1) = std::log(1e2 * amp);
  for (std::size_t k = 0; k < 2 * m; ++k) {
    lo(2 + k) = x0(2 + k) + std::log(1e-3);
    hi(2 + k) = x0(2 + k) + std::log(1e3);
  }
  lo(2 + 2 * m) = std::log(kNoiseFloor);
  hi(2 + 2 * m) = std::log(amp);

  const GradObjective negll = [&obs](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    const double v = log_marginal_likelihood(obs, x, &g);
    g = -g;
    return -v;
  };
  LbfgsOptions lopt;
  lopt.max_iters = opt.max_iters;
  lopt.grad_tol = 1e-6;
  lopt.f_tol = 1e-10;

  Rng rng(opt.seed);
  for (int s = 0; s <= opt.random_starts; ++s) {
    Eigen::VectorXd start = x0.cwiseMax(lo).cwiseMin(hi);
    if (s > 0) {
      for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = rng.uniform(lo(i), hi(i));
    }
    Eigen::VectorXd g(start.size());
    if (!std::isfinite(negll(start, g))) continue;
    const LbfgsResult r = minimize_lbfgs(negll, start, lo, hi, lopt);
    if (std::isfinite(r.f) && -r.f > res.log_likelihood) {
      res.log_likelihood = -r.f;
      res.hp = unpack_log(r.x, m);
    }
  }
  return res;
}

}  // namespace qnas
