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

#include <cmath>

#include <gtest/gtest.h>

#include "qnas/bo/fit.hpp"
#include "qnas/bo/gp.hpp"
#include "qnas/bo/observations.hpp"
#include "qnas/core/errors.hpp"
#include "qnas/core/random.hpp"
#include "qnas/numerics/normal.hpp"

using namespace qnas;

namespace {

const GateDistanceTable& table3() {
  static const GateDistanceTable t(3, ShapeConfig{}, 2);
  return t;
}

Circuit random_massive(int n, int gates, Rng& rng) {
  for (;;) {
    Circuit c = random_circuit(n, gates, rng);
    if (c.param_count() > 0) return c;
  }
}

ObservationSet make_observations(int count, std::uint64_t seed) {
  ObservationSet obs(table3());
  Rng rng(seed);
  for (int i = 0; i < count; ++i) obs.add(random_massive(3, 4, rng), rng.uniform(-1, 1));
  return obs;
}

KernelHyperparams some_hyperparams() {
  KernelHyperparams hp;
  hp.alpha = 0.7;
  hp.alpha_bar = 0.4;
  hp.beta = {0.05, 0.02, 0.1, 0.03};
  hp.beta_bar = {2.0, 1.0, 3.0, 0.5};
  hp.noise = 1e-3;
  return hp;
}

}  // namespace

TEST(Observations, IncrementalMatricesMatchBatchComputation) {
  const ObservationSet obs = make_observations(6, 1);
  const DistanceMatrices batch = distance_matrices(obs.features(), obs.nus(), table3());
  for (std::size_t k = 0; k < obs.nus().size(); ++k) {
    EXPECT_LT((obs.distances().raw[k] - batch.raw[k]).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((obs.distances().normalized[k] - batch.normalized[k]).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Gp, PosteriorMatchesDenseInverse) {
  const ObservationSet obs = make_observations(5, 2);
  const KernelHyperparams hp = some_hyperparams();
  const GpModel gp(obs, hp);

  const Eigen::MatrixXd kxx = kernel_matrix(obs.distances(), hp);
  const Eigen::MatrixXd inv = (kxx + hp.noise * Eigen::MatrixXd::Identity(5, 5)).fullPivLu().inverse();
  const Eigen::VectorXd y = obs.y_vector();
  const double m = y.mean();

  Rng rng(30);
  for (int q = 0; q < 10; ++q) {
    const Circuit c = random_massive(3, 5, rng);
    // Kernel row built from scratch, distance by distance.
    Eigen::VectorXd k(5);
    for (int i = 0; i < 5; ++i) {
      double s = 0, sb = 0;
      for (std::size_t j = 0; j < obs.nus().size(); ++j) {
        const OtResult r = ot_distance(make_features(c), obs.features()[i], obs.nus()[j], table3());
        s += hp.beta[j] * r.distance;
        sb += hp.beta_bar[j] * r.normalized;
      }
      k(i) = hp.alpha * std::exp(-s) + hp.alpha_bar * std::exp(-sb);
    }
    const double mean = m + k.dot(inv * (y - Eigen::VectorXd::Constant(5, m)));
    const double var = hp.alpha + hp.alpha_bar - k.dot(inv * k);
    const GpPrediction p = gp.predict(c);
    EXPECT_NEAR(p.mean, mean, 1e-8);
    EXPECT_NEAR(p.variance, std::max(var, 0.0), 1e-8);
  }
  // At a training point the posterior mean is close to the observation.
  const GpPrediction p0 = gp.predict(obs.features()[0].circuit);
  EXPECT_NEAR(p0.mean, y(0), 0.05);
}

TEST(Gp, ExpectedImprovementMatchesMonteCarlo) {
  Rng rng(77);
  for (auto [mu, sigma, best] : {std::tuple{0.3, 0.5, 0.6}, {1.0, 0.2, 0.4}, {-1.0, 2.0, 0.5}}) {
    const int n = 1000000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
      const double v = std::max(mu + sigma * rng.normal() - best, 0.0);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / n);
    EXPECT_NEAR(expected_improvement(mu, sigma, best), mean, 3 * se);
  }
  EXPECT_DOUBLE_EQ(expected_improvement(1.5, 0.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(expected_improvement(0.5, 0.0, 1.0), 0.0);
}

TEST(Gp, KernelMatrixIsSymmetricWithSignalDiagonal) {
  const ObservationSet obs = make_observations(7, 3);
  const KernelHyperparams hp = some_hyperparams();
  const Eigen::MatrixXd k = kernel_matrix(obs.distances(), hp);
  EXPECT_LT((k - k.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(k(i, i), hp.alpha + hp.alpha_bar, 1e-14);
  const GpModel gp(obs, hp);
  EXPECT_GE(gp.min_eigenvalue() + hp.noise + gp.jitter(), 0.0);
}

TEST(Fit, LikelihoodGradientMatchesFiniteDifferences) {
  const ObservationSet obs = make_observations(8, 4);
  const Eigen::VectorXd x = pack_log(some_hyperparams());
  Eigen::VectorXd grad(x.size());
  log_marginal_likelihood(obs, x, &grad);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd up = x, down = x;
    up(i) += 1e-6;
    down(i) -= 1e-6;
    const double fd = (log_marginal_likelihood(obs, up, nullptr) - log_marginal_likelihood(obs, down, nullptr)) / 2e-6;
    EXPECT_NEAR(grad(i), fd, 1e-4 * std::max(1.0, std::abs(fd))) << i;
  }
  EXPECT_NEAR(log_marginal_likelihood(obs, x, nullptr), log_marginal_likelihood(obs, some_hyperparams()), 1e-9);
}

TEST(Fit, NeverWorseThanTheDefaultStart) {
  const ObservationSet obs = make_observations(10, 5);
  const FitResult r = fit_hyperparams(obs);
  EXPECT_FALSE(r.degenerate);
  EXPECT_GE(r.log_likelihood, r.default_log_likelihood - 1e-9);
  EXPECT_GE(r.hp.noise, kNoiseFloor);
}

TEST(Fit, ConstantObservationsFallBackToDefaults) {
  ObservationSet obs(table3());
  Rng rng(6);
  for (int i = 0; i < 4; ++i) obs.add(random_massive(3, 3, rng), 0.25);
  const FitResult r = fit_hyperparams(obs);
  EXPECT_TRUE(r.degenerate);
  const GpModel gp(obs, r.hp);
  EXPECT_NEAR(gp.prior_mean(), 0.25, 1e-15);
}
