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
#include <limits>

#include <gtest/gtest.h>

#include "qnas/numerics/lbfgs.hpp"
#include "qnas/numerics/normal.hpp"

using namespace qnas;

TEST(Lbfgs, RosenbrockUnconstrained) {
  const GradObjective f = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    const double a = 1 - x(0), b = x(1) - x(0) * x(0);
    g(0) = -2 * a - 400 * x(0) * b;
    g(1) = 200 * b;
    return a * a + 100 * b * b;
  };
  const double inf = std::numeric_limits<double>::infinity();
  const auto r = minimize_lbfgs(f, Eigen::Vector2d(-1.2, 1.0), Eigen::Vector2d::Constant(-inf),
                                Eigen::Vector2d::Constant(inf), {.max_iters = 500});
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
  EXPECT_NEAR(r.x(1), 1.0, 1e-5);
}

TEST(Lbfgs, ActiveBoundIsRespected) {
  // Minimum of (x - 3)^2 + (y + 1)^2 over [0, 2] x [0, 2] is at (2, 0).
  const GradObjective f = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    g(0) = 2 * (x(0) - 3);
    g(1) = 2 * (x(1) + 1);
    return (x(0) - 3) * (x(0) - 3) + (x(1) + 1) * (x(1) + 1);
  };
  const auto r = minimize_lbfgs(f, Eigen::Vector2d(1, 1), Eigen::Vector2d::Zero(), Eigen::Vector2d::Constant(2));
  EXPECT_NEAR(r.x(0), 2.0, 1e-10);
  EXPECT_NEAR(r.x(1), 0.0, 1e-10);
  EXPECT_TRUE(r.converged);
}

TEST(Lbfgs, CentralDifferenceGradientOnQuadratic) {
  const PlainObjective f = [](const Eigen::VectorXd& x) { return (x(0) - 1) * (x(0) - 1); };
  const double inf = std::numeric_limits<double>::infinity();
  const auto r = minimize_lbfgs(central_difference(f, 1e-5), Eigen::VectorXd::Constant(1, -4.0),
                                Eigen::VectorXd::Constant(1, -inf), Eigen::VectorXd::Constant(1, inf));
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
}

TEST(Normal, CdfAndPdfKnownValues) {
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-12);
  EXPECT_NEAR(normal_cdf(-8.0), 6.22096057427178e-16, 1e-27);
  EXPECT_NEAR(normal_pdf(0.0), 1 / std::sqrt(2 * M_PI), 1e-16);
}
