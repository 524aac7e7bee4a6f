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

#include <functional>

#include <Eigen/Dense>

namespace qnas {

/// Returns f(x) and writes the gradient into `grad` (already sized).
using GradObjective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;
using PlainObjective = std::function<double(const Eigen::VectorXd& x)>;

struct LbfgsOptions {
  int max_iters = 200;
  int memory = 10;
  double grad_tol = 1e-8;   // on the projected-gradient inf-norm
  double f_tol = 1e-12;     // relative decrease
  int max_line_search = 40;
};

struct LbfgsResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Projected L-BFGS for box constraints lower <= x <= upper. Bounds may be
/// infinite. x0 is clipped into the box first.
LbfgsResult minimize_lbfgs(const GradObjective& f, Eigen::VectorXd x0, const Eigen::VectorXd& lower,
                           const Eigen::VectorXd& upper, const LbfgsOptions& opt = {});

/// Wraps a value-only objective with central-difference gradients.
GradObjective central_difference(PlainObjective f, double step);

}  // namespace qnas
