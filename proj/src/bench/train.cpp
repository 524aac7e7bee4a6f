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

#include "qnas/bench/train.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qnas/numerics/lbfgs.hpp"

namespace qnas {

TrainResult train_minimize(const LossFn& loss, int n_params, const TrainConfig& cfg) {
  if (n_params < 0) throw std::invalid_argument("negative parameter count");
  TrainResult res;
  if (n_params == 0) {
    res.value = loss({});
    res.evaluations = 1;
    res.trace.push_back(res.value);
    if (!std::isfinite(res.value)) throw std::runtime_error("loss is not finite");
    return res;
  }

  int evaluations = 0;
  const PlainObjective plain = [&](const Eigen::VectorXd& x) {
    ++evaluations;
    const double v = loss(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  const GradObjective f = central_difference(plain, cfg.fd_step);
  const Eigen::VectorXd lo = Eigen::VectorXd::Constant(n_params, -cfg.bound);
  const Eigen::VectorXd hi = Eigen::VectorXd::Constant(n_params, cfg.bound);
  LbfgsOptions opt;
  opt.max_iters = cfg.max_iters;
  opt.grad_tol = 1e-7;
  opt.f_tol = 1e-12;

  Rng rng(cfg.seed);
  bool have = false;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    Eigen::VectorXd x0(n_params);
    for (int i = 0; i < n_params; ++i) x0(i) = rng.uniform(-cfg.init_range, cfg.init_range);
    if (!std::isfinite(plain(x0))) continue;
    const LbfgsResult lr = minimize_lbfgs(f, x0, lo, hi, opt);
    if (!std::isfinite(lr.f)) continue;
    if (!have || lr.f < res.value) {
      res.value = lr.f;
      res.params.assign(lr.x.data(), lr.x.data() + lr.x.size());
      have = true;
    }
    res.trace.push_back(res.value);
  }
  res.evaluations = evaluations;
  if (!have) throw std::runtime_error("every training restart produced a non-finite loss");
  return res;
}

}  // namespace qnas
