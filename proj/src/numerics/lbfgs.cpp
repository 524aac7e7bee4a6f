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

#include "qnas/numerics/lbfgs.hpp"

#include <cmath>
#include <deque>
#include <vector>
#include <stdexcept>

namespace qnas {

namespace {

Eigen::VectorXd project(Eigen::VectorXd x, const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  return x.cwiseMax(lo).cwiseMin(hi);
}

// Components pinned at a bound with the gradient pointing outward.
std::vector<bool> active_set(const Eigen::VectorXd& x, const Eigen::VectorXd& g, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi) {
  std::vector<bool> active(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    active[i] = (x(i) <= lo(i) && g(i) > 0) || (x(i) >= hi(i) && g(i) < 0);
  }
  return active;
}

}  // namespace

LbfgsResult minimize_lbfgs(const GradObjective& f, Eigen::VectorXd x0, const Eigen::VectorXd& lower,
                           const Eigen::VectorXd& upper, const LbfgsOptions& opt) {
  const Eigen::Index n = x0.size();
  if (lower.size() != n || upper.size() != n) throw std::invalid_argument("bound size mismatch");
  if ((lower.array() > upper.array()).any()) throw std::invalid_argument("lower bound above upper bound");

  LbfgsResult res;
  Eigen::VectorXd x = project(std::move(x0), lower, upper);
  Eigen::VectorXd g(n);
  double fx = f(x, g);
  ++res.evaluations;
  if (!std::isfinite(fx)) throw std::domain_error("objective is not finite at the starting point");

  std::deque<std::pair<Eigen::VectorXd, Eigen::VectorXd>> mem;  // (s, y)
  for (int it = 0; it < opt.max_iters; ++it) {
    res.iterations = it;
    const auto active = active_set(x, g, lower, upper);
    Eigen::VectorXd pg = g;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i]) pg(i) = 0;
    if (n == 0 || pg.lpNorm<Eigen::Infinity>() <= opt.grad_tol) {
      res.converged = true;
      break;
    }

    // Two-loop recursion restricted to the free variables.
    Eigen::VectorXd q = pg;
    std::vector<double> a(mem.size());
    for (std::size_t k = mem.size(); k-- > 0;) {
      const auto& [s, y] = mem[k];
      a[k] = s.dot(q) / y.dot(s);
      q -= a[k] * y;
    }
    if (!mem.empty()) {
      const auto& [s, y] = mem.back();
      q *= s.dot(y) / y.squaredNorm();
    } else {
      q /= std::max(1.0, pg.norm());
    }
    for (std::size_t k = 0; k < mem.size(); ++k) {
      const auto& [s, y] = mem[k];
      const double b = y.dot(q) / y.dot(s);
      q += (a[k] - b) * s;
    }
    Eigen::VectorXd d = -q;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i]) d(i) = 0;
    if (d.dot(g) >= 0) {
      mem.clear();
      d = -pg / std::max(1.0, pg.norm());
    }

    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd xn, gn(n);
    double fn = fx;
    for (int ls = 0; ls < opt.max_line_search; ++ls, step *= 0.5) {
      xn = project(x + step * d, lower, upper);
      const Eigen::VectorXd dx = xn - x;
      if (dx.lpNorm<Eigen::Infinity>() == 0) break;
      fn = f(xn, gn);
      ++res.evaluations;
      if (std::isfinite(fn) && fn <= fx + 1e-4 * g.dot(dx)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (mem.empty()) {
        res.converged = true;  // no descent possible along the projected gradient
        break;
      }
      mem.clear();
      continue;
    }

    const Eigen::VectorXd s = xn - x;
    const Eigen::VectorXd y = gn - g;
    if (s.dot(y) > 1e-12 * y.squaredNorm()) {
      mem.emplace_back(s, y);
      if (static_cast<int>(mem.size()) > opt.memory) mem.pop_front();
    }
    const double decrease = fx - fn;
    x = xn;
    g = gn;
    fx = fn;
    res.iterations = it + 1;
    if (decrease <= opt.f_tol * std::max(1.0, std::abs(fx))) {
      res.converged = true;
      break;
    }
  }
  res.x = std::move(x);
  res.f = fx;
  return res;
}

GradObjective central_difference(PlainObjective f, double step) {
  return [f = std::move(f), step](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      probe(i) = x(i) + step;
      const double up = f(probe);
      probe(i) = x(i) - step;
      const double down = f(probe);
      probe(i) = x(i);
      grad(i) = (up - down) / (2 * step);
    }
    return f(x);
  };
}

}  // namespace qnas
