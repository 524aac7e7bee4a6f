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

#include "qnas/ot/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qnas/core/errors.hpp"

namespace qnas {

namespace {

using ld = long double;

struct Cell {
  int i, j;
};

class Simplex {
 public:
  Simplex(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::MatrixXd& c)
      : m_(static_cast<int>(a.size())), n_(static_cast<int>(b.size())), c_(c),
        x_(Eigen::MatrixXd::Zero(m_, n_)), basic_(m_ * n_, false) {
    northwest(a, b);
  }

  int run() {
    double scale = 1.0;
    for (Eigen::Index k = 0; k < c_.size(); ++k) scale = std::max(scale, std::abs(c_.data()[k]));
    const ld eps = 1e-13L * scale;
    const int max_pivots = 50 * (m_ + n_) * (m_ + n_) + 1000;
    int degenerate_run = 0;
    int pivots = 0;
    for (; pivots < max_pivots; ++pivots) {
      potentials();
      // Dantzig: most negative reduced cost, ties to the first cell. After
      // many degenerate pivots, Bland: the first negative cell.
      const bool bland = degenerate_run > m_ + n_;
      int ei = -1, ej = -1;
      ld best = -eps;
      for (int i = 0; i < m_ && !(bland && ei >= 0); ++i) {
        for (int j = 0; j < n_; ++j) {
          if (basic_[i * n_ + j]) continue;
          const ld r = static_cast<ld>(c_(i, j)) - u_[i] - v_[j];
          if (r < best) {
            best = r;
            ei = i;
            ej = j;
            if (bland) break;
          }
        }
      }
      if (ei < 0) return pivots;
      const double moved = pivot(ei, ej);
      degenerate_run = moved > 0 ? 0 : degenerate_run + 1;
    }
    throw InternalError("transportation simplex did not terminate after " + std::to_string(max_pivots) + " pivots");
  }

  const Eigen::MatrixXd& flow() const { return x_; }

 private:
  void northwest(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    std::vector<double> ra(a.data(), a.data() + m_), rb(b.data(), b.data() + n_);
    int i = 0, j = 0;
    while (i < m_ && j < n_) {
      const double q = std::min(ra[i], rb[j]);
      x_(i, j) = q;
      basic_[i * n_ + j] = true;
      ra[i] -= q;
      rb[j] -= q;
      if (i == m_ - 1) {
        ++j;
      } else if (j == n_ - 1) {
        ++i;
      } else if (ra[i] <= rb[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Tree over row nodes 0..m-1 and column nodes m..m+n-1.
  void build_adjacency() {
    adj_.assign(m_ + n_, {});
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j)
        if (basic_[i * n_ + j]) {
          adj_[i].push_back(m_ + j);
          adj_[m_ + j].push_back(i);
        }
  }

  void potentials() {
    build_adjacency();
    u_.assign(m_, 0);
    v_.assign(n_, 0);
    std::vector<bool> seen(m_ + n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int node = stack.back();
      stack.pop_back();
      for (int nb : adj_[node]) {
        if (seen[nb]) continue;
        seen[nb] = true;
        if (node < m_) {
          v_[nb - m_] = static_cast<ld>(c_(node, nb - m_)) - u_[node];
        } else {
          u_[nb] = static_cast<ld>(c_(nb, node - m_)) - v_[node - m_];
        }
        stack.push_back(nb);
      }
    }
    for (bool s : seen)
      if (!s) throw InternalError("transport basis is not a spanning tree");
  }

  // Enters (ei, ej), returns the amount moved along the cycle.
  double pivot(int ei, int ej) {
    // Path in the tree from column node ej to row node ei.
    const int start = m_ + ej, goal = ei;
    std::vector<int> parent(m_ + n_, -1);
    std::vector<int> queue{start};
    parent[start] = start;
    for (std::size_t h = 0; h < queue.size() && parent[goal] < 0; ++h) {
      const int node = queue[h];
      for (int nb : adj_[node]) {
        if (parent[nb] >= 0) continue;
        parent[nb] = node;
        queue.push_back(nb);
      }
    }
    if (parent[goal] < 0) throw InternalError("no cycle for the entering cell");
    std::vector<int> path{goal};
    while (path.back() != start) path.push_back(parent[path.back()]);
    // path: ei, ..., m+ej. Consecutive nodes give cells; signs alternate,
    // starting with '-' on the cell adjacent to the entering cell's row.
    std::vector<Cell> cells;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const int p = path[k], q = path[k + 1];
      cells.push_back(p < m_ ? Cell{p, q - m_} : Cell{q, p - m_});
    }
    double theta = std::numeric_limits<double>::infinity();
    int leave = -1;
    for (std::size_t k = 0; k < cells.size(); k += 2) {
      const double x = x_(cells[k].i, cells[k].j);
      bool better = leave < 0 || x < theta;
      if (!better && x == theta) {
        const Cell& cur = cells[leave];
        better = cells[k].i < cur.i || (cells[k].i == cur.i && cells[k].j < cur.j);
      }
      if (better) {
        theta = x;
        leave = static_cast<int>(k);
      }
    }
    x_(ei, ej) += theta;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      double& x = x_(cells[k].i, cells[k].j);
      x += (k % 2 == 0) ? -theta : theta;
      if (x < 0) x = 0;
    }
    x_(cells[leave].i, cells[leave].j) = 0;
    basic_[cells[leave].i * n_ + cells[leave].j] = false;
    basic_[ei * n_ + ej] = true;
    return theta;
  }

  int m_, n_;
  const Eigen::MatrixXd& c_;
  Eigen::MatrixXd x_;
  std::vector<bool> basic_;
  std::vector<std::vector<int>> adj_;
  std::vector<ld> u_, v_;
};

}  // namespace

TransportPlan solve_transport(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                              const Eigen::MatrixXd& cost) {
  if (supply.size() == 0 || demand.size() == 0) throw std::invalid_argument("empty transport problem");
  if (cost.rows() != supply.size() || cost.cols() != demand.size()) {
    throw std::invalid_argument("cost matrix is " + std::to_string(cost.rows()) + "x" + std::to_string(cost.cols()) +
                                ", expected " + std::to_string(supply.size()) + "x" + std::to_string(demand.size()));
  }
  if ((supply.array() < 0).any() || (demand.array() < 0).any()) {
    throw std::invalid_argument("supplies and demands must be non-negative");
  }
  if (!cost.allFinite()) throw std::invalid_argument("transport costs must be finite");
  const double sa = supply.sum(), sb = demand.sum();
  if (std::abs(sa - sb) > 1e-9 * std::max(1.0, std::max(sa, sb))) {
    throw std::invalid_argument("unbalanced transport problem");
  }
  // Put the rounding residue on the last demand so the start is exact.
  Eigen::VectorXd b = demand;
  b(b.size() - 1) = std::max(0.0, b(b.size() - 1) + (sa - sb));

  Simplex s(supply, b, cost);
  TransportPlan plan;
  plan.pivots = s.run();
  plan.flow = s.flow();
  plan.cost = (plan.flow.array() * cost.array()).sum();
  return plan;
}

}  // namespace qnas
