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

#include "qnas/bench/maxcut.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qnas/core/parallel.hpp"

namespace qnas {

void WeightedGraph::set_weight(int i, int j, int v) {
  if (i == j) throw std::invalid_argument("graph has no self loops");
  w[static_cast<std::size_t>(i) * n + j] = v;
  w[static_cast<std::size_t>(j) * n + i] = v;
}

int WeightedGraph::total_weight() const {
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += weight(i, j);
  return s;
}

WeightedGraph maxcut_instance(int n, std::uint64_t seed) {
  if (n < 2 || n > 20) throw std::invalid_argument("MaxCut instances need 2..20 nodes, got " + std::to_string(n));
  Rng rng(seed);
  WeightedGraph g;
  g.n = n;
  do {
    g.w.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.set_weight(i, j, rng.uniform_int(0, 9));
  } while (g.total_weight() == 0);
  return g;
}

int cut_value(const WeightedGraph& g, std::uint64_t x) {
  int c = 0;
  for (int i = 0; i < g.n; ++i) {
    const bool si = (x >> (g.n - 1 - i)) & 1;
    for (int j = i + 1; j < g.n; ++j) {
      const bool sj = (x >> (g.n - 1 - j)) & 1;
      if (si != sj) c += g.weight(i, j);
    }
  }
  return c;
}

std::vector<double> cut_table(const WeightedGraph& g) {
  std::vector<double> t(std::size_t{1} << g.n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = cut_value(g, x);
  return t;
}

int brute_force_maxcut(const WeightedGraph& g) {
  int best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.n); ++x) best = std::max(best, cut_value(g, x));
  return best;
}

double cut_expectation(const StateVector& psi, const std::vector<double>& cuts) {
  if (static_cast<std::size_t>(psi.size()) != cuts.size()) throw std::invalid_argument("state/cut size mismatch");
  double e = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) e += std::norm(psi(x)) * cuts[x];
  return e;
}

MaxcutProblem make_maxcut_problem(const WeightedGraph& g) {
  MaxcutProblem p;
  p.graph = g;
  p.cuts = cut_table(g);
  p.best = *std::max_element(p.cuts.begin(), p.cuts.end());
  if (p.best <= 0) throw std::invalid_argument("graph has no positive cut");
  return p;
}

std::vector<MaxcutProblem> maxcut_problems(int n, int count, std::uint64_t first_seed) {
  std::vector<MaxcutProblem> out;
  for (int m = 0; m < count; ++m) out.push_back(make_maxcut_problem(maxcut_instance(n, first_seed + m)));
  return out;
}

namespace {

double normalized_expectation(const Circuit& c, std::span<const double> params, const MaxcutProblem& p) {
  Eigen::MatrixXcd psi = basis_state(c.n_qubits(), 0);
  apply_circuit_inplace(c, params, psi);
  return cut_expectation(psi.col(0), p.cuts) / p.best;
}

}  // namespace

double maxcut_value(const Circuit& c, const MaxcutProblem& p, const TrainConfig& cfg) {
  if (c.n_qubits() != p.graph.n) throw std::invalid_argument("circuit and graph sizes differ");
  const TrainResult r = train_minimize(
      [&](std::span<const double> x) { return -normalized_expectation(c, x, p); }, c.param_count(), cfg);
  return std::clamp(-r.value, 0.0, 1.0);
}

double maxcut_objective(const Circuit& c, const std::vector<MaxcutProblem>& problems, const TrainConfig& cfg) {
  if (problems.empty()) throw std::invalid_argument("no MaxCut instances");
  std::vector<double> v(problems.size());
  parallel_for(problems.size(), [&](std::size_t m) {
    TrainConfig local = cfg;
    local.seed = cfg.seed + 7919 * m;
    v[m] = maxcut_value(c, problems[m], local);
  });
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

BoundCircuit maxcut_ansatz(const WeightedGraph& g, int depth) {
  if (depth < 1) throw std::invalid_argument("ansatz depth must be at least 1");
  BoundCircuit out{Circuit(g.n), {}};
  out.binding.n_shared = 2 * depth;
  for (int q = 0; q < g.n; ++q) out.circuit.push_back(Gate(GateType::H, q));
  for (int l = 0; l < depth; ++l) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) {
        if (g.weight(i, j) == 0) continue;
        out.circuit.push_back(Gate(GateType::RZZ, i, j));
        out.binding.index.push_back(2 * l);
        out.binding.scale.push_back(g.weight(i, j));
      }
    }
    for (int q = 0; q < g.n; ++q) {
      out.circuit.push_back(Gate(GateType::RX, q));
      out.binding.index.push_back(2 * l + 1);
      out.binding.scale.push_back(2.0);
    }
  }
  return out;
}

double maxcut_ansatz_baseline(const std::vector<MaxcutProblem>& problems, int depth, int trials,
                              const TrainConfig& cfg) {
  if (trials < 1) throw std::invalid_argument("need at least one training trial");
  std::vector<double> per_graph(problems.size());
  parallel_for(problems.size(), [&](std::size_t m) {
    const MaxcutProblem& p = problems[m];
    const BoundCircuit a = maxcut_ansatz(p.graph, depth);
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      TrainConfig single = cfg;
      single.restarts = 1;
      single.seed = cfg.seed + 1000003 * m + t;
      const TrainResult r = train_minimize(
          [&](std::span<const double> shared) {
            const std::vector<double> angles = a.binding.bind(shared);
            return -normalized_expectation(a.circuit, angles, p);
          },
          a.binding.n_shared, single);
      sum += -r.value;
    }
    per_graph[m] = sum / trials;
  });
  double s = 0.0;
  for (double v : per_graph) s += v;
  return s / per_graph.size();
}

}  // namespace qnas
