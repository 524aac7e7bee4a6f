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

#include "qnas/ot/path_profile.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qnas {

namespace {

struct Reach {
  std::vector<bool> ok;
  std::vector<double> sp, lp, avg;
  explicit Reach(int n) : ok(n, false), sp(n, 0.0), lp(n, 0.0), avg(n, 0.0) {}
};

std::vector<int> topological_order(const CircuitDag& dag) {
  std::vector<int> indeg(dag.nodes.size());
  for (std::size_t v = 0; v < dag.nodes.size(); ++v) indeg[v] = static_cast<int>(dag.nodes[v].in_edges.size());
  std::queue<int> ready;
  for (std::size_t v = 0; v < dag.nodes.size(); ++v)
    if (indeg[v] == 0) ready.push(static_cast<int>(v));
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (int e : dag.nodes[v].out_edges) {
      if (--indeg[dag.edges[e].to] == 0) ready.push(dag.edges[e].to);
    }
  }
  if (order.size() != dag.nodes.size()) throw std::invalid_argument("DAG has a cycle");
  return order;
}

// One sweep: `forward` measures from input nodes along edges, otherwise from
// output nodes against them.
std::vector<Reach> sweep(const CircuitDag& dag, const std::vector<int>& order, bool forward) {
  const int n = dag.n_qubits;
  std::vector<Reach> r(dag.nodes.size(), Reach(n));
  const NodeKind source = forward ? NodeKind::Input : NodeKind::Output;
  auto visit = [&](int v) {
    const DagNode& node = dag.nodes[v];
    if (node.kind == source) {
      r[v].ok[node.qubit] = true;
      return;
    }
    const auto& edges = forward ? node.in_edges : node.out_edges;
    for (int q = 0; q < n; ++q) {
      int count = 0;
      double sum = 0.0;
      for (int e : edges) {
        const int u = forward ? dag.edges[e].from : dag.edges[e].to;
        if (!r[u].ok[q]) continue;
        const double sp = r[u].sp[q] + 1, lp = r[u].lp[q] + 1;
        if (count == 0) {
          r[v].sp[q] = sp;
          r[v].lp[q] = lp;
        } else {
          r[v].sp[q] = std::min(r[v].sp[q], sp);
          r[v].lp[q] = std::max(r[v].lp[q], lp);
        }
        sum += r[u].avg[q] + 1;
        ++count;
      }
      if (count > 0) {
        r[v].ok[q] = true;
        r[v].avg[q] = sum / count;
      }
    }
  };
  if (forward) {
    for (int v : order) visit(v);
  } else {
    for (auto it = order.rbegin(); it != order.rend(); ++it) visit(*it);
  }
  return r;
}

}  // namespace

PathProfile path_profile(const CircuitDag& dag) {
  const auto order = topological_order(dag);
  const auto from_input = sweep(dag, order, true);
  const auto to_output = sweep(dag, order, false);

  PathProfile p;
  p.n_qubits = dag.n_qubits;
  for (std::size_t v = 0; v < dag.nodes.size(); ++v) {
    if (dag.nodes[v].kind != NodeKind::Output) continue;
    for (int q = 0; q < dag.n_qubits; ++q) {
      if (from_input[v].ok[q]) p.longest_path = std::max(p.longest_path, from_input[v].lp[q]);
    }
  }

  for (int v : dag.gate_nodes()) {
    auto& entry = p.value.emplace_back();
    for (int end = 0; end < 2; ++end) {
      const Reach& r = end == 0 ? from_input[v] : to_output[v];
      for (int s = 0; s < 3; ++s) {
        auto& vals = entry[end][s];
        vals.assign(dag.n_qubits, p.longest_path);
        for (int q = 0; q < dag.n_qubits; ++q) {
          if (!r.ok[q]) continue;
          vals[q] = s == 0 ? r.sp[q] : s == 1 ? r.lp[q] : r.avg[q];
        }
      }
    }
  }
  return p;
}

}  // namespace qnas
