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

#include "qnas/core/dag.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace qnas {

int CircuitDag::add_node(DagNode node) {
  nodes.push_back(std::move(node));
  return static_cast<int>(nodes.size()) - 1;
}

int CircuitDag::add_edge(int from, int to, int wire) {
  const int id = static_cast<int>(edges.size());
  edges.push_back({from, to, wire});
  nodes.at(from).out_edges.push_back(id);
  nodes.at(to).in_edges.push_back(id);
  return id;
}

std::vector<int> CircuitDag::gate_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind == NodeKind::Gate) out.push_back(i);
  }
  return out;
}

int CircuitDag::input_node(int qubit) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind == NodeKind::Input && nodes[i].qubit == qubit) return i;
  }
  throw std::invalid_argument("DAG has no input node for qubit " + std::to_string(qubit));
}

int CircuitDag::output_node(int qubit) const {
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind == NodeKind::Output && nodes[i].qubit == qubit) return i;
  }
  throw std::invalid_argument("DAG has no output node for qubit " + std::to_string(qubit));
}

CircuitDag circuit_to_dag(const Circuit& c) {
  const int n = c.n_qubits();
  CircuitDag dag;
  dag.n_qubits = n;
  std::vector<int> last(n);
  for (int q = 0; q < n; ++q) last[q] = dag.add_node({NodeKind::Input, q, GateType::H, {}, {}});
  for (const Gate& g : c.gates()) {
    const int id = dag.add_node({NodeKind::Gate, -1, g.type, {}, {}});
    for (int q : g.wires()) {
      dag.add_edge(last[q], id, q);
      last[q] = id;
    }
  }
  for (int q = 0; q < n; ++q) {
    const int id = dag.add_node({NodeKind::Output, q, GateType::H, {}, {}});
    dag.add_edge(last[q], id, q);
  }
  return dag;
}

Circuit dag_to_circuit(const CircuitDag& dag) {
  const int n = dag.n_qubits;
  const int n_nodes = static_cast<int>(dag.nodes.size());
  auto fail = [](const std::string& msg) { throw std::invalid_argument("malformed DAG: " + msg); };

  std::vector<int> seen_in(n, 0), seen_out(n, 0);
  for (int v = 0; v < n_nodes; ++v) {
    const DagNode& node = dag.nodes[v];
    switch (node.kind) {
      case NodeKind::Input:
        if (node.qubit < 0 || node.qubit >= n) fail("input node with bad qubit");
        if (!node.in_edges.empty() || node.out_edges.size() != 1) fail("input node degree");
        if (dag.edges[node.out_edges[0]].wire != node.qubit) fail("input edge wire label");
        ++seen_in[node.qubit];
        break;
      case NodeKind::Output:
        if (node.qubit < 0 || node.qubit >= n) fail("output node with bad qubit");
        if (!node.out_edges.empty() || node.in_edges.size() != 1) fail("output node degree");
        if (dag.edges[node.in_edges[0]].wire != node.qubit) fail("output edge wire label");
        ++seen_out[node.qubit];
        break;
      case NodeKind::Gate: {
        const auto k = static_cast<std::size_t>(arity(node.type));
        if (node.in_edges.size() != k || node.out_edges.size() != k) {
          fail("gate node " + std::to_string(v) + " degree does not match arity");
        }
        for (std::size_t i = 0; i < k; ++i) {
          const int wire = dag.edges[node.in_edges[i]].wire;
          bool continues = false;
          for (int e : node.out_edges) continues |= dag.edges[e].wire == wire;
          if (!continues) fail("wire " + std::to_string(wire) + " dangles at node " + std::to_string(v));
        }
        break;
      }
    }
  }
  for (int q = 0; q < n; ++q) {
    if (seen_in[q] != 1 || seen_out[q] != 1) fail("qubit " + std::to_string(q) + " endpoints");
  }

  // Kahn's algorithm with the smallest ready node first.
  std::vector<int> pending(n_nodes, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n_nodes; ++v) {
    pending[v] = static_cast<int>(dag.nodes[v].in_edges.size());
    if (pending[v] == 0) ready.push(v);
  }
  Circuit out(n);
  int emitted = 0;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    ++emitted;
    const DagNode& node = dag.nodes[v];
    if (node.kind == NodeKind::Gate) {
      const int w0 = dag.edges[node.in_edges[0]].wire;
      out.push_back(arity(node.type) == 1 ? Gate(node.type, w0)
                                          : Gate(node.type, w0, dag.edges[node.in_edges[1]].wire));
    }
    for (int e : node.out_edges) {
      if (--pending[dag.edges[e].to] == 0) ready.push(dag.edges[e].to);
    }
  }
  if (emitted != n_nodes) fail("cycle detected");

  // Every wire must trace a single path from its input to its output.
  for (int q = 0; q < n; ++q) {
    int v = dag.input_node(q);
    int steps = 0;
    while (dag.nodes[v].kind != NodeKind::Output) {
      int next = -1;
      for (int e : dag.nodes[v].out_edges) {
        if (dag.edges[e].wire == q) next = dag.edges[e].to;
      }
      if (next < 0 || ++steps > n_nodes) fail("wire " + std::to_string(q) + " is broken");
      v = next;
    }
    if (dag.nodes[v].qubit != q) fail("wire " + std::to_string(q) + " ends at the wrong output");
  }
  return out;
}

std::string to_dot(const CircuitDag& dag) {
  std::ostringstream os;
  os << "digraph circuit {\n";
  for (int v = 0; v < static_cast<int>(dag.nodes.size()); ++v) {
    const DagNode& node = dag.nodes[v];
    os << "  n" << v;
    if (node.kind == NodeKind::Gate) {
      os << " [shape=box, label=\"" << gate_name(node.type) << "\"];\n";
    } else {
      os << " [shape=circle, label=\"q" << node.qubit << "\"];\n";
    }
  }
  for (const DagEdge& e : dag.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"q" << e.wire << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qnas
