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

#include <string>
#include <vector>

#include "qnas/core/circuit.hpp"

namespace qnas {

enum class NodeKind { Input, Gate, Output };

struct DagNode {
  NodeKind kind = NodeKind::Gate;
  int qubit = -1;                 // input/output nodes
  GateType type = GateType::H;    // gate nodes
  std::vector<int> in_edges;      // ordered: i-th edge carries the gate's i-th wire
  std::vector<int> out_edges;
};

struct DagEdge {
  int from = -1;
  int to = -1;
  int wire = -1;
};

/// Circuit as a directed acyclic graph. Node layout produced by
/// circuit_to_dag: inputs 0..n-1, gates n..n+N-1 (circuit order), outputs
/// n+N..2n+N-1. Hand-built DAGs may use any layout; dag_to_circuit only
/// relies on node kinds and edges.
struct CircuitDag {
  int n_qubits = 0;
  std::vector<DagNode> nodes;
  std::vector<DagEdge> edges;

  int add_node(DagNode node);
  int add_edge(int from, int to, int wire);

  std::vector<int> gate_nodes() const;
  int input_node(int qubit) const;
  int output_node(int qubit) const;
};

CircuitDag circuit_to_dag(const Circuit& c);

/// Rebuilds the circuit. Gates are emitted as soon as all their wire
/// predecessors are emitted, ties broken by node index, so circuit ->
/// DAG -> circuit is the identity. Throws std::invalid_argument on cycles,
/// dangling or inconsistent wires.
Circuit dag_to_circuit(const CircuitDag& dag);

/// Graphviz rendering with wire labels on the edges.
std::string to_dot(const CircuitDag& dag);

}  // namespace qnas
