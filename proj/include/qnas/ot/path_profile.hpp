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

#include <array>
#include <vector>

#include "qnas/core/dag.hpp"

namespace qnas {

enum class PathStat { Shortest = 0, Longest = 1, Average = 2 };
enum class PathEnd { Input = 0, Output = 1 };

/// Path lengths, in edges, between every gate node and every qubit's input
/// and output node. A path from input q to gate g has as many edges as gate
/// nodes on it counting g itself. Pairs with no path get the longest
/// input-to-output path of the whole DAG for all three statistics.
struct PathProfile {
  int n_qubits = 0;
  double longest_path = 0.0;
  /// value[gate][end][stat][qubit], gates in DAG gate-node order.
  std::vector<std::array<std::array<std::vector<double>, 3>, 2>> value;

  double at(std::size_t gate, PathEnd end, PathStat stat, int qubit) const {
    return value[gate][static_cast<int>(end)][static_cast<int>(stat)][qubit];
  }
};

/// The average is the expected length of a walk that starts at the gate and
/// repeatedly steps to a uniformly chosen incoming (or outgoing) edge among
/// those from which the target endpoint stays reachable.
PathProfile path_profile(const CircuitDag& dag);

}  // namespace qnas
