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

#include <cstdint>
#include <vector>

#include "qnas/bench/train.hpp"
#include "qnas/core/circuit.hpp"
#include "qnas/core/simulator.hpp"

namespace qnas {

/// Symmetric integer weights, zero diagonal; weight 0 means no edge.
struct WeightedGraph {
  int n = 0;
  std::vector<int> w;  // row-major n x n

  int weight(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
  void set_weight(int i, int j, int v);
  int total_weight() const;
};

/// Complete graph on n nodes with weights uniform on {0..9}; all-zero draws
/// are redrawn.
WeightedGraph maxcut_instance(int n, std::uint64_t seed);

/// Node i sits on qubit i, i.e. bit (n - 1 - i) of the basis index.
int cut_value(const WeightedGraph& g, std::uint64_t assignment);
/// C(x) for every basis state x.
std::vector<double> cut_table(const WeightedGraph& g);
int brute_force_maxcut(const WeightedGraph& g);

/// sum_x |<x|psi>|^2 C(x).
double cut_expectation(const StateVector& psi, const std::vector<double>& cuts);

struct MaxcutProblem {
  WeightedGraph graph;
  std::vector<double> cuts;
  double best = 0.0;
};

MaxcutProblem make_maxcut_problem(const WeightedGraph& g);
std::vector<MaxcutProblem> maxcut_problems(int n, int count, std::uint64_t first_seed);

/// Trained <C> / C_max for one graph with the circuit applied to |0...0>.
double maxcut_value(const Circuit& c, const MaxcutProblem& p, const TrainConfig& cfg);

/// Mean of maxcut_value over the instances (trained independently, in parallel).
double maxcut_objective(const Circuit& c, const std::vector<MaxcutProblem>& problems, const TrainConfig& cfg);

struct BoundCircuit {
  Circuit circuit;
  ParamBinding binding;
};

/// H on every qubit, then per layer RZZ(gamma * w_ij) on every edge and
/// RX(2 beta) on every qubit, with one (gamma, beta) pair per layer.
BoundCircuit maxcut_ansatz(const WeightedGraph& g, int depth);

/// Average over `trials` single-start trainings per graph of the ansatz's
/// normalized expectation, averaged over graphs.
double maxcut_ansatz_baseline(const std::vector<MaxcutProblem>& problems, int depth, int trials,
                              const TrainConfig& cfg);

}  // namespace qnas
