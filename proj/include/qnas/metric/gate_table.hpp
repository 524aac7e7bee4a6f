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
#include <string>
#include <unordered_map>
#include <vector>

#include "qnas/metric/shape.hpp"

namespace qnas {

struct GatePairDistance {
  double core = 0.0;
  double shape = 0.0;  // +inf for a fixed/parametrized pair
  double gate = 0.0;   // (core + shape) / 2
};

/// One row of the exported table; wires are canonical labels.
struct GateTableRow {
  GateType type1, type2;
  std::vector<int> wires1, wires2;
  GatePairDistance d;
};

/// Precomputed gate-pair distances for circuits on n qubits.
///
/// Core distances depend on the pattern of shared wires only, so they are
/// stored per pattern with wires relabeled by first appearance. Shape
/// distances depend on the types only; they are computed on min(n, 4) qubits
/// with canonical placements, symmetrized, and closed under shortest paths so
/// the triangle inequality holds exactly.
class GateDistanceTable {
 public:
  explicit GateDistanceTable(int n_qubits, const ShapeConfig& shape = {}, int max_shape_qubits = 4);

  int n_qubits() const { return n_; }
  int shape_qubits() const { return n_shape_; }

  /// Throws std::out_of_range for gates that do not fit the table's qubits.
  GatePairDistance lookup(const Gate& a, const Gate& b) const;
  double gate_distance(const Gate& a, const Gate& b) const { return lookup(a, b).gate; }

  /// Shape distance after symmetrization and closure.
  double shape(GateType a, GateType b) const { return shape_[index_of(a)][index_of(b)]; }
  /// Optimizer output before closure (parametrized pairs, lower index first).
  double raw_shape(GateType a, GateType b) const { return raw_shape_[index_of(a)][index_of(b)]; }

  std::vector<GateTableRow> rows() const;
  std::string to_csv() const;

 private:
  static std::uint32_t pattern_key(const Gate& a, const Gate& b);

  int n_;
  int n_shape_;
  std::array<std::array<double, kNumGateTypes>, kNumGateTypes> shape_{};
  std::array<std::array<double, kNumGateTypes>, kNumGateTypes> raw_shape_{};
  std::unordered_map<std::uint32_t, double> core_;
};

/// Process-wide cache keyed by (n, shape config).
const GateDistanceTable& shared_gate_table(int n_qubits, const ShapeConfig& shape = {});

}  // namespace qnas
