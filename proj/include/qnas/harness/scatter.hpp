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

#include "qnas/bench/train.hpp"
#include "qnas/metric/gate_table.hpp"
#include "qnas/ot/circuit_distance.hpp"

namespace qnas {

struct ScatterConfig {
  int pairs = 300;
  int n_qubits = 3;
  int max_gates = 20;  // gate counts uniform on 1..max_gates
  double nu = 0.5;
  bool normalized = false;
  std::uint64_t seed = 0;
  TrainConfig train;
  OtOptions ot;
};

struct ScatterRow {
  int pair = 0;
  double distance = 0.0;
  double gap = 0.0;  // |perf1 - perf2|
  double perf1 = 0.0, perf2 = 0.0;
};

struct ScatterSummary {
  double mean_gap = 0.0;
  double low_decile_gap = 0.0;  // mean gap over the 10% closest pairs
  bool trend_holds = false;     // low_decile_gap <= mean_gap
};

struct ScatterTable {
  std::vector<ScatterRow> rows;
  ScatterSummary summary;

  std::string to_csv() const;
};

ScatterSummary summarize_scatter(const std::vector<ScatterRow>& rows);

/// Random circuit pairs (each with a parametrized gate), their OT distance
/// and the gap between their trained QFT fidelities.
ScatterTable distance_vs_performance(const ScatterConfig& cfg, const GateDistanceTable& table);

}  // namespace qnas
