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

#include "qnas/harness/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qnas/bench/qft.hpp"
#include "qnas/core/parallel.hpp"
#include "qnas/harness/search.hpp"

namespace qnas {

std::string ScatterTable::to_csv() const {
  std::string s = "pair,distance,gap,perf1,perf2\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g,%.10g,%.10g\n", r.pair, r.distance, r.gap, r.perf1, r.perf2);
    s += buf;
  }
  return s;
}

ScatterSummary summarize_scatter(const std::vector<ScatterRow>& rows) {
  ScatterSummary s;
  if (rows.empty()) return s;
  for (const auto& r : rows) s.mean_gap += r.gap;
  s.mean_gap /= rows.size();
  std::vector<ScatterRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.distance < b.distance; });
  const std::size_t k = std::max<std::size_t>(1, sorted.size() / 10);
  for (std::size_t i = 0; i < k; ++i) s.low_decile_gap += sorted[i].gap;
  s.low_decile_gap /= k;
  s.trend_holds = s.low_decile_gap <= s.mean_gap;
  return s;
}

ScatterTable distance_vs_performance(const ScatterConfig& cfg, const GateDistanceTable& table) {
  if (cfg.pairs < 1 || cfg.max_gates < 1) throw std::invalid_argument("scatter needs pairs and gates");
  if (table.n_qubits() != cfg.n_qubits) throw std::invalid_argument("gate table size does not match the scatter circuits");
  Rng rng(cfg.seed);
  std::vector<Circuit> circuits;
  for (int i = 0; i < 2 * cfg.pairs; ++i) {
    circuits.push_back(random_search_circuit(cfg.n_qubits, rng.uniform_int(1, cfg.max_gates), rng));
  }

  std::vector<double> perf(circuits.size());
  parallel_for(circuits.size(), [&](std::size_t i) {
    TrainConfig tc = cfg.train;
    tc.seed = splitmix64(cfg.train.seed + i);
    perf[i] = qft_objective(circuits[i], tc).fidelity;
  });

  ScatterTable out;
  out.rows.resize(cfg.pairs);
  parallel_for(out.rows.size(), [&](std::size_t p) {
    const Circuit& a = circuits[2 * p];
    const Circuit& b = circuits[2 * p + 1];
    ScatterRow& r = out.rows[p];
    r.pair = static_cast<int>(p);
    r.distance = ot_distance(a, b, cfg.nu, cfg.normalized, table, cfg.ot);
    r.perf1 = perf[2 * p];
    r.perf2 = perf[2 * p + 1];
    r.gap = std::abs(r.perf1 - r.perf2);
  });
  out.summary = summarize_scatter(out.rows);
  return out;
}

}  // namespace qnas
