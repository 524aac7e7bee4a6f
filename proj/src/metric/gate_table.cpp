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

#include "qnas/metric/gate_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qnas/core/parallel.hpp"
#include "qnas/metric/generator.hpp"

namespace qnas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Gate canonical_gate(GateType t) { return arity(t) == 1 ? Gate(t, 0) : Gate(t, 0, 1); }

// Shape distance per type pair, the smaller of two placements: overlapping
// wires and the second gate mirrored onto the other wire(s). The exact value
// does not depend on placement, so this only helps the descent escape local
// minima. Results are shared by every table with the same shape block.
const std::vector<double>& shape_values(const std::vector<std::pair<GateType, GateType>>& jobs, int n_shape,
                                        const ShapeConfig& cfg) {
  using Key = std::tuple<int, int, int, double, int, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::vector<double>> cache;
  const Key key{n_shape, cfg.samples, cfg.max_iters, cfg.tol, cfg.restarts, cfg.seed};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<double> values(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const Gate a = canonical_gate(jobs[k].first), b = canonical_gate(jobs[k].second);
    double v = shape_distance(a, b, n_shape, cfg).distance;
    if (n_shape >= 2) {
      const Gate mirrored = b.arity() == 1 ? Gate(b.type, 1) : Gate(b.type, 1, 0);
      v = std::min(v, shape_distance(a, mirrored, n_shape, cfg).distance);
    }
    values[k] = v;
  });
  return cache.emplace(key, std::move(values)).first->second;
}

// Relabels the wires of (a, b) in order of first appearance.
std::pair<Gate, Gate> canonicalize(const Gate& a, const Gate& b) {
  std::array<int, 4> seen{-1, -1, -1, -1};
  int count = 0;
  auto label = [&](int w) {
    for (int i = 0; i < count; ++i)
      if (seen[i] == w) return i;
    seen[count] = w;
    return count++;
  };
  Gate ca = a, cb = b;
  for (int i = 0; i < a.arity(); ++i) ca.w[i] = label(a.w[i]);
  for (int i = 0; i < b.arity(); ++i) cb.w[i] = label(b.w[i]);
  return {ca, cb};
}

// All placements of b relative to the canonical placement of a, using at
// most `n` labels, with new labels introduced in increasing order.
std::vector<Gate> relative_placements(GateType a, GateType b, int n) {
  const int base = arity(a);
  std::vector<Gate> out;
  if (arity(b) == 1) {
    for (int w = 0; w <= base && w < n; ++w) out.emplace_back(b, w);
    return out;
  }
  for (int w0 = 0; w0 <= base && w0 < n; ++w0) {
    const int next = std::max(base, w0 + 1);
    for (int w1 = 0; w1 <= next && w1 < n; ++w1) {
      if (w1 != w0) out.emplace_back(b, w0, w1);
    }
  }
  return out;
}

std::string wire_list(std::span<const int> w) {
  std::string s = "\"";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s + "\"";
}

}  // namespace

std::uint32_t GateDistanceTable::pattern_key(const Gate& a, const Gate& b) {
  auto wire = [](int w) { return static_cast<std::uint32_t>(w + 1) & 7u; };
  return static_cast<std::uint32_t>(index_of(a.type)) | static_cast<std::uint32_t>(index_of(b.type)) << 4 |
         wire(a.w[0]) << 8 | wire(a.arity() == 2 ? a.w[1] : -1) << 11 | wire(b.w[0]) << 14 |
         wire(b.arity() == 2 ? b.w[1] : -1) << 17;
}

GateDistanceTable::GateDistanceTable(int n_qubits, const ShapeConfig& shape_cfg, int max_shape_qubits)
    : n_(n_qubits), n_shape_(std::min(n_qubits, max_shape_qubits)) {
  if (n_qubits < 1) throw std::invalid_argument("gate table needs at least one qubit");
  if (max_shape_qubits < 1) throw std::invalid_argument("shape qubit cap must be positive");

  // Core distances per canonical wire pattern.
  for (GateType a : kAllGateTypes) {
    if (arity(a) > n_) continue;
    for (GateType b : kAllGateTypes) {
      if (arity(b) > n_) continue;
      for (const Gate& gb : relative_placements(a, b, std::min(n_, 4))) {
        const Gate ga = canonical_gate(a);
        core_[pattern_key(ga, gb)] = core_distance(ga, gb, std::min(n_, 4));
      }
    }
  }
  // Each ordering is solved separately; keep them bitwise equal.
  for (GateType a : kAllGateTypes) {
    if (arity(a) > n_) continue;
    for (GateType b : kAllGateTypes) {
      if (arity(b) > n_) continue;
      for (const Gate& gb : relative_placements(a, b, std::min(n_, 4))) {
        const Gate ga = canonical_gate(a);
        const auto [rb, ra] = canonicalize(gb, ga);
        auto fwd = core_.find(pattern_key(ga, gb)), rev = core_.find(pattern_key(rb, ra));
        if (fwd != core_.end() && rev != core_.end()) fwd->second = rev->second = std::min(fwd->second, rev->second);
      }
    }
  }

  // Shape distances per unordered pair of parametrized types.
  for (auto& row : shape_) row.fill(0.0);
  for (auto& row : raw_shape_) row.fill(0.0);
  std::vector<std::pair<GateType, GateType>> jobs;
  for (int i = 0; i < kNumGateTypes; ++i) {
    for (int j = 0; j < kNumGateTypes; ++j) {
      const GateType a = kAllGateTypes[i], b = kAllGateTypes[j];
      if (is_parametrized(a) != is_parametrized(b)) {
        shape_[i][j] = raw_shape_[i][j] = kInf;
      } else if (is_parametrized(a) && i <= j && arity(a) <= n_shape_ && arity(b) <= n_shape_) {
        jobs.emplace_back(a, b);
      }
    }
  }
  const std::vector<double>& values = shape_values(jobs, n_shape_, shape_cfg);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const int i = index_of(jobs[k].first), j = index_of(jobs[k].second);
    raw_shape_[i][j] = raw_shape_[j][i] = values[k];
    shape_[i][j] = shape_[j][i] = values[k];
  }
  for (int i = kNumFixedTypes; i < kNumGateTypes; ++i) shape_[i][i] = 0.0;
  for (int k = kNumFixedTypes; k < kNumGateTypes; ++k)
    for (int i = kNumFixedTypes; i < kNumGateTypes; ++i)
      for (int j = kNumFixedTypes; j < kNumGateTypes; ++j)
        shape_[i][j] = std::min(shape_[i][j], shape_[i][k] + shape_[k][j]);
}

GatePairDistance GateDistanceTable::lookup(const Gate& a, const Gate& b) const {
  validate_gate(a, n_);
  validate_gate(b, n_);
  const auto [ca, cb] = canonicalize(a, b);
  const auto it = core_.find(pattern_key(ca, cb));
  if (it == core_.end()) {
    throw std::out_of_range("no table entry for " + to_string(a) + " vs " + to_string(b));
  }
  GatePairDistance d;
  d.core = it->second;
  d.shape = shape_[index_of(a.type)][index_of(b.type)];
  d.gate = std::isinf(d.shape) ? kInf : 0.5 * (d.core + d.shape);
  return d;
}

std::vector<GateTableRow> GateDistanceTable::rows() const {
  std::vector<GateTableRow> out;
  for (GateType a : kAllGateTypes) {
    if (arity(a) > n_) continue;
    for (GateType b : kAllGateTypes) {
      if (arity(b) > n_) continue;
      for (const Gate& gb : relative_placements(a, b, std::min(n_, 4))) {
        const Gate ga = canonical_gate(a);
        const auto w1 = ga.wires();
        const auto w2 = gb.wires();
        out.push_back({a, b, {w1.begin(), w1.end()}, {w2.begin(), w2.end()}, lookup(ga, gb)});
      }
    }
  }
  return out;
}

std::string GateDistanceTable::to_csv() const {
  std::ostringstream os;
  os.precision(10);
  os << "type1,wires1,type2,wires2,d_core,d_shape,d_gate\n";
  for (const auto& r : rows()) {
    os << gate_name(r.type1) << ',' << wire_list(r.wires1) << ',' << gate_name(r.type2) << ','
       << wire_list(r.wires2) << ',' << r.d.core << ',' << r.d.shape << ',' << r.d.gate << '\n';
  }
  return os.str();
}

const GateDistanceTable& shared_gate_table(int n_qubits, const ShapeConfig& shape) {
  using Key = std::tuple<int, int, int, double, int, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<GateDistanceTable>> cache;
  const Key key{n_qubits, shape.samples, shape.max_iters, shape.tol, shape.restarts, shape.seed};
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<GateDistanceTable>(n_qubits, shape);
  return *slot;
}

}  // namespace qnas
