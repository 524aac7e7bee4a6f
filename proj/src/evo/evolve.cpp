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

#include "qnas/evo/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "qnas/core/parallel.hpp"

namespace qnas {

int EvoConfig::generations(int t) const {
  return std::max(1, static_cast<int>(std::ceil(c_tau * std::sqrt(std::max(1, t)))));
}

int EvoConfig::pool_size(int t) const {
  return std::max(1, static_cast<int>(std::ceil(c_k * std::sqrt(generations(t)))));
}

int EvoConfig::offspring(int t) const {
  return std::max(1, static_cast<int>(std::ceil(c_off * std::sqrt(generations(t)))));
}

namespace {

Gate change_type(const Gate& g, int n_qubits, Rng& rng) {
  GateType t;
  do {
    t = random_gate_type(n_qubits, rng);
  } while (t == g.type);
  if (arity(t) == 1) return Gate(t, g.w[0]);
  if (g.arity() == 2) return Gate(t, g.w[0], g.w[1]);
  int q1 = rng.uniform_int(0, n_qubits - 2);
  if (q1 >= g.w[0]) ++q1;
  return Gate(t, g.w[0], q1);
}

Gate change_wires(const Gate& g, int n_qubits, Rng& rng) {
  Gate out;
  do {
    out = random_placement(g.type, n_qubits, rng);
  } while (out == g);
  return out;
}

}  // namespace

Circuit mutate(const Circuit& c, Rng& rng, const EvoConfig& cfg) {
  if (c.empty()) throw std::invalid_argument("cannot mutate an empty circuit");
  const int count = std::min<int>(static_cast<int>(c.size()), 1 + static_cast<int>(rng.categorical(cfg.change_probs)));
  std::vector<std::size_t> positions(c.size());
  std::iota(positions.begin(), positions.end(), 0);
  // Partial Fisher-Yates for distinct positions.
  for (int i = 0; i < count; ++i) {
    const std::size_t j = i + rng.uniform_int(positions.size() - i);
    std::swap(positions[i], positions[j]);
  }
  Circuit out = c;
  const int n = c.n_qubits();
  for (int i = 0; i < count; ++i) {
    const Gate& g = c[positions[i]];
    // With one qubit a single-qubit gate has no other placement.
    const bool wires_fixed = n == 1;
    const bool by_type = wires_fixed || rng.uniform() < cfg.type_change_prob;
    out.set(positions[i], by_type ? change_type(g, n, rng) : change_wires(g, n, rng));
  }
  return out;
}

EvoResult evolve(const std::vector<Circuit>& seed_pool, const AcquisitionFn& acq, int t, const EvoConfig& cfg,
                 Rng& rng) {
  if (seed_pool.empty()) throw std::invalid_argument("evolve needs a non-empty seed pool");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::unordered_map<Circuit, double, CircuitHash> cache;
  EvoResult res;
  bool have_best = false;

  // Evaluates the circuits not seen before, in parallel.
  auto evaluate = [&](const std::vector<Circuit>& cands) {
    std::vector<Circuit> fresh;
    for (const Circuit& c : cands) {
      if (cache.emplace(c, nan).second) fresh.push_back(c);
    }
    std::vector<double> vals(fresh.size(), nan);
    parallel_for(fresh.size(), [&](std::size_t i) {
      try {
        vals[i] = acq(fresh[i]);
      } catch (const std::exception&) {
        vals[i] = nan;
      }
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      cache[fresh[i]] = vals[i];
      ++res.evaluations;
      if (std::isnan(vals[i])) {
        ++res.discarded;
        continue;
      }
      if (!have_best || vals[i] > res.value) {
        res.best = fresh[i];
        res.value = vals[i];
        have_best = true;
      }
    }
  };

  auto rank = [&](const std::vector<Circuit>& cands) {
    std::vector<std::pair<double, Circuit>> ranked;
    for (const Circuit& c : cands) {
      const double v = cache.at(c);
      if (!std::isnan(v)) ranked.emplace_back(v, c);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return ranked;
  };

  const int k = cfg.pool_size(t);
  evaluate(seed_pool);
  auto ranked = rank(seed_pool);
  std::vector<Circuit> pool;
  for (std::size_t i = 0; i < ranked.size() && static_cast<int>(pool.size()) < k; ++i) {
    if (std::find(pool.begin(), pool.end(), ranked[i].second) == pool.end()) pool.push_back(ranked[i].second);
  }
  if (pool.empty()) {
    std::cerr << "warning: every seed circuit was discarded by the acquisition function\n";
    res.best = seed_pool.front();
    res.value = nan;
    return res;
  }

  const int gens = cfg.generations(t);
  const int n_off = cfg.offspring(t);
  for (int gen = 0; gen < gens; ++gen) {
    std::vector<Circuit> cands = pool;
    for (const Circuit& parent : pool)
      for (int o = 0; o < n_off; ++o) cands.push_back(mutate(parent, rng, cfg));
    evaluate(cands);

    std::vector<Circuit> unique;
    for (const Circuit& c : cands)
      if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
    ranked = rank(unique);

    pool.clear();
    const std::size_t elite = std::min(ranked.size(), static_cast<std::size_t>((k + 1) / 2));
    for (std::size_t i = 0; i < elite; ++i) pool.push_back(ranked[i].second);
    std::vector<std::pair<double, Circuit>> rest(ranked.begin() + elite, ranked.end());
    double temp = 0.0;
    if (!rest.empty()) {
      double mean = 0.0;
      for (const auto& r : rest) mean += r.first;
      mean /= rest.size();
      for (const auto& r : rest) temp += (r.first - mean) * (r.first - mean);
      temp = std::sqrt(temp / rest.size());
    }
    while (static_cast<int>(pool.size()) < k && !rest.empty()) {
      std::vector<double> w(rest.size());
      const double top = rest.front().first;
      for (std::size_t i = 0; i < rest.size(); ++i) w[i] = temp > 0 ? std::exp((rest[i].first - top) / temp) : 1.0;
      const std::size_t pick = rng.categorical(w);
      pool.push_back(rest[pick].second);
      rest.erase(rest.begin() + pick);
    }
    res.pool_best.push_back(ranked.front().first);
    res.generations = gen + 1;
  }
  return res;
}

}  // namespace qnas
