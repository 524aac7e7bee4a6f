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

#include "qnas/harness/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qnas/bo/fit.hpp"
#include "qnas/bo/gp.hpp"
#include "qnas/bo/observations.hpp"
#include "qnas/core/errors.hpp"
#include "qnas/metric/gate_table.hpp"

namespace qnas {

namespace {

constexpr int kMaxConsecutiveFailures = 20;

}  // namespace

Circuit random_search_circuit(int n_qubits, int n_gates, Rng& rng) {
  for (;;) {
    Circuit c = random_circuit(n_qubits, n_gates, rng);
    if (c.param_count() > 0) return c;
  }
}

RunLog run_search(const ExperimentConfig& cfg, const CircuitObjective& objective, bool maximize,
                  const SearchProgress& progress) {
  cfg.validate();
  const int n = cfg.objective.n_qubits, n_gates = cfg.objective.n_gates;
  const auto start = std::chrono::steady_clock::now();

  RunLog log;
  log.objective = objective_name(cfg.objective.kind);
  log.maximize = maximize;
  log.seed = cfg.seed;
  log.mode = mode_name(cfg.mode);

  Rng sample_rng = Rng::derive(cfg.seed, 0);
  Rng evo_rng = Rng::derive(cfg.seed, 1);

  const bool use_surrogate = cfg.mode == SearchMode::ExpectedImprovement && cfg.iterations > 0;
  std::unique_ptr<GateDistanceTable> own_table;
  std::unique_ptr<ObservationSet> obs;
  if (use_surrogate) {
    const GateDistanceTable* table = nullptr;
    if (cfg.max_shape_qubits == 4) {
      table = &shared_gate_table(n, cfg.shape);
    } else {
      own_table = std::make_unique<GateDistanceTable>(n, cfg.shape, cfg.max_shape_qubits);
      table = own_table.get();
    }
    obs = std::make_unique<ObservationSet>(*table, cfg.nus, cfg.ot);
  }
  std::unordered_set<Circuit, CircuitHash> seen;

  // Evaluates `c`, replacing it by random circuits while the objective fails.
  auto evaluate_and_record = [&](Circuit c, std::string source, std::optional<SurrogateRecord> sur) {
    int failures = 0;
    double value = 0.0;
    for (;;) {
      bool ok = false;
      try {
        value = objective(c);
        ok = std::isfinite(value);
      } catch (const std::exception& e) {
        std::cerr << "objective failed: " << e.what() << '\n';
      }
      if (ok) break;
      if (++failures >= kMaxConsecutiveFailures) throw std::runtime_error("objective failed repeatedly; giving up");
      c = random_search_circuit(n, n_gates, sample_rng);
    }
    IterationRecord r;
    r.iteration = static_cast<int>(log.records.size());
    r.source = std::move(source);
    r.circuit = c;
    r.value = value;
    r.failures = failures;
    r.surrogate = std::move(sur);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    seen.insert(c);
    if (obs) obs->add(c, maximize ? value : -value);
    log.append(std::move(r));
    if (progress) progress(log.records.back());
  };

  for (int i = 0; i < cfg.init_samples; ++i) evaluate_and_record(random_search_circuit(n, n_gates, sample_rng), "init", {});

  for (int step = 0; step < cfg.iterations; ++step) {
    if (!use_surrogate) {
      evaluate_and_record(random_search_circuit(n, n_gates, sample_rng), "random", {});
      continue;
    }
    FitOptions fo = cfg.fit;
    fo.seed = splitmix64(cfg.seed * 1000003 + step);
    FitResult fit = fit_hyperparams(*obs, fo);
    std::unique_ptr<GpModel> gp;
    try {
      gp = std::make_unique<GpModel>(*obs, fit.hp);
    } catch (const ConditioningError& e) {
      std::cerr << "surrogate fit ill-conditioned (" << e.what() << "); retrying with default hyperparameters\n";
      fit.hp = default_hyperparams(*obs);
      gp = std::make_unique<GpModel>(*obs, fit.hp);
    }

    const std::vector<double>& y = obs->y();
    const double f_best = *std::max_element(y.begin(), y.end());
    AcquisitionFn acq = [&](const Circuit& c) {
      if (seen.count(c)) return 0.0;
      const GpPrediction p = gp->predict(c);
      return expected_improvement(p.mean, std::sqrt(p.variance), f_best);
    };

    // Observed circuits seed the pool, best first.
    std::vector<std::size_t> order(y.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
    std::vector<Circuit> seeds;
    for (std::size_t i : order) seeds.push_back(obs->features()[i].circuit);

    const EvoResult er = evolve(seeds, acq, static_cast<int>(obs->size()), cfg.evo, evo_rng);
    SurrogateRecord sur;
    sur.hp = fit.hp;
    sur.jitter = gp->jitter();
    sur.min_eigenvalue = gp->min_eigenvalue();
    sur.audit_threshold = gp->audit_threshold();
    sur.expected_improvement = std::isnan(er.value) ? 0.0 : er.value;
    sur.acquisition_evaluations = er.evaluations;
    sur.acquisition_discarded = er.discarded;

    Circuit next = er.best;
    if (seen.count(next)) next = random_search_circuit(n, n_gates, sample_rng);  // nothing new looked promising
    evaluate_and_record(next, "ei", sur);
  }
  return log;
}

RunLog run_search(const ExperimentConfig& cfg, const SearchProgress& progress) {
  const Objective obj(cfg.objective);
  return run_search(cfg, [&](const Circuit& c) { return obj.evaluate(c); }, obj.spec().maximize(), progress);
}

}  // namespace qnas
