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

#include <functional>

#include "qnas/harness/config.hpp"
#include "qnas/harness/run_log.hpp"

namespace qnas {

/// Objective value of a circuit; a throw or a non-finite value counts as a failure.
using CircuitObjective = std::function<double(const Circuit&)>;

/// Called after every appended record.
using SearchProgress = std::function<void(const IterationRecord&)>;

/// Random circuit with at least one parametrized gate (the distance needs
/// positive mass).
Circuit random_search_circuit(int n_qubits, int n_gates, Rng& rng);

/// Initial random evaluations, then per step either: fit the GP surrogate,
/// maximize expected improvement by evolution, evaluate the winner; or, in
/// random mode, evaluate a fresh random circuit. A failed evaluation is
/// recorded and replaced by a random circuit.
RunLog run_search(const ExperimentConfig& cfg, const CircuitObjective& objective, bool maximize,
                  const SearchProgress& progress = {});

/// Builds the benchmark objective from cfg.objective.
RunLog run_search(const ExperimentConfig& cfg, const SearchProgress& progress = {});

}  // namespace qnas
