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
#include <cstdint>
#include <functional>
#include <vector>

#include "qnas/core/circuit.hpp"
#include "qnas/core/random.hpp"

namespace qnas {

struct EvoConfig {
  double c_tau = 5.0;  // generations = ceil(c_tau sqrt(t))
  double c_k = 4.0;    // pool size = ceil(c_k sqrt(generations))
  double c_off = 4.0;  // offspring per parent = ceil(c_off sqrt(generations))
  std::array<double, 4> change_probs = {0.4, 0.3, 0.2, 0.1};  // 1..4 changed gates
  double type_change_prob = 0.5;  // otherwise the wires are redrawn
  std::uint64_t seed = 0;

  int generations(int t) const;
  int pool_size(int t) const;
  int offspring(int t) const;
};

/// Changes 1-4 distinct gates. A type change picks a different catalog type
/// (keeping the first wire, drawing a second if needed); a wire change picks
/// a different placement of the same type. Gate and qubit counts are kept.
Circuit mutate(const Circuit& c, Rng& rng, const EvoConfig& cfg);

/// Acquisition value; throwing or returning NaN discards the candidate.
using AcquisitionFn = std::function<double(const Circuit&)>;

struct EvoResult {
  Circuit best;
  double value = 0.0;
  int generations = 0;
  int evaluations = 0;
  int discarded = 0;
  std::vector<double> pool_best;  // best value in the pool after each generation
};

/// Each generation every pool member spawns offspring by mutation; the next
/// pool keeps the top half of pool + offspring and fills the rest by a
/// softmax draw (temperature = std of the remaining values). Returns the best
/// circuit seen. Acquisition calls run in parallel and must be thread-safe.
EvoResult evolve(const std::vector<Circuit>& seed_pool, const AcquisitionFn& acq, int t, const EvoConfig& cfg,
                 Rng& rng);

}  // namespace qnas
