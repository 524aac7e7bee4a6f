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
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "qnas/core/random.hpp"

namespace qnas {

struct TrainConfig {
  int restarts = 3;
  double fd_step = 1e-5;                 // central differences, radians
  double bound = 2 * std::numbers::pi;   // box [-bound, bound]
  double init_range = std::numbers::pi;  // starts uniform in [-init_range, init_range]
  int max_iters = 200;
  std::uint64_t seed = 0;
};

struct TrainResult {
  std::vector<double> params;
  double value = 0.0;          // loss at params
  std::vector<double> trace;   // best loss after each restart
  int evaluations = 0;
};

using LossFn = std::function<double(std::span<const double>)>;

/// Multi-start projected L-BFGS with finite-difference gradients. Restarts
/// whose loss turns non-finite are dropped; throws std::runtime_error if all
/// are. With zero parameters the loss is evaluated once.
TrainResult train_minimize(const LossFn& loss, int n_params, const TrainConfig& cfg);

}  // namespace qnas
