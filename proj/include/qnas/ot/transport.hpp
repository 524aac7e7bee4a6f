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

#include <vector>

#include <Eigen/Dense>

namespace qnas {

struct TransportPlan {
  Eigen::MatrixXd flow;   // supplies x demands
  double cost = 0.0;      // <flow, C>
  int pivots = 0;
};

/// Exact balanced transportation problem: minimize <Z, C> subject to
/// Z 1 = supply, Z^T 1 = demand, Z >= 0. Transportation simplex with a
/// northwest-corner start, potentials in extended precision, and a
/// deterministic pivot order (Dantzig, falling back to Bland's rule after a
/// run of degenerate pivots). Supplies and demands must be non-negative with
/// equal sums up to 1e-9 relative.
TransportPlan solve_transport(const Eigen::VectorXd& supply, const Eigen::VectorXd& demand,
                              const Eigen::MatrixXd& cost);

}  // namespace qnas
