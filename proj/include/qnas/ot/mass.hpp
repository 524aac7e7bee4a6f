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

#include "qnas/core/circuit.hpp"

namespace qnas {

struct MassAssignment {
  std::vector<double> mass;  // per gate, circuit order
  double total = 0.0;
};

/// param_dim * (unitary_dim^2 - 1): 3 for one-qubit rotations, 15 for
/// two-qubit ones, 0 for fixed gates.
double layer_mass(GateType t);

/// Run id per gate. A gate joins the run of its predecessor when the
/// predecessor has the same type, the same ordered wires, and no other gate
/// touches those wires in between.
std::vector<int> gate_runs(const Circuit& c);

/// Parametrized runs carry their layer mass, split evenly inside the run.
/// Each fixed run carries (eta / #fixed runs) times the total parametrized
/// mass, split the same way.
MassAssignment assign_masses(const Circuit& c, double eta = 0.1);

}  // namespace qnas
