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

#include "qnas/ot/mass.hpp"

#include <stdexcept>

namespace qnas {

double layer_mass(GateType t) {
  const int dim = 1 << arity(t);
  return param_dim(t) * (dim * dim - 1.0);
}

std::vector<int> gate_runs(const Circuit& c) {
  std::vector<int> run(c.size(), -1);
  std::vector<int> last_on_wire(c.n_qubits(), -1);
  int next_run = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Gate& g = c[j];
    int prev = last_on_wire[g.w[0]];
    for (int w : g.wires()) {
      if (last_on_wire[w] != prev) prev = -1;
    }
    if (prev >= 0 && c[prev] == Gate(g)) {
      run[j] = run[prev];
    } else {
      run[j] = next_run++;
    }
    for (int w : g.wires()) last_on_wire[w] = static_cast<int>(j);
  }
  return run;
}

MassAssignment assign_masses(const Circuit& c, double eta) {
  if (eta < 0) throw std::invalid_argument("eta must be non-negative");
  const auto run = gate_runs(c);
  int n_runs = 0;
  for (int r : run) n_runs = std::max(n_runs, r + 1);
  std::vector<int> run_size(n_runs, 0);
  std::vector<bool> run_fixed(n_runs, false);
  for (std::size_t j = 0; j < c.size(); ++j) {
    ++run_size[run[j]];
    run_fixed[run[j]] = !c[j].parametrized();
  }

  double param_total = 0.0;
  int fixed_runs = 0;
  for (int r = 0; r < n_runs; ++r) {
    if (run_fixed[r]) ++fixed_runs;
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].parametrized()) param_total += layer_mass(c[j].type) / run_size[run[j]];
  }

  MassAssignment out;
  out.mass.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double layer = c[j].parametrized() ? layer_mass(c[j].type) : eta * param_total / fixed_runs;
    out.mass[j] = layer / run_size[run[j]];
    out.total += out.mass[j];
  }
  return out;
}

}  // namespace qnas
