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

#include "qnas/core/gate.hpp"

#include <stdexcept>

namespace qnas {

namespace {

constexpr std::array<std::string_view, kNumGateTypes> kNames = {
    "H", "X", "Y", "Z", "CX", "CY", "CZ", "RX",
    "RY", "RZ", "CRX", "CRY", "CRZ", "RXX", "RYY", "RZZ",
};

}  // namespace

std::string_view gate_name(GateType t) { return kNames[index_of(t)]; }

std::optional<GateType> parse_gate_type(std::string_view name) {
  for (int i = 0; i < kNumGateTypes; ++i) {
    if (kNames[i] == name) return static_cast<GateType>(i);
  }
  return std::nullopt;
}

double representative_number(GateType t) {
  const int i = index_of(t);
  if (!is_parametrized(t)) {
    return 0.1 * (i + 1) / (kNumFixedTypes + 1);
  }
  const int j = i - kNumFixedTypes + 1;
  return 0.1 + 0.9 * j / (kNumParamTypes + 1);
}

void validate_gate(const Gate& g, int n_qubits) {
  for (int q : g.wires()) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("gate " + to_string(g) + " has wire outside [0, " +
                                  std::to_string(n_qubits) + ")");
    }
  }
  if (g.arity() == 2 && g.w[0] == g.w[1]) {
    throw std::invalid_argument("gate " + to_string(g) + " repeats a wire");
  }
}

std::string to_string(const Gate& g) {
  std::string s(gate_name(g.type));
  s += '(';
  s += std::to_string(g.w[0]);
  if (g.arity() == 2) {
    s += ',';
    s += std::to_string(g.w[1]);
  }
  s += ')';
  return s;
}

}  // namespace qnas
