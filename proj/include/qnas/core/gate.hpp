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
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace qnas {

/// The 16 catalog gates. Fixed gates come first, then the one-parameter
/// rotations, each group in catalog order (single-qubit before two-qubit).
enum class GateType : std::uint8_t {
  H, X, Y, Z, CX, CY, CZ,
  RX, RY, RZ, CRX, CRY, CRZ, RXX, RYY, RZZ,
};

inline constexpr int kNumGateTypes = 16;
inline constexpr int kNumFixedTypes = 7;
inline constexpr int kNumParamTypes = 9;

inline constexpr std::array<GateType, kNumGateTypes> kAllGateTypes = {
    GateType::H,   GateType::X,   GateType::Y,   GateType::Z,
    GateType::CX,  GateType::CY,  GateType::CZ,  GateType::RX,
    GateType::RY,  GateType::RZ,  GateType::CRX, GateType::CRY,
    GateType::CRZ, GateType::RXX, GateType::RYY, GateType::RZZ,
};

inline constexpr std::array<GateType, 7> kSingleQubitGateTypes = {
    GateType::H, GateType::X, GateType::Y, GateType::Z,
    GateType::RX, GateType::RY, GateType::RZ,
};

constexpr int index_of(GateType t) { return static_cast<int>(t); }

constexpr bool is_parametrized(GateType t) {
  return index_of(t) >= kNumFixedTypes;
}

constexpr int param_dim(GateType t) { return is_parametrized(t) ? 1 : 0; }

constexpr int arity(GateType t) {
  switch (t) {
    case GateType::H: case GateType::X: case GateType::Y: case GateType::Z:
    case GateType::RX: case GateType::RY: case GateType::RZ:
      return 1;
    default:
      return 2;
  }
}

/// Controlled gates: first wire is the control, second the target.
constexpr bool is_controlled(GateType t) {
  switch (t) {
    case GateType::CX: case GateType::CY: case GateType::CZ:
    case GateType::CRX: case GateType::CRY: case GateType::CRZ:
      return true;
    default:
      return false;
  }
}

std::string_view gate_name(GateType t);
std::optional<GateType> parse_gate_type(std::string_view name);

/// Number placed in the type row of the matrix representation. Fixed gate
/// i (1-based) maps to 0.1*i/8, parametrized gate j to 0.1 + 0.9*j/10.
double representative_number(GateType t);

/// One catalog entry placed on wires. Only the first arity(type) wires are
/// meaningful; the rest stay at -1.
struct Gate {
  GateType type = GateType::H;
  std::array<int, 2> w = {-1, -1};

  Gate() = default;
  Gate(GateType t, int q0) : type(t), w{q0, -1} {}
  Gate(GateType t, int q0, int q1) : type(t), w{q0, q1} {}

  int arity() const { return qnas::arity(type); }
  bool parametrized() const { return is_parametrized(type); }
  std::span<const int> wires() const {
    return {w.data(), static_cast<std::size_t>(qnas::arity(type))};
  }
  bool acts_on(int q) const {
    return w[0] == q || (arity() == 2 && w[1] == q);
  }

  friend bool operator==(const Gate& a, const Gate& b) {
    if (a.type != b.type || a.w[0] != b.w[0]) return false;
    return a.arity() == 1 || a.w[1] == b.w[1];
  }
};

/// Throws std::invalid_argument if the wires are out of range or repeated.
void validate_gate(const Gate& g, int n_qubits);

std::string to_string(const Gate& g);

}  // namespace qnas
