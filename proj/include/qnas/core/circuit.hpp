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
#include <span>
#include <string>
#include <vector>

#include "qnas/core/gate.hpp"

namespace qnas {

/// Ordered gate sequence on n qubits. Gate 0 is applied first. Parameters
/// are consumed in gate order, one per parametrized gate.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits);
  Circuit(int n_qubits, std::vector<Gate> gates);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  int param_count() const;

  void push_back(const Gate& g);
  /// Replaces gate i, re-validating wires.
  void set(std::size_t i, const Gate& g);

  /// Gates of `*this` followed by the gates of `next`.
  Circuit concat(const Circuit& next) const;

  std::uint64_t hash() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n_qubits_ == b.n_qubits_ && a.gates_ == b.gates_;
  }

 private:
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
};

std::string to_string(const Circuit& c);

struct CircuitHash {
  std::size_t operator()(const Circuit& c) const { return c.hash(); }
};

/// Maps a small vector of shared parameters onto per-gate angles:
/// angle[i] = scale[i] * shared[index[i]] for the i-th parametrized gate.
struct ParamBinding {
  std::vector<int> index;
  std::vector<double> scale;
  int n_shared = 0;

  std::vector<double> bind(std::span<const double> shared) const;
};

}  // namespace qnas
