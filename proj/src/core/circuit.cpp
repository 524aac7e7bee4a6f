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

#include "qnas/core/circuit.hpp"

#include <stdexcept>

namespace qnas {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
  for (const Gate& g : gates) validate_gate(g, n_qubits_);
  gates_ = std::move(gates);
}

int Circuit::param_count() const {
  int n = 0;
  for (const Gate& g : gates_) n += g.parametrized() ? 1 : 0;
  return n;
}

void Circuit::push_back(const Gate& g) {
  validate_gate(g, n_qubits_);
  gates_.push_back(g);
}

void Circuit::set(std::size_t i, const Gate& g) {
  validate_gate(g, n_qubits_);
  gates_.at(i) = g;
}

Circuit Circuit::concat(const Circuit& next) const {
  if (next.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("cannot concatenate circuits on different qubit counts");
  }
  Circuit out = *this;
  out.gates_.insert(out.gates_.end(), next.gates_.begin(), next.gates_.end());
  return out;
}

std::uint64_t Circuit::hash() const {
  // FNV-1a over (n, type, wires).
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n_qubits_));
  for (const Gate& g : gates_) {
    mix(static_cast<std::uint64_t>(index_of(g.type)));
    mix(static_cast<std::uint64_t>(g.w[0] + 1));
    mix(static_cast<std::uint64_t>(g.arity() == 2 ? g.w[1] + 1 : 0));
  }
  return h;
}

std::string to_string(const Circuit& c) {
  std::string s = "[n=" + std::to_string(c.n_qubits()) + "]";
  for (const Gate& g : c.gates()) {
    s += ' ';
    s += to_string(g);
  }
  return s;
}

std::vector<double> ParamBinding::bind(std::span<const double> shared) const {
  if (static_cast<int>(shared.size()) != n_shared) {
    throw std::invalid_argument("binding expects " + std::to_string(n_shared) +
                                " shared parameters, got " + std::to_string(shared.size()));
  }
  std::vector<double> out(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) out[i] = scale[i] * shared[index[i]];
  return out;
}

}  // namespace qnas
