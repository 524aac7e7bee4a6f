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

#include "qnas/core/circuit_json.hpp"

#include <fstream>
#include <stdexcept>

namespace qnas {

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::json wires = nlohmann::json::array();
    for (int q : g.wires()) wires.push_back(q);
    gates.push_back({{"type", std::string(gate_name(g.type))}, {"wires", wires}});
  }
  return {{"n_qubits", c.n_qubits()}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("gates")) {
    throw std::invalid_argument("circuit JSON needs \"n_qubits\" and \"gates\"");
  }
  Circuit c(j.at("n_qubits").get<int>());
  for (const auto& jg : j.at("gates")) {
    const auto name = jg.at("type").get<std::string>();
    const auto type = parse_gate_type(name);
    if (!type) throw std::invalid_argument("unknown gate type \"" + name + "\"");
    const auto wires = jg.at("wires").get<std::vector<int>>();
    if (static_cast<int>(wires.size()) != arity(*type)) {
      throw std::invalid_argument("gate " + name + " takes " + std::to_string(arity(*type)) +
                                  " wires");
    }
    c.push_back(wires.size() == 1 ? Gate(*type, wires[0]) : Gate(*type, wires[0], wires[1]));
  }
  return c;
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return circuit_from_json(nlohmann::json::parse(in));
}

void save_circuit(const Circuit& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << circuit_to_json(c).dump(2) << '\n';
}

}  // namespace qnas
