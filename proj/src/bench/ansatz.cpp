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

#include "qnas/bench/ansatz.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qnas/core/circuit_json.hpp"

namespace qnas {

std::filesystem::path template_dir() {
  if (const char* env = std::getenv("QNAS_DATA_DIR"); env && *env) return std::filesystem::path(env) / "templates";
  return std::filesystem::path(QNAS_DEFAULT_DATA_DIR) / "templates";
}

Circuit load_template_layer(int id, const std::filesystem::path& dir) {
  if (id < 1 || id > kTemplateCount) throw std::invalid_argument("unknown template id " + std::to_string(id));
  char name[16];
  std::snprintf(name, sizeof name, "%02d.json", id);
  return load_circuit(dir / name);
}

Circuit ansatz_catalog(int id, int n_qubits, int depth, const std::filesystem::path& dir) {
  if (depth < 1) throw std::invalid_argument("template depth must be at least 1");
  const Circuit layer = load_template_layer(id, dir);
  if (n_qubits != layer.n_qubits()) {
    throw std::invalid_argument("template " + std::to_string(id) + " is defined on " +
                                std::to_string(layer.n_qubits()) + " qubits, not " + std::to_string(n_qubits));
  }
  Circuit c(n_qubits);
  for (int l = 0; l < depth; ++l)
    for (const Gate& g : layer.gates()) c.push_back(g);
  return c;
}

}  // namespace qnas
