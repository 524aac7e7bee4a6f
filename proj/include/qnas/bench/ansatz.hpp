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

#include <filesystem>

#include "qnas/core/circuit.hpp"

namespace qnas {

inline constexpr int kTemplateCount = 19;

/// Directory holding NN.json template files; QNAS_DATA_DIR overrides the
/// build-time default.
std::filesystem::path template_dir();

/// One layer of template `id` (1-based) as stored on disk.
Circuit load_template_layer(int id, const std::filesystem::path& dir = template_dir());

/// Template `id` with its layer repeated `depth` times. Templates are defined
/// on 4 qubits only; other sizes throw std::invalid_argument.
Circuit ansatz_catalog(int id, int n_qubits, int depth, const std::filesystem::path& dir = template_dir());

}  // namespace qnas
