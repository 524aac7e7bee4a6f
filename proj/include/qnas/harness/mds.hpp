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

#include "qnas/metric/gate_table.hpp"
#include "qnas/ot/circuit_distance.hpp"

namespace qnas {

struct MdsResult {
  Eigen::MatrixXd coords;       // one row per point
  Eigen::VectorXd eigenvalues;  // kept eigenvalues, descending, clipped at 0
};

/// Classical scaling: eigen-decompose -1/2 J D^2 J and scale the top `dims`
/// eigenvectors by sqrt(eigenvalue). Throws std::invalid_argument for a
/// non-square matrix, asymmetry above 1e-8 or a nonzero diagonal.
MdsResult mds_embed(const Eigen::MatrixXd& d, int dims = 2);

/// For each row, the indices of its k closest other rows (Euclidean), closest first.
std::vector<std::vector<int>> nearest_neighbors(const Eigen::MatrixXd& coords, int k);

/// True when i is among j's k nearest and j among i's.
bool mutual_neighbors(const std::vector<std::vector<int>>& nn, int i, int j);

/// Pairwise OT distances between the 19 catalog templates (4 qubits).
Eigen::MatrixXd template_distance_matrix(double nu, bool normalized, int depth, const GateDistanceTable& table,
                                         const OtOptions& opt = {});

}  // namespace qnas
