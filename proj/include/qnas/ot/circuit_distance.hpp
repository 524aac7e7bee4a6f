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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qnas/core/circuit.hpp"
#include "qnas/metric/gate_table.hpp"
#include "qnas/ot/mass.hpp"
#include "qnas/ot/path_profile.hpp"

namespace qnas {

struct OtOptions {
  double eta = 0.1;     // fixed-gate share of the parametrized mass
  double big_m = 1e6;   // cost standing in for a forbidden (infinite) match
};

/// Everything about one circuit the distance needs, computed once.
struct CircuitFeatures {
  Circuit circuit;
  MassAssignment mass;
  PathProfile profile;
};

CircuitFeatures make_features(const Circuit& c, const OtOptions& opt = {});

/// (1 / 6n) sum over statistics, endpoints and qubits of |delta(i) - delta(j)|.
Eigen::MatrixXd structural_cost(const PathProfile& a, const PathProfile& b);

/// d_gate(u_i, v_j); +inf for forbidden pairs.
Eigen::MatrixXd gtm_cost(const Circuit& a, const Circuit& b, const GateDistanceTable& table);

struct OtResult {
  double distance = 0.0;
  double normalized = 0.0;  // distance / (tm1 + tm2)
  Eigen::MatrixXd plan;     // (n1 + 1) x (n2 + 1), last row/column = null gate
  Eigen::MatrixXd cost;
};

/// One transport problem per structural weight nu, sharing the cost blocks.
std::vector<OtResult> ot_distances(const CircuitFeatures& a, const CircuitFeatures& b, std::span<const double> nus,
                                   const GateDistanceTable& table, const OtOptions& opt = {});

OtResult ot_distance(const CircuitFeatures& a, const CircuitFeatures& b, double nu, const GateDistanceTable& table,
                     const OtOptions& opt = {});

double ot_distance(const Circuit& a, const Circuit& b, double nu, bool normalized, const GateDistanceTable& table,
                   const OtOptions& opt = {});

struct DistanceMatrices {
  std::vector<double> nus;
  std::vector<Eigen::MatrixXd> raw;         // one per nu
  std::vector<Eigen::MatrixXd> normalized;  // one per nu
};

/// All pairwise distances, symmetric with a zero diagonal.
DistanceMatrices distance_matrices(const std::vector<CircuitFeatures>& circuits, std::span<const double> nus,
                                   const GateDistanceTable& table, const OtOptions& opt = {});

}  // namespace qnas
