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

#include "qnas/ot/circuit_distance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qnas/core/dag.hpp"
#include "qnas/core/errors.hpp"
#include "qnas/core/parallel.hpp"
#include "qnas/ot/transport.hpp"

namespace qnas {

CircuitFeatures make_features(const Circuit& c, const OtOptions& opt) {
  return {c, assign_masses(c, opt.eta), path_profile(circuit_to_dag(c))};
}

Eigen::MatrixXd structural_cost(const PathProfile& a, const PathProfile& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("structural cost between circuits on " + std::to_string(a.n_qubits) + " and " +
                                std::to_string(b.n_qubits) + " qubits");
  }
  const int n = a.n_qubits;
  Eigen::MatrixXd c(a.value.size(), b.value.size());
  for (std::size_t i = 0; i < a.value.size(); ++i) {
    for (std::size_t j = 0; j < b.value.size(); ++j) {
      double s = 0.0;
      for (int end = 0; end < 2; ++end)
        for (int st = 0; st < 3; ++st)
          for (int q = 0; q < n; ++q) s += std::abs(a.value[i][end][st][q] - b.value[j][end][st][q]);
      c(i, j) = s / (6.0 * n);
    }
  }
  return c;
}

Eigen::MatrixXd gtm_cost(const Circuit& a, const Circuit& b, const GateDistanceTable& table) {
  Eigen::MatrixXd c(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = table.gate_distance(a[i], b[j]);
  return c;
}

std::vector<OtResult> ot_distances(const CircuitFeatures& a, const CircuitFeatures& b, std::span<const double> nus,
                                   const GateDistanceTable& table, const OtOptions& opt) {
  const double tm1 = a.mass.total, tm2 = b.mass.total;
  if (!(tm1 > 0) || !(tm2 > 0)) {
    throw std::invalid_argument("circuit distance needs positive total mass (at least one parametrized gate)");
  }
  const Eigen::Index n1 = static_cast<Eigen::Index>(a.circuit.size());
  const Eigen::Index n2 = static_cast<Eigen::Index>(b.circuit.size());
  const Eigen::MatrixXd gtm = gtm_cost(a.circuit, b.circuit, table);
  const Eigen::MatrixXd str = structural_cost(a.profile, b.profile);

  // Each side's null gate absorbs the other side's whole mass, so the
  // problem is balanced at tm1 + tm2.
  Eigen::VectorXd y1(n1 + 1), y2(n2 + 1);
  for (Eigen::Index i = 0; i < n1; ++i) y1(i) = a.mass.mass[i];
  for (Eigen::Index j = 0; j < n2; ++j) y2(j) = b.mass.mass[j];
  y1(n1) = tm2;
  y2(n2) = tm1;

  std::vector<OtResult> out;
  for (double nu : nus) {
    if (nu < 0) throw std::invalid_argument("structural weight must be non-negative");
    Eigen::MatrixXd c = Eigen::MatrixXd::Ones(n1 + 1, n2 + 1);
    c(n1, n2) = 0.0;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> forbidden;
    for (Eigen::Index i = 0; i < n1; ++i) {
      for (Eigen::Index j = 0; j < n2; ++j) {
        if (std::isinf(gtm(i, j))) {
          c(i, j) = opt.big_m;
          forbidden.emplace_back(i, j);
        } else {
          c(i, j) = gtm(i, j) + nu * str(i, j);
        }
      }
    }
    const TransportPlan plan = solve_transport(y1, y2, c);
    for (const auto& [i, j] : forbidden) {
      if (plan.flow(i, j) > 1e-12 * (tm1 + tm2)) {
        throw InternalError("optimal plan routes mass through a forbidden gate match");
      }
    }
    OtResult r;
    r.plan = plan.flow;
    r.distance = plan.cost;
    r.normalized = plan.cost / (tm1 + tm2);
    r.cost = std::move(c);
    out.push_back(std::move(r));
  }
  return out;
}

OtResult ot_distance(const CircuitFeatures& a, const CircuitFeatures& b, double nu, const GateDistanceTable& table,
                     const OtOptions& opt) {
  const double nus[] = {nu};
  return std::move(ot_distances(a, b, nus, table, opt).front());
}

double ot_distance(const Circuit& a, const Circuit& b, double nu, bool normalized, const GateDistanceTable& table,
                   const OtOptions& opt) {
  const OtResult r = ot_distance(make_features(a, opt), make_features(b, opt), nu, table, opt);
  return normalized ? r.normalized : r.distance;
}

DistanceMatrices distance_matrices(const std::vector<CircuitFeatures>& circuits, std::span<const double> nus,
                                   const GateDistanceTable& table, const OtOptions& opt) {
  const Eigen::Index n = static_cast<Eigen::Index>(circuits.size());
  DistanceMatrices out;
  out.nus.assign(nus.begin(), nus.end());
  for (std::size_t k = 0; k < nus.size(); ++k) {
    out.raw.push_back(Eigen::MatrixXd::Zero(n, n));
    out.normalized.push_back(Eigen::MatrixXd::Zero(n, n));
  }
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const auto res = ot_distances(circuits[i], circuits[j], nus, table, opt);
    for (std::size_t k = 0; k < nus.size(); ++k) {
      out.raw[k](i, j) = out.raw[k](j, i) = res[k].distance;
      out.normalized[k](i, j) = out.normalized[k](j, i) = res[k].normalized;
    }
  });
  return out;
}

}  // namespace qnas
