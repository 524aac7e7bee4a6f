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
#include <vector>

#include <Eigen/Dense>

#include "qnas/ot/circuit_distance.hpp"

namespace qnas {

inline constexpr std::array<double, 4> kDefaultNus = {0.1, 0.2, 0.4, 0.8};

/// Distances from one query circuit to every observation, per nu.
struct QueryDistances {
  std::vector<Eigen::VectorXd> raw;
  std::vector<Eigen::VectorXd> normalized;
};

/// Evaluated circuits with their objective values and the pairwise OT
/// distance matrices, grown incrementally.
class ObservationSet {
 public:
  explicit ObservationSet(const GateDistanceTable& table, std::vector<double> nus = {kDefaultNus.begin(), kDefaultNus.end()},
                          const OtOptions& opt = {});

  void add(const Circuit& c, double y);

  std::size_t size() const { return circuits_.size(); }
  const std::vector<CircuitFeatures>& features() const { return circuits_; }
  const std::vector<double>& y() const { return y_; }
  Eigen::VectorXd y_vector() const { return Eigen::Map<const Eigen::VectorXd>(y_.data(), y_.size()); }
  const std::vector<double>& nus() const { return nus_; }
  const DistanceMatrices& distances() const { return d_; }
  const GateDistanceTable& table() const { return *table_; }
  const OtOptions& ot_options() const { return opt_; }

  QueryDistances distances_to(const CircuitFeatures& q) const;
  QueryDistances distances_to(const Circuit& q) const { return distances_to(make_features(q, opt_)); }

 private:
  const GateDistanceTable* table_;
  std::vector<double> nus_;
  OtOptions opt_;
  std::vector<CircuitFeatures> circuits_;
  std::vector<double> y_;
  DistanceMatrices d_;
};

}  // namespace qnas
