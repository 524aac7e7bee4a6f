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

#include "qnas/bo/observations.hpp"

#include <stdexcept>

namespace qnas {

ObservationSet::ObservationSet(const GateDistanceTable& table, std::vector<double> nus, const OtOptions& opt)
    : table_(&table), nus_(std::move(nus)), opt_(opt) {
  if (nus_.empty()) throw std::invalid_argument("need at least one structural weight");
  d_.nus = nus_;
  d_.raw.assign(nus_.size(), Eigen::MatrixXd());
  d_.normalized.assign(nus_.size(), Eigen::MatrixXd());
}

QueryDistances ObservationSet::distances_to(const CircuitFeatures& q) const {
  const Eigen::Index n = static_cast<Eigen::Index>(circuits_.size());
  QueryDistances out;
  out.raw.assign(nus_.size(), Eigen::VectorXd(n));
  out.normalized.assign(nus_.size(), Eigen::VectorXd(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto res = ot_distances(q, circuits_[i], nus_, *table_, opt_);
    for (std::size_t k = 0; k < nus_.size(); ++k) {
      out.raw[k](i) = res[k].distance;
      out.normalized[k](i) = res[k].normalized;
    }
  }
  return out;
}

void ObservationSet::add(const Circuit& c, double y) {
  CircuitFeatures f = make_features(c, opt_);
  const QueryDistances q = distances_to(f);
  const Eigen::Index n = static_cast<Eigen::Index>(circuits_.size());
  for (std::size_t k = 0; k < nus_.size(); ++k) {
    for (auto* m : {&d_.raw[k], &d_.normalized[k]}) m->conservativeResize(n + 1, n + 1);
    d_.raw[k].row(n).head(n) = q.raw[k].transpose();
    d_.raw[k].col(n).head(n) = q.raw[k];
    d_.normalized[k].row(n).head(n) = q.normalized[k].transpose();
    d_.normalized[k].col(n).head(n) = q.normalized[k];
    d_.raw[k](n, n) = 0.0;
    d_.normalized[k](n, n) = 0.0;
  }
  circuits_.push_back(std::move(f));
  y_.push_back(y);
}

}  // namespace qnas
