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

#include "qnas/core/matrix_repr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qnas {

MatrixRepr encode_matrix(const Circuit& c) {
  const int n = c.n_qubits();
  MatrixRepr out{Eigen::MatrixXd::Zero(n + 1, static_cast<Eigen::Index>(c.size()))};
  for (Eigen::Index col = 0; col < out.matrix.cols(); ++col) {
    const Gate& g = c[col];
    if (g.arity() == 1) {
      out.matrix(g.w[0], col) = 1.0;
    } else {
      out.matrix(g.w[0], col) = 0.75;
      out.matrix(g.w[1], col) = 0.25;
    }
    out.matrix(n, col) = representative_number(g.type);
  }
  return out;
}

namespace {

int argmax_row(const Eigen::MatrixXd& m, Eigen::Index col, int n, int skip) {
  int best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < n; ++r) {
    if (r == skip) continue;
    if (m(r, col) > best_value) {
      best_value = m(r, col);
      best = r;
    }
  }
  return best;
}

}  // namespace

Circuit decode_matrix(const MatrixRepr& m, int n_qubits) {
  if (m.matrix.rows() != n_qubits + 1) {
    throw std::invalid_argument("matrix representation needs n_qubits + 1 rows");
  }
  Circuit out(n_qubits);
  for (Eigen::Index col = 0; col < m.matrix.cols(); ++col) {
    const double code = m.matrix(n_qubits, col);
    GateType best = GateType::H;
    double best_gap = std::numeric_limits<double>::infinity();
    for (GateType t : kAllGateTypes) {
      if (n_qubits == 1 && arity(t) == 2) continue;
      const double gap = std::abs(representative_number(t) - code);
      if (gap < best_gap) {
        best_gap = gap;
        best = t;
      }
    }
    const int first = argmax_row(m.matrix, col, n_qubits, -1);
    if (arity(best) == 1) {
      out.push_back(Gate(best, first));
    } else {
      out.push_back(Gate(best, first, argmax_row(m.matrix, col, n_qubits, first)));
    }
  }
  return out;
}

}  // namespace qnas
