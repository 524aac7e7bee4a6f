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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qnas/core/errors.hpp"
#include "qnas/core/random.hpp"
#include "qnas/core/simulator.hpp"
#include "qnas/metric/gate_table.hpp"
#include "qnas/metric/generator.hpp"
#include "qnas/metric/shape.hpp"

using namespace qnas;
using Eigen::MatrixXcd;

namespace {

// exp(i s H) for Hermitian H through its eigendecomposition.
MatrixXcd hermitian_exp(const MatrixXcd& h, double s) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, s * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Gate place(GateType t, int a = 0, int b = 1) { return arity(t) == 1 ? Gate(t, a) : Gate(t, a, b); }

const GateType kClassA[] = {GateType::RX, GateType::RY, GateType::RZ, GateType::RXX, GateType::RYY, GateType::RZZ};
const GateType kClassB[] = {GateType::CRX, GateType::CRY, GateType::CRZ};

}  // namespace

TEST(Generator, ReconstructsEveryCatalogGate) {
  for (GateType t : kAllGateTypes) {
    const Gate g = place(t, 1, 0);
    const GeneratorDecomposition gen = hermitian_generator(g, 2);
    EXPECT_NEAR(nuclear_norm(gen.H), 1.0, 1e-12) << gate_name(t);
    EXPECT_LT((gen.H - gen.H.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    if (is_parametrized(t)) {
      for (double theta : {0.3, -1.7, 2.9}) {
        EXPECT_LT((hermitian_exp(gen.H, theta * gen.t) - gate_unitary(g, theta, 2)).cwiseAbs().maxCoeff(), 1e-12)
            << gate_name(t);
      }
    } else {
      EXPECT_LT((hermitian_exp(gen.H, gen.t) - gate_unitary(g, std::nullopt, 2)).cwiseAbs().maxCoeff(), 1e-12)
          << gate_name(t);
    }
  }
}

TEST(Generator, CoreDistanceGoldenValue) {
  // Normalized generators are -Z/2 and -X/2; (X - Z)/2 has eigenvalues +-1/sqrt(2).
  EXPECT_NEAR(core_distance(Gate(GateType::RZ, 0), Gate(GateType::RX, 0), 1), 1 / std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(core_distance(Gate(GateType::RZ, 0), Gate(GateType::RZ, 0), 3), 0.0, 1e-14);
}

TEST(Generator, UnionOfWiresMatchesFullSpace) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Gate a = random_placement(random_gate_type(4, rng), 4, rng);
    const Gate b = random_placement(random_gate_type(4, rng), 4, rng);
    const double full = nuclear_norm(hermitian_generator(a, 4).H - hermitian_generator(b, 4).H) / 2;
    EXPECT_NEAR(core_distance(a, b, 4), full, 1e-10) << to_string(a) << " " << to_string(b);
  }
}

TEST(Generator, CoreDistanceIsAMetricOnSamples) {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    Gate g[3];
    for (Gate& x : g) x = random_placement(random_gate_type(3, rng), 3, rng);
    const double ab = core_distance(g[0], g[1], 3), bc = core_distance(g[1], g[2], 3), ac = core_distance(g[0], g[2], 3);
    EXPECT_NEAR(ab, core_distance(g[1], g[0], 3), 1e-12);
    EXPECT_LE(ac, ab + bc + 1e-10);
  }
}

TEST(Shape, SameClassRotationsAlign) {
  EXPECT_LT(shape_distance(Gate(GateType::RX, 0), Gate(GateType::RY, 0), 1).distance, 1e-6);
  for (GateType a : kClassB)
    for (GateType b : kClassB) EXPECT_LT(shape_distance(place(a), place(b), 2).distance, 1e-3);
  EXPECT_LT(shape_distance(Gate(GateType::RX, 0), Gate(GateType::RZZ, 0, 1), 2).distance, 1e-3);
}

TEST(Shape, FixedGatesAreSpecialCases) {
  EXPECT_EQ(shape_distance(Gate(GateType::H, 0), Gate(GateType::CX, 0, 1), 2).distance, 0.0);
  EXPECT_TRUE(std::isinf(shape_distance(Gate(GateType::H, 0), Gate(GateType::RX, 1), 2).distance));
}

TEST(Shape, SymmetricUnderArgumentSwap) {
  const std::pair<Gate, Gate> pairs[] = {{Gate(GateType::RX, 0), Gate(GateType::CRX, 0, 1)},
                                         {Gate(GateType::RZZ, 0, 1), Gate(GateType::CRY, 1, 0)},
                                         {Gate(GateType::RY, 1), Gate(GateType::RXX, 0, 1)}};
  for (const auto& [a, b] : pairs) {
    const ShapeSolution ab = shape_distance(a, b, 2), ba = shape_distance(b, a, 2);
    EXPECT_EQ(ab.distance, ba.distance);
    EXPECT_NE(ab.swapped, ba.swapped);
  }
}

TEST(Shape, EachUpdateLowersTheObjective) {
  ShapeConfig cfg;
  cfg.max_iters = 40;
  Rng rng(1);
  const ShapeSolution s = shape_descent(Gate(GateType::RX, 0), Gate(GateType::CRY, 0, 1), 2, cfg, haar_unitary(4, rng));
  ASSERT_GT(s.trace.size(), 4u);
  for (std::size_t i = 1; i < s.trace.size(); ++i) EXPECT_LE(s.trace[i], s.trace[i - 1] + 1e-12) << i;
  EXPECT_NEAR(s.trace.back(), shape_objective(Gate(GateType::RX, 0), Gate(GateType::CRY, 0, 1), 2, cfg.samples, s.V, s.M, s.alpha),
              1e-10);
}

TEST(Shape, SolutionIsFeasible) {
  const ShapeSolution s = shape_distance(Gate(GateType::RZ, 0), Gate(GateType::CRX, 0, 1), 2);
  EXPECT_LT((s.V.adjoint() * s.V - MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-10);
  for (Eigen::Index k = 0; k < s.M.cols(); ++k) EXPECT_NEAR(s.M.col(k).norm(), 1.0, 1e-10);
}

class GateTableTest : public ::testing::Test {
 protected:
  static const GateDistanceTable& table() { return shared_gate_table(2); }
};

TEST_F(GateTableTest, GoldenControlledRotationPair) {
  EXPECT_NEAR(table().gate_distance(Gate(GateType::CRZ, 0, 1), Gate(GateType::CRY, 0, 1)), 0.3535, 1e-3);
}

TEST_F(GateTableTest, ClassStructure) {
  const double ab = table().shape(GateType::RX, GateType::CRX);
  EXPECT_GT(ab, 0.05);
  for (GateType a : kClassA) {
    for (GateType b : kClassB) EXPECT_NEAR(table().shape(a, b), ab, 1e-3);
    for (GateType a2 : kClassA) EXPECT_LT(table().shape(a, a2), 1e-3);
  }
  for (GateType b : kClassB)
    for (GateType b2 : kClassB) EXPECT_LT(table().shape(b, b2), 1e-3);
}

TEST_F(GateTableTest, TableIsAPseudometric) {
  std::vector<Gate> gates;
  for (GateType t : kAllGateTypes) {
    gates.push_back(place(t, 0, 1));
    gates.push_back(place(t, 1, 0));
  }
  for (const Gate& a : gates) {
    EXPECT_EQ(table().gate_distance(a, a), 0.0);
    for (const Gate& b : gates) {
      const double ab = table().gate_distance(a, b);
      EXPECT_EQ(ab, table().gate_distance(b, a));
      if (!std::isfinite(ab)) continue;
      for (const Gate& c : gates) {
        const double bc = table().gate_distance(b, c), ac = table().gate_distance(a, c);
        if (std::isfinite(bc)) {
          EXPECT_LE(ac, ab + bc + 1e-12);
        }
      }
    }
  }
}

TEST_F(GateTableTest, LookupMatchesDirectComputation) {
  const Gate a(GateType::CRX, 1, 0), b(GateType::RYY, 0, 1);
  const GatePairDistance d = table().lookup(a, b);
  EXPECT_NEAR(d.core, core_distance(a, b, 2), 1e-12);
  EXPECT_NEAR(d.gate, (d.core + d.shape) / 2, 1e-15);
  EXPECT_TRUE(std::isinf(table().lookup(Gate(GateType::X, 0), Gate(GateType::RX, 0)).shape));
  EXPECT_THROW(table().lookup(Gate(GateType::X, 0), Gate(GateType::RX, 2)), std::invalid_argument);
}

TEST_F(GateTableTest, CsvHasOneRowPerPair) {
  const std::string csv = table().to_csv();
  EXPECT_EQ(csv.rfind("type1,wires1,type2,wires2,d_core,d_shape,d_gate\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), table().rows().size() + 1);
}
