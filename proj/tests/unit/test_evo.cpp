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

#include <algorithm>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qnas/evo/evolve.hpp"

using namespace qnas;

namespace {

int count_type(const Circuit& c, GateType t) {
  return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(), [&](const Gate& g) { return g.type == t; }));
}

int hamming(const Circuit& a, const Circuit& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += !(a[i] == b[i]);
  return d;
}

}  // namespace

TEST(EvoSchedule, GrowsLikeSquareRoots) {
  const EvoConfig cfg;
  EXPECT_EQ(cfg.generations(1), 5);
  EXPECT_EQ(cfg.generations(16), 20);
  EXPECT_EQ(cfg.pool_size(16), static_cast<int>(std::ceil(4 * std::sqrt(20.0))));
  EXPECT_EQ(cfg.offspring(4), static_cast<int>(std::ceil(4 * std::sqrt(10.0))));
}

TEST(Mutate, ChangesOneToFourGatesAndKeepsShape) {
  const EvoConfig cfg;
  Rng rng(1);
  const Circuit base = random_circuit(4, 10, rng);
  int histogram[5] = {};
  for (int i = 0; i < 4000; ++i) {
    const Circuit m = mutate(base, rng, cfg);
    ASSERT_EQ(m.size(), base.size());
    ASSERT_EQ(m.n_qubits(), base.n_qubits());
    const int d = hamming(base, m);
    ASSERT_GE(d, 1);
    ASSERT_LE(d, 4);
    ++histogram[d];
  }
  // Every change alters its gate, so the change count is observable.
  EXPECT_NEAR(histogram[1] / 4000.0, 0.4, 0.03);
  EXPECT_NEAR(histogram[4] / 4000.0, 0.1, 0.02);
}

TEST(Mutate, SingleQubitCircuitsOnlyChangeType) {
  const EvoConfig cfg;
  Rng rng(2);
  const Circuit base(1, {Gate(GateType::RX, 0), Gate(GateType::H, 0)});
  for (int i = 0; i < 200; ++i) {
    const Circuit m = mutate(base, rng, cfg);
    for (const Gate& g : m.gates()) EXPECT_EQ(g.arity(), 1);
    EXPECT_GE(hamming(base, m), 1);
  }
}

TEST(Evolve, ClimbsASimpleAcquisition) {
  EvoConfig cfg;
  Rng rng(3);
  std::vector<Circuit> seeds;
  for (int i = 0; i < 5; ++i) seeds.push_back(random_circuit(3, 6, rng));
  const AcquisitionFn acq = [](const Circuit& c) { return double(count_type(c, GateType::RZ)); };
  const EvoResult r = evolve(seeds, acq, 25, cfg, rng);
  EXPECT_GE(r.value, 5.0);
  EXPECT_EQ(acq(r.best), r.value);
  EXPECT_EQ(static_cast<int>(r.pool_best.size()), cfg.generations(25));
  for (std::size_t i = 1; i < r.pool_best.size(); ++i) EXPECT_GE(r.pool_best[i], r.pool_best[i - 1]);
}

TEST(Evolve, DiscardsFailingCandidates) {
  EvoConfig cfg;
  Rng rng(4);
  const AcquisitionFn acq = [](const Circuit& c) {
    if (count_type(c, GateType::H) > 0) throw std::runtime_error("no H allowed");
    if (count_type(c, GateType::X) > 0) return std::numeric_limits<double>::quiet_NaN();
    return double(count_type(c, GateType::CRX));
  };
  const Circuit valid(3, {Gate(GateType::RY, 0), Gate(GateType::CRX, 0, 1), Gate(GateType::RZ, 2)});
  const EvoResult r = evolve({valid}, acq, 9, cfg, rng);
  EXPECT_GT(r.discarded, 0);
  EXPECT_EQ(count_type(r.best, GateType::H), 0);
  EXPECT_EQ(count_type(r.best, GateType::X), 0);

  const Circuit invalid(3, {Gate(GateType::H, 0)});
  const EvoResult none = evolve({invalid}, acq, 9, cfg, rng);
  EXPECT_TRUE(std::isnan(none.value));
  EXPECT_EQ(none.best, invalid);
}

TEST(Evolve, DeterministicUnderFixedSeed) {
  EvoConfig cfg;
  auto run = [&] {
    Rng rng(10);
    std::vector<Circuit> seeds;
    for (int i = 0; i < 4; ++i) seeds.push_back(random_circuit(3, 6, rng));
    return evolve(seeds, [](const Circuit& c) { return std::sin(double(c.hash() % 1000)); }, 9, cfg, rng);
  };
  const EvoResult a = run(), b = run();
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.evaluations, b.evaluations);
}
