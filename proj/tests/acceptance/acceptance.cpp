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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion,
// preceded by indented detail lines. Pass criterion names as arguments to
// run a subset: gate-metric mub circuit-metric haar-integral objectives
// bo-internals embedding.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qnas/bench/ansatz.hpp"
#include "qnas/bench/maxcut.hpp"
#include "qnas/bench/qgan.hpp"
#include "qnas/bo/gp.hpp"
#include "qnas/bo/observations.hpp"
#include "qnas/core/random.hpp"
#include "qnas/core/simulator.hpp"
#include "qnas/harness/mds.hpp"
#include "qnas/harness/scatter.hpp"
#include "qnas/harness/search.hpp"
#include "qnas/metric/gate_table.hpp"
#include "qnas/metric/generator.hpp"
#include "qnas/metric/shape.hpp"
#include "qnas/mub/mub.hpp"
#include "qnas/ot/circuit_distance.hpp"

using namespace qnas;
using G = GateType;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects sub-check outcomes for one criterion.
struct Criterion {
  std::string name;
  bool ok = true;

  void check(bool cond, const char* fmt, ...) __attribute__((format(printf, 3, 4))) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    std::printf("    [%s] %s\n", cond ? "ok" : "FAILED", buf);
    std::fflush(stdout);
    ok = ok && cond;
  }
  void note(const std::string& s) const {
    std::printf("    %s\n", s.c_str());
    std::fflush(stdout);
  }
};

Gate place(GateType t, int a = 0, int b = 1) { return arity(t) == 1 ? Gate(t, a) : Gate(t, a, b); }

const GateType kClassA[] = {G::RX, G::RY, G::RZ, G::RXX, G::RYY, G::RZZ};
const GateType kClassB[] = {G::CRX, G::CRY, G::CRZ};

std::vector<GateType> param_types() {
  std::vector<GateType> out;
  for (GateType t : kAllGateTypes)
    if (is_parametrized(t)) out.push_back(t);
  return out;
}

Circuit random_massive(int n, int gates, Rng& rng) { return random_search_circuit(n, gates, rng); }

bool gate_metric() {
  Criterion c{"gate metric golden values"};
  auto t0 = Clock::now();
  const double core = core_distance(Gate(G::RZ, 0), Gate(G::RX, 0), 1);
  c.check(std::abs(core - 0.70711) <= 1e-5 && std::abs(core - 1 / std::sqrt(2.0)) <= 1e-6,
          "d_core(RZ, RX) = %.7f (expected 0.70711 +- 1e-6)", core);
  c.check(seconds_since(t0) < 1.0, "core distance runtime %.3f s (< 1 s)", seconds_since(t0));

  t0 = Clock::now();
  const GateDistanceTable table(2);
  const double table_time = seconds_since(t0);
  const double crz_cry = table.gate_distance(Gate(G::CRZ, 0, 1), Gate(G::CRY, 0, 1));
  c.check(std::abs(crz_cry - 0.3535) <= 1e-3, "d_gate(CRZ, CRY) = %.5f (expected 0.3535 +- 1e-3)", crz_cry);
  c.check(table_time < 60.0, "full table at n = 2 built in %.1f s (< 60 s)", table_time);

  const double rxry = shape_distance(Gate(G::RX, 0), Gate(G::RY, 0), 1).distance;
  c.check(rxry < 1e-6, "d_shape(RX, RY) = %.2e (< 1e-6)", rxry);

  double intra = 0, inter_lo = INFINITY, inter_hi = 0;
  for (GateType a : kClassA) {
    for (GateType a2 : kClassA) intra = std::max(intra, a == a2 ? 0.0 : table.raw_shape(std::min(a, a2), std::max(a, a2)));
    for (GateType b : kClassB) {
      const double v = table.raw_shape(std::min(a, b), std::max(a, b));
      inter_lo = std::min(inter_lo, v);
      inter_hi = std::max(inter_hi, v);
    }
  }
  for (GateType b : kClassB)
    for (GateType b2 : kClassB) intra = std::max(intra, b == b2 ? 0.0 : table.raw_shape(std::min(b, b2), std::max(b, b2)));
  c.check(intra < 1e-3, "largest intra-class shape distance %.2e (< 1e-3)", intra);
  c.check(inter_hi - inter_lo < 1e-3, "inter-class shape distances in [%.5f, %.5f] (spread < 1e-3)", inter_lo, inter_hi);

  // Sample-count stability: every unordered pair of parametrized types on two qubits.
  ShapeConfig fine;
  fine.samples = 240;
  double worst = 0;
  std::string worst_pair;
  const auto types = param_types();
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i; j < types.size(); ++j) {
      const Gate a = place(types[i]), b = place(types[j]);
      const double d12 = shape_distance(a, b, 2).distance;
      const double d240 = shape_distance(a, b, 2, fine).distance;
      if (std::abs(d12 - d240) > worst) {
        worst = std::abs(d12 - d240);
        worst_pair = std::string(gate_name(types[i])) + "/" + std::string(gate_name(types[j]));
      }
    }
  }
  c.check(worst < 1e-2, "max |d_shape(T=12) - d_shape(T=240)| = %.2e at %s (< 1e-2)", worst, worst_pair.c_str());
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

bool mub() {
  Criterion c{"MUB / 2-design"};
  const auto t0 = Clock::now();
  for (int n = 1; n <= 4; ++n) {
    const MubSet m(n);
    const int d = m.dim();
    double ortho = 0, unbiased = 0, haar = 0;
    std::vector<Eigen::MatrixXcd> bases;
    for (int j = 0; j < m.num_bases(); ++j) bases.push_back(m.basis(j));
    for (int a = 0; a < m.num_bases(); ++a) {
      ortho = std::max(ortho, (bases[a].adjoint() * bases[a] - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff());
      for (int b = a + 1; b < m.num_bases(); ++b)
        unbiased = std::max(unbiased, ((bases[a].adjoint() * bases[b]).cwiseAbs2().array() - 1.0 / d).abs().maxCoeff());
    }
    Rng rng(1000 + n);
    for (int i = 0; i < 100; ++i) {
      const Eigen::MatrixXcd u = haar_unitary(d, rng);
      const double exact = (d + std::norm(u.trace())) / (double(d) * (d + 1));
      haar = std::max(haar, std::abs(haar_average_fidelity(u, m) - exact));
    }
    c.check(ortho < 1e-10 && unbiased < 1e-10 && haar < 1e-9,
            "d = %2d: orthonormality %.1e, unbiasedness %.1e, 2-design error %.1e over 100 unitaries", d, ortho, unbiased,
            haar);
  }
  c.check(seconds_since(t0) < 10.0, "runtime %.2f s (< 10 s)", seconds_since(t0));
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

bool circuit_metric() {
  Criterion c{"circuit metric"};
  const GateDistanceTable& t4 = shared_gate_table(4);
  // b adds a second CRZ(2,3) and a trailing RX(1) to a; c swaps a's CRZ for a CRY.
  const Circuit a(4, {Gate(G::H, 0), Gate(G::RX, 0), Gate(G::RY, 1), Gate(G::RZ, 2), Gate(G::RY, 3), Gate(G::CRZ, 2, 3),
                      Gate(G::RXX, 0, 1), Gate(G::CRX, 1, 2)});
  const Circuit b(4, {Gate(G::H, 0), Gate(G::RX, 0), Gate(G::RY, 1), Gate(G::RZ, 2), Gate(G::RY, 3), Gate(G::CRZ, 2, 3),
                      Gate(G::CRZ, 2, 3), Gate(G::RXX, 0, 1), Gate(G::CRX, 1, 2), Gate(G::RX, 1)});
  const Circuit cc(4, {Gate(G::H, 0), Gate(G::RX, 0), Gate(G::RY, 1), Gate(G::RZ, 2), Gate(G::RY, 3), Gate(G::CRY, 2, 3),
                       Gate(G::RXX, 0, 1), Gate(G::CRX, 1, 2)});
  const double ab = ot_distance(a, b, 0, false, t4), ac = ot_distance(a, cc, 0, false, t4), bc = ot_distance(b, cc, 0, false, t4);
  const double nab = ot_distance(a, b, 0, true, t4), nac = ot_distance(a, cc, 0, true, t4), nbc = ot_distance(b, cc, 0, true, t4);
  c.check(std::abs(ab - 3.300) < 1e-3 && std::abs(ac - 5.303) < 1e-3 && std::abs(bc - 8.603) < 1e-3,
          "raw d(a,b) %.4f, d(a,c) %.4f, d(b,c) %.4f (3.300 / 5.303 / 8.603 +- 1e-3)", ab, ac, bc);
  c.check(std::abs(bc - ab - ac) < 1e-6, "d(b,c) - d(a,b) - d(a,c) = %.1e", bc - ab - ac);
  c.check(std::abs(nab - 0.026) < 3e-3 && std::abs(nac - 0.042) < 3e-3 && std::abs(nbc - 0.066) < 3e-3,
          "normalized %.4f / %.4f / %.4f (0.026 / 0.042 / 0.066 +- 3e-3)", nab, nac, nbc);

  const auto t0 = Clock::now();
  const GateDistanceTable& t9 = shared_gate_table(9);
  const std::vector<double> nus = {0.1, 0.2, 0.4, 0.8};
  Rng rng(2024);
  double asym = 0, tri = -INFINITY, self = 0, conservation = 0;
  for (int i = 0; i < 100; ++i) {
    CircuitFeatures f[3];
    for (auto& x : f) x = make_features(random_massive(9, rng.uniform_int(1, 15), rng));
    const auto d01 = ot_distances(f[0], f[1], nus, t9), d10 = ot_distances(f[1], f[0], nus, t9);
    const auto d12 = ot_distances(f[1], f[2], nus, t9), d02 = ot_distances(f[0], f[2], nus, t9);
    const auto d00 = ot_distances(f[0], f[0], nus, t9);
    for (std::size_t k = 0; k < nus.size(); ++k) {
      asym = std::max(asym, std::abs(d01[k].distance - d10[k].distance));
      tri = std::max(tri, d02[k].distance - d01[k].distance - d12[k].distance);
      self = std::max(self, std::abs(d00[k].distance));
      const Eigen::MatrixXd& z = d01[k].plan;
      const std::size_t n1 = f[0].circuit.size(), n2 = f[1].circuit.size();
      for (std::size_t p = 0; p < n1; ++p) conservation = std::max(conservation, std::abs(z.row(p).sum() - f[0].mass.mass[p]));
      for (std::size_t q = 0; q < n2; ++q) conservation = std::max(conservation, std::abs(z.col(q).sum() - f[1].mass.mass[q]));
      conservation = std::max(conservation, std::abs(z.sum() - f[0].mass.total - f[1].mass.total));
    }
  }
  c.check(asym <= 1e-8, "symmetry: max |d(x,y) - d(y,x)| = %.1e over 100 nine-qubit triples, 4 nus", asym);
  c.check(tri <= 1e-8, "triangle inequality: max violation %.1e", tri);
  c.check(self <= 1e-8, "d(x,x) max %.1e", self);
  c.check(conservation <= 1e-8, "transport-plan mass conservation error %.1e", conservation);
  c.check(seconds_since(t0) < 300, "property suite runtime %.1f s (< 300 s)", seconds_since(t0));
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

bool haar_integral() {
  Criterion c{"finite-sum vs Haar-integral shape distance"};
  Rng pick(7), rng(8);
  const auto types = param_types();
  double worst = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    const GateType ta = types[pick.uniform_int(types.size())], tb = types[pick.uniform_int(types.size())];
    const Gate a = random_placement(ta, 2, pick), b = random_placement(tb, 2, pick);
    const ShapeSolution s = shape_distance(a, b, 2);
    const double eps = s.distance;
    const double mc = s.swapped ? shape_integral_estimate(b, a, 2, 12, s.V, 1000, rng)
                                : shape_integral_estimate(a, b, 2, 12, s.V, 1000, rng);
    c.note(to_string(a) + " vs " + to_string(b) + ": finite sum " + std::to_string(eps) + ", integral " + std::to_string(mc));
    worst = std::max(worst, mc - eps);
  }
  c.check(worst < 1e-2, "max (integral - finite sum) over 20 pairs = %.2e (< 1e-2)", worst);
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

std::vector<RunLog> g_logs;  // every search run, for the jitter audit

RunLog logged_search(const ExperimentConfig& cfg) {
  RunLog log = run_search(cfg);
  g_logs.push_back(log);
  return log;
}

bool objectives() {
  Criterion c{"objectives at desk scale"};

  // QFT: three seeds, EI against random at equal budget.
  {
    ExperimentConfig cfg = ExperimentConfig::preset(ObjectiveKind::QFT);
    cfg.iterations = 30;
    int hits = 0;
    bool ordering = true;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto t0 = Clock::now();
      cfg.seed = seed;
      cfg.mode = SearchMode::ExpectedImprovement;
      const RunLog ei = logged_search(cfg);
      cfg.mode = SearchMode::Random;
      const RunLog rnd = logged_search(cfg);
      const double be = ei.best().value, br = rnd.best().value;
      hits += be >= 0.99;
      ordering = ordering && be >= br;
      c.note("QFT seed " + std::to_string(seed) + ": EI best " + std::to_string(be) + " (" +
             circuit_to_compact(ei.best().circuit) + "), random best " + std::to_string(br) + ", " +
             std::to_string(seconds_since(t0)) + " s");
    }
    c.check(hits >= 2, "QFT: best fidelity >= 0.99 in %d of 3 seeds (need 2)", hits);
    c.check(ordering, "QFT: EI best-so-far >= random at the final iteration in every seed");
  }

  // MaxCut: ansatz baselines, then one search seed against random.
  {
    const auto problems = maxcut_problems(9, 10, 0);
    const double reference[] = {0.746, 0.751, 0.762};
    for (int depth = 1; depth <= 3; ++depth) {
      const double v = maxcut_ansatz_baseline(problems, depth, 10, {});
      c.check(std::abs(v - reference[depth - 1]) <= 0.02, "MaxCut ansatz depth %d: %.4f (reference %.3f +- 0.02)", depth, v,
              reference[depth - 1]);
    }
    ExperimentConfig cfg = ExperimentConfig::preset(ObjectiveKind::MaxCut);
    cfg.iterations = 30;
    const auto t0 = Clock::now();
    const RunLog ei = logged_search(cfg);
    cfg.mode = SearchMode::Random;
    const RunLog rnd = logged_search(cfg);
    c.note("MaxCut search: EI best " + circuit_to_compact(ei.best().circuit) + ", " + std::to_string(seconds_since(t0)) + " s");
    c.check(ei.best().value >= 0.88, "MaxCut: EI best mean normalized value %.4f (>= 0.88)", ei.best().value);
    c.check(ei.best().value > rnd.best().value, "MaxCut: EI %.4f beats random %.4f at equal budget", ei.best().value,
            rnd.best().value);
  }

  // QGAN: divergence oracles and a 15-iteration search.
  {
    const std::vector<double> q = target_distribution();
    std::vector<double> point(8, 0.0);
    point[0] = 1;
    const double pm = kl_divergence(point, q), same = kl_divergence(q, q);
    c.check(std::abs(pm + std::log(q[0])) <= 1e-12 && std::abs(same) <= 1e-12,
            "QGAN oracles: point mass %.12f vs -log Q(0) %.12f, exact match %.1e", pm, -std::log(q[0]), same);
    ExperimentConfig cfg = ExperimentConfig::preset(ObjectiveKind::QGAN);
    cfg.iterations = 15;
    const auto t0 = Clock::now();
    const RunLog ei = logged_search(cfg);
    c.note("QGAN search: best " + circuit_to_compact(ei.best().circuit) + ", " + std::to_string(seconds_since(t0)) + " s");
    c.check(ei.best().value <= 0.05, "QGAN: best D_KL %.4f (<= 0.05)", ei.best().value);
  }
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

bool bo_internals() {
  Criterion c{"BO internals"};
  const GateDistanceTable& table = shared_gate_table(3);
  ObservationSet obs(table);
  Rng rng(55);
  for (int i = 0; i < 5; ++i) obs.add(random_massive(3, 5, rng), rng.uniform(0, 1));
  KernelHyperparams hp;
  hp.alpha = 0.8;
  hp.alpha_bar = 0.3;
  hp.beta = {0.04, 0.03, 0.02, 0.01};
  hp.beta_bar = {1.0, 2.0, 0.5, 1.5};
  hp.noise = 1e-4;
  const GpModel gp(obs, hp);
  const Eigen::MatrixXd inv = (kernel_matrix(obs.distances(), hp) + hp.noise * Eigen::MatrixXd::Identity(5, 5)).inverse();
  const Eigen::VectorXd r = obs.y_vector() - Eigen::VectorXd::Constant(5, obs.y_vector().mean());
  double err = 0;
  for (int qi = 0; qi < 10; ++qi) {
    const Circuit x = random_massive(3, 5, rng);
    const Eigen::VectorXd k = kernel_vector(obs.distances_to(x), hp);
    const double mean = obs.y_vector().mean() + k.dot(inv * r);
    const double var = std::max(hp.alpha + hp.alpha_bar - k.dot(inv * k), 0.0);
    const GpPrediction p = gp.predict(x);
    err = std::max({err, std::abs(p.mean - mean), std::abs(p.variance - var)});
  }
  c.check(err < 1e-8, "GP posterior vs dense inverse on 5 points: max error %.1e", err);

  Rng mc(99);
  const double mu = 0.2, sigma = 0.7, best = 0.5;
  const int n = 1000000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double v = std::max(mu + sigma * mc.normal() - best, 0.0);
    s += v;
    s2 += v * v;
  }
  const double m = s / n, se = std::sqrt((s2 / n - m * m) / n), ei = expected_improvement(mu, sigma, best);
  c.check(std::abs(ei - m) <= 3 * se, "EI closed form %.6f vs Monte Carlo %.6f (3 sigma = %.1e)", ei, m, 3 * se);

  if (g_logs.empty()) c.note("no experiment runs in this invocation; jitter audit skipped");
  int steps = 0, jittered = 0;
  bool audit = true;
  double worst = INFINITY;
  for (const RunLog& log : g_logs) {
    audit = audit && log.audit_passed();
    for (const auto& rec : log.records) {
      if (!rec.surrogate) continue;
      ++steps;
      jittered += rec.surrogate->jitter > 0;
      worst = std::min(worst, rec.surrogate->min_eigenvalue);
    }
  }
  c.check(audit, "jitter audit over %zu runs, %d surrogate fits (%d needed jitter, smallest eigenvalue %.2e)", g_logs.size(),
          steps, jittered, steps ? worst : 0.0);
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

bool embedding() {
  Criterion c{"template embedding and distance-performance trend"};
  const Eigen::MatrixXd d = template_distance_matrix(0.5, false, 1, shared_gate_table(4));
  const MdsResult r = mds_embed(d, 2);
  const auto nn = nearest_neighbors(r.coords, 2);
  const std::pair<int, int> similar[] = {{3, 4}, {5, 6}, {7, 8}, {11, 12}, {13, 14}, {16, 17}, {18, 19}};
  int found = 0;
  std::string missing;
  for (auto [i, j] : similar) {
    if (mutual_neighbors(nn, i - 1, j - 1)) ++found;
    else missing += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  c.check(found == 7, "MDS mutual top-2 pairs: %d of 7%s%s", found, missing.empty() ? "" : ", missing", missing.c_str());

  ScatterConfig sc;
  const auto t0 = Clock::now();
  const ScatterTable t = distance_vs_performance(sc, shared_gate_table(3));
  c.check(t.summary.trend_holds, "300 pairs: lowest-decile gap %.4f <= mean gap %.4f (%.0f s)", t.summary.low_decile_gap,
          t.summary.mean_gap, seconds_since(t0));
  std::printf("%s  %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<bool()>>> all = {
      {"gate-metric", gate_metric}, {"mub", mub},           {"circuit-metric", circuit_metric},
      {"haar-integral", haar_integral}, {"objectives", objectives}, {"bo-internals", bo_internals},
      {"embedding", embedding}};
  std::set<std::string> wanted(argv + 1, argv + argc);
  bool ok = true;
  for (const auto& [name, fn] : all) {
    if (!wanted.empty() && !wanted.count(name)) continue;
    try {
      ok = fn() && ok;
    } catch (const std::exception& e) {
      std::printf("FAIL  %s (exception: %s)\n", name.c_str(), e.what());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
