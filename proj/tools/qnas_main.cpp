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

// Command-line driver: architecture search and the metric/benchmark utilities.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qnas/bench/ansatz.hpp"
#include "qnas/bench/objective.hpp"
#include "qnas/core/circuit_json.hpp"
#include "qnas/core/errors.hpp"
#include "qnas/core/random.hpp"
#include "qnas/harness/config.hpp"
#include "qnas/harness/mds.hpp"
#include "qnas/harness/run_log.hpp"
#include "qnas/harness/scatter.hpp"
#include "qnas/harness/search.hpp"
#include "qnas/metric/gate_table.hpp"
#include "qnas/mub/mub.hpp"

namespace fs = std::filesystem;
using namespace qnas;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Gate parse_gate_arg(const std::string& s, int n) {
  const Circuit c = circuit_from_compact(std::to_string(n) + "|" + s);
  if (c.size() != 1) throw std::invalid_argument("expected one gate like RX:0 or CRZ:0-1, got \"" + s + "\"");
  return c[0];
}

int cmd_search(const std::string& config_path, const std::string& baseline, int seed_override, int trials_override,
               const std::string& out_override, bool quiet) {
  ExperimentConfig cfg = load_experiment_config(config_path);
  if (!baseline.empty()) cfg.mode = parse_search_mode(baseline);
  if (seed_override >= 0) cfg.seed = seed_override;
  if (trials_override > 0) cfg.trials = trials_override;
  if (!out_override.empty()) cfg.output_dir = out_override;
  fs::create_directories(cfg.output_dir);

  const std::uint64_t first = cfg.seed;
  for (int t = 0; t < cfg.trials; ++t) {
    cfg.seed = first + t;
    const RunLog log = run_search(cfg, [&](const IterationRecord& r) {
      if (quiet) return;
      std::printf("seed %llu  #%-3d %-6s value %.6f  best %.6f  (%.1fs)\n", static_cast<unsigned long long>(cfg.seed),
                  r.iteration, r.source.c_str(), r.value, r.best_so_far, r.wall_time);
      std::fflush(stdout);
    });
    const std::string stem = objective_name(cfg.objective.kind) + "_" + mode_name(cfg.mode) + "_seed" + std::to_string(cfg.seed);
    log.save(cfg.output_dir / (stem + ".json"));
    write_text(cfg.output_dir / (stem + ".csv"), log.to_csv());
    std::printf("seed %llu best %.6f  %s  audit %s  -> %s\n", static_cast<unsigned long long>(cfg.seed),
                log.best().value, circuit_to_compact(log.best().circuit).c_str(), log.audit_passed() ? "ok" : "FAILED",
                (cfg.output_dir / (stem + ".json")).string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum architecture search with an optimal-transport circuit metric"};
  app.require_subcommand(1);

  auto* search = app.add_subcommand("search", "Run Bayesian-optimization (or random) architecture search");
  std::string config_path, baseline, out_dir;
  int seed = -1, trials = 0;
  bool quiet = false;
  search->add_option("--config", config_path, "Experiment config JSON")->required()->check(CLI::ExistingFile);
  search->add_option("--baseline", baseline, "Search mode override: ei or random");
  search->add_option("--seed", seed, "First seed (overrides the config)");
  search->add_option("--trials", trials, "Number of seeds (overrides the config)");
  search->add_option("--out", out_dir, "Output directory (overrides the config)");
  search->add_flag("--quiet", quiet, "Only print per-seed summaries");

  auto* config = app.add_subcommand("config", "Print the default experiment config for an objective");
  std::string kind = "qft";
  config->add_option("--kind", kind, "qft, maxcut or qgan");

  auto* gate = app.add_subcommand("gate-dist", "Gate distances (core, shape, combined)");
  int gate_qubits = 2;
  std::string g1, g2;
  bool full_table = false;
  gate->add_option("--qubits", gate_qubits, "Number of qubits of the circuit space");
  gate->add_option("--gate1", g1, "First gate, e.g. RZ:0");
  gate->add_option("--gate2", g2, "Second gate, e.g. CRY:0-1");
  gate->add_flag("--table", full_table, "Print the whole table as CSV");

  auto* circ = app.add_subcommand("circuit-dist", "Optimal-transport distance between two circuit JSON files");
  std::string ca, cb;
  std::vector<double> nus = {0.1, 0.2, 0.4, 0.8};
  circ->add_option("a", ca)->required()->check(CLI::ExistingFile);
  circ->add_option("b", cb)->required()->check(CLI::ExistingFile);
  circ->add_option("--nu", nus, "Structural weights");

  auto* mub = app.add_subcommand("mub", "Mutually unbiased bases and the 2-design check");
  int mub_qubits = 2, mub_samples = 100;
  bool verify = false;
  mub->add_option("--qubits", mub_qubits);
  mub->add_flag("--verify", verify, "Check orthonormality, unbiasedness and Haar averages");
  mub->add_option("--samples", mub_samples, "Random unitaries for the Haar-average check");

  auto* obj = app.add_subcommand("objective", "Evaluate a circuit JSON against a benchmark objective");
  std::string obj_circuit, obj_config;
  obj->add_option("circuit", obj_circuit)->required()->check(CLI::ExistingFile);
  obj->add_option("--config", obj_config, "Experiment config JSON (its objective section is used)");
  obj->add_option("--kind", kind, "qft, maxcut or qgan (preset settings)");

  auto* mds = app.add_subcommand("mds", "MDS embedding of the 19 catalog templates");
  double mds_nu = 0.5;
  int mds_depth = 1, mds_dims = 2;
  bool mds_normalized = false;
  std::string mds_out;
  mds->add_option("--nu", mds_nu);
  mds->add_option("--depth", mds_depth);
  mds->add_option("--dims", mds_dims);
  mds->add_flag("--normalized", mds_normalized, "Use normalized distances");
  mds->add_option("--out", mds_out, "Write coordinates CSV here");

  auto* scatter = app.add_subcommand("scatter", "Circuit distance versus trained-QFT performance gap");
  ScatterConfig sc;
  std::string scatter_out;
  scatter->add_option("--pairs", sc.pairs);
  scatter->add_option("--qubits", sc.n_qubits);
  scatter->add_option("--max-gates", sc.max_gates);
  scatter->add_option("--nu", sc.nu);
  scatter->add_flag("--normalized", sc.normalized);
  scatter->add_option("--seed", sc.seed);
  scatter->add_option("--out", scatter_out, "Write the rows as CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*search) return cmd_search(config_path, baseline, seed, trials, out_dir, quiet);

    if (*config) {
      std::cout << to_json(ExperimentConfig::preset(parse_objective_kind(kind))).dump(2) << '\n';
      return 0;
    }

    if (*gate) {
      const GateDistanceTable& table = shared_gate_table(gate_qubits);
      if (full_table || g1.empty() || g2.empty()) {
        std::cout << table.to_csv();
        return 0;
      }
      const GatePairDistance d = table.lookup(parse_gate_arg(g1, gate_qubits), parse_gate_arg(g2, gate_qubits));
      std::printf("d_core %.6f  d_shape %.6f  d_gate %.6f\n", d.core, d.shape, d.gate);
      return 0;
    }

    if (*circ) {
      const Circuit a = load_circuit(ca), b = load_circuit(cb);
      if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("circuits act on different numbers of qubits");
      const GateDistanceTable& table = shared_gate_table(a.n_qubits());
      const auto res = ot_distances(make_features(a), make_features(b), nus, table);
      std::printf("nu,distance,normalized\n");
      for (std::size_t i = 0; i < nus.size(); ++i) std::printf("%g,%.6f,%.6f\n", nus[i], res[i].distance, res[i].normalized);
      return 0;
    }

    if (*mub) {
      const MubSet m(mub_qubits);
      std::printf("d = %d, %d bases, %zu anchors\n", m.dim(), m.num_bases(), m.num_anchors());
      if (!verify) return 0;
      const Eigen::MatrixXcd anchors = m.anchor_matrix();
      double ortho = 0, unbiased = 0;
      const int d = m.dim();
      for (int a = 0; a < m.num_bases(); ++a) {
        for (int b = a; b < m.num_bases(); ++b) {
          const Eigen::MatrixXcd g = anchors.middleCols(a * d, d).adjoint() * anchors.middleCols(b * d, d);
          if (a == b) {
            ortho = std::max(ortho, (g - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff());
          } else {
            unbiased = std::max(unbiased, (g.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff());
          }
        }
      }
      Rng rng(0);
      double haar = 0;
      for (int s = 0; s < mub_samples; ++s) {
        const Eigen::MatrixXcd u = haar_unitary(d, rng);
        haar = std::max(haar, std::abs(haar_average_fidelity(u, m) - haar_average_fidelity_exact(u)));
      }
      std::printf("orthonormality error %.3e\nunbiasedness error %.3e\nHaar-average error %.3e (%d unitaries)\n", ortho,
                  unbiased, haar, mub_samples);
      return ortho < 1e-10 && unbiased < 1e-10 && haar < 1e-9 ? 0 : 1;
    }

    if (*obj) {
      const ObjectiveSpec spec = obj_config.empty() ? ObjectiveSpec::preset(parse_objective_kind(kind))
                                                    : load_experiment_config(obj_config).objective;
      const Objective o(spec);
      std::printf("%s %.6f\n", objective_name(spec.kind).c_str(), o.evaluate(load_circuit(obj_circuit)));
      return 0;
    }

    if (*mds) {
      const GateDistanceTable& table = shared_gate_table(4);
      const Eigen::MatrixXd d = template_distance_matrix(mds_nu, mds_normalized, mds_depth, table);
      const MdsResult r = mds_embed(d, mds_dims);
      std::string csv = "template";
      for (int k = 0; k < mds_dims; ++k) csv += ",x" + std::to_string(k + 1);
      csv += '\n';
      for (Eigen::Index i = 0; i < r.coords.rows(); ++i) {
        csv += std::to_string(i + 1);
        for (int k = 0; k < mds_dims; ++k) csv += "," + std::to_string(r.coords(i, k));
        csv += '\n';
      }
      if (mds_out.empty()) std::cout << csv;
      else write_text(mds_out, csv);
      const auto nn = nearest_neighbors(r.coords, 2);
      std::printf("mutual top-2 neighbor pairs:");
      for (int i = 0; i < kTemplateCount; ++i)
        for (int j = i + 1; j < kTemplateCount; ++j)
          if (mutual_neighbors(nn, i, j)) std::printf(" (%d,%d)", i + 1, j + 1);
      std::printf("\n");
      return 0;
    }

    if (*scatter) {
      const ScatterTable t = distance_vs_performance(sc, shared_gate_table(sc.n_qubits));
      if (!scatter_out.empty()) write_text(scatter_out, t.to_csv());
      else std::cout << t.to_csv();
      std::printf("pairs %zu  mean gap %.4f  lowest-decile gap %.4f  trend %s\n", t.rows.size(), t.summary.mean_gap,
                  t.summary.low_decile_gap, t.summary.trend_holds ? "holds" : "does not hold");
      return 0;
    }
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
