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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnas/bo/gp.hpp"
#include "qnas/core/circuit.hpp"

namespace qnas {

/// Diagnostics of the surrogate fitted before an acquisition step.
struct SurrogateRecord {
  KernelHyperparams hp;
  double jitter = 0.0;
  double min_eigenvalue = 0.0;
  double audit_threshold = 0.0;
  double expected_improvement = 0.0;
  int acquisition_evaluations = 0;
  int acquisition_discarded = 0;

  /// The diagonal actually added (noise + jitter) covers any negative
  /// eigenvalue of the kernel matrix.
  bool audit_passed() const { return min_eigenvalue + hp.noise + jitter >= 0.0; }
};

struct IterationRecord {
  int iteration = 0;     // 0-based over all evaluations, initial samples first
  std::string source;    // "init", "ei" or "random"
  Circuit circuit;
  double value = 0.0;    // objective units
  double best_so_far = 0.0;
  double wall_time = 0.0;  // seconds since the run started
  int failures = 0;        // objective failures resampled before this record
  std::optional<SurrogateRecord> surrogate;
};

struct RunLog {
  std::string objective;
  bool maximize = true;
  std::uint64_t seed = 0;
  std::string mode;
  std::vector<IterationRecord> records;

  /// Appends with best_so_far filled in from the previous records.
  void append(IterationRecord r);

  const IterationRecord& best() const;
  std::vector<double> best_trace() const;
  bool audit_passed() const;
  int failures() const;

  nlohmann::json to_json() const;
  static RunLog from_json(const nlohmann::json& j);

  /// Header line "# objective=...,maximize=...,seed=...,mode=..." then one
  /// row per record. Doubles are written with 17 significant digits.
  std::string to_csv() const;
  static RunLog from_csv(const std::string& text);

  void save(const std::filesystem::path& json_path) const;
  static RunLog load(const std::filesystem::path& json_path);
};

/// Compact single-field circuit form, e.g. "3|RX:0;CRZ:2-3".
std::string circuit_to_compact(const Circuit& c);
Circuit circuit_from_compact(const std::string& s);

}  // namespace qnas
