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

#include <cstdint>
#include <span>
#include <vector>

#include "qnas/core/circuit.hpp"

namespace qnas {

/// Even mixture of N(0.5, 1) and N(3.5, 0.5^2) integrated over unit bins
/// centred on 0..7, truncated to [-0.5, 7.5) and renormalized.
std::vector<double> target_distribution();

/// sum_x p(x) log(p(x) / q(x)); terms with p(x) = 0 contribute nothing.
/// Throws std::invalid_argument if q(x) = 0 where p(x) > 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// |<x|U(params)|0>|^2 for every basis state x.
std::vector<double> output_distribution(const Circuit& c, std::span<const double> params);

struct QganConfig {
  int epochs = 200;
  int batch = 100;
  int dataset = 20000;         // real samples drawn once from the target
  double learning_rate = 1e-3;
  double init_range = 0.1;     // generator params uniform in [-r, r]
  double fd_step = 1e-5;
  double leaky_slope = 0.2;
  std::uint64_t seed = 0;
};

struct QganResult {
  double kl = 0.0;             // D_KL(generated || target), exact probabilities
  std::vector<double> params;
  std::vector<double> kl_trace;  // after each epoch
};

/// Small feed-forward classifier 1 -> 50 -> 20 -> 1, leaky ReLU hidden layers,
/// sigmoid output, trained with Adam on binary cross-entropy.
class Discriminator {
 public:
  Discriminator(double leaky_slope, std::uint64_t seed);

  /// Probability that a sample value is real.
  double operator()(double x) const;

  /// One Adam step on -mean log D(real) - mean log(1 - D(fake)); returns the loss.
  double train_step(std::span<const double> real, std::span<const double> fake, double lr);

  std::size_t parameter_count() const { return params_.size(); }

 private:
  double forward(double x, std::vector<double>* cache) const;
  void backward(double x, double dloss_dlogit, std::vector<double>& grad) const;

  double slope_;
  std::vector<double> params_;
  std::vector<double> m_, v_;
  int step_ = 0;
};

/// Samples are bin indices; the network sees them scaled to [0, 1].
double scale_sample(int bin, int n_bins);

/// Adversarial training of the circuit as generator; returns the final
/// generator's exact divergence from the target. Needs a 3-qubit circuit.
QganResult train_qgan(const Circuit& c, const QganConfig& cfg = {});

}  // namespace qnas
