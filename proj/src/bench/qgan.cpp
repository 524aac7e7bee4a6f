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

#include "qnas/bench/qgan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qnas/core/random.hpp"
#include "qnas/core/simulator.hpp"
#include "qnas/numerics/normal.hpp"

namespace qnas {

namespace {

constexpr int kBins = 8;
constexpr int kHidden1 = 50;
constexpr int kHidden2 = 20;

// Parameter layout: W1 (50), b1 (50), W2 (20x50), b2 (20), W3 (20), b3 (1).
constexpr std::size_t kW1 = 0;
constexpr std::size_t kB1 = kW1 + kHidden1;
constexpr std::size_t kW2 = kB1 + kHidden1;
constexpr std::size_t kB2 = kW2 + kHidden2 * kHidden1;
constexpr std::size_t kW3 = kB2 + kHidden2;
constexpr std::size_t kB3 = kW3 + kHidden2;
constexpr std::size_t kParams = kB3 + 1;

// Cache layout: z1, a1, z2, a2, logit.
constexpr std::size_t kZ1 = 0;
constexpr std::size_t kA1 = kZ1 + kHidden1;
constexpr std::size_t kZ2 = kA1 + kHidden1;
constexpr std::size_t kA2 = kZ2 + kHidden2;
constexpr std::size_t kLogit = kA2 + kHidden2;
constexpr std::size_t kCache = kLogit + 1;

double sigmoid(double z) { return z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z)); }

// log(sigmoid(z)) without overflow.
double log_sigmoid(double z) { return z >= 0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z)); }

double component_mass(double mean, double sd, double lo, double hi) {
  return normal_cdf((hi - mean) / sd) - normal_cdf((lo - mean) / sd);
}

}  // namespace

std::vector<double> target_distribution() {
  std::vector<double> q(kBins);
  for (int k = 0; k < kBins; ++k) {
    const double lo = k - 0.5, hi = k + 0.5;
    q[k] = 0.5 * component_mass(0.5, 1.0, lo, hi) + 0.5 * component_mass(3.5, 0.5, lo, hi);
  }
  const double total = std::accumulate(q.begin(), q.end(), 0.0);
  for (double& v : q) v /= total;
  return q;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("distributions differ in size");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) throw std::invalid_argument("reference has zero mass at bin " + std::to_string(i));
    d += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(d, 0.0);
}

std::vector<double> output_distribution(const Circuit& c, std::span<const double> params) {
  Eigen::MatrixXcd psi = basis_state(c.n_qubits(), 0);
  apply_circuit_inplace(c, params, psi);
  std::vector<double> p(static_cast<std::size_t>(psi.rows()));
  for (Eigen::Index x = 0; x < psi.rows(); ++x) p[x] = std::norm(psi(x, 0));
  return p;
}

double scale_sample(int bin, int n_bins) { return n_bins > 1 ? static_cast<double>(bin) / (n_bins - 1) : 0.0; }

Discriminator::Discriminator(double leaky_slope, std::uint64_t seed)
    : slope_(leaky_slope), params_(kParams, 0.0), m_(kParams, 0.0), v_(kParams, 0.0) {
  Rng rng(seed);
  // Glorot-uniform weights, zero biases.
  auto fill = [&](std::size_t at, std::size_t count, int fan_in, int fan_out) {
    const double a = std::sqrt(6.0 / (fan_in + fan_out));
    for (std::size_t i = 0; i < count; ++i) params_[at + i] = rng.uniform(-a, a);
  };
  fill(kW1, kHidden1, 1, kHidden1);
  fill(kW2, kHidden2 * kHidden1, kHidden1, kHidden2);
  fill(kW3, kHidden2, kHidden2, 1);
}

double Discriminator::forward(double x, std::vector<double>* cache) const {
  double h1[kHidden1], h2[kHidden2];
  for (int i = 0; i < kHidden1; ++i) {
    const double z = params_[kW1 + i] * x + params_[kB1 + i];
    h1[i] = z > 0 ? z : slope_ * z;
    if (cache) (*cache)[kZ1 + i] = z, (*cache)[kA1 + i] = h1[i];
  }
  for (int j = 0; j < kHidden2; ++j) {
    double z = params_[kB2 + j];
    for (int i = 0; i < kHidden1; ++i) z += params_[kW2 + j * kHidden1 + i] * h1[i];
    h2[j] = z > 0 ? z : slope_ * z;
    if (cache) (*cache)[kZ2 + j] = z, (*cache)[kA2 + j] = h2[j];
  }
  double logit = params_[kB3];
  for (int j = 0; j < kHidden2; ++j) logit += params_[kW3 + j] * h2[j];
  if (cache) (*cache)[kLogit] = logit;
  return logit;
}

double Discriminator::operator()(double x) const { return sigmoid(forward(x, nullptr)); }

void Discriminator::backward(double x, double g_logit, std::vector<double>& grad) const {
  std::vector<double> cache(kCache);
  forward(x, &cache);
  grad[kB3] += g_logit;
  double g2[kHidden2];
  for (int j = 0; j < kHidden2; ++j) {
    grad[kW3 + j] += g_logit * cache[kA2 + j];
    g2[j] = g_logit * params_[kW3 + j] * (cache[kZ2 + j] > 0 ? 1.0 : slope_);
  }
  double g1[kHidden1] = {};
  for (int j = 0; j < kHidden2; ++j) {
    grad[kB2 + j] += g2[j];
    for (int i = 0; i < kHidden1; ++i) {
      grad[kW2 + j * kHidden1 + i] += g2[j] * cache[kA1 + i];
      g1[i] += g2[j] * params_[kW2 + j * kHidden1 + i];
    }
  }
  for (int i = 0; i < kHidden1; ++i) {
    const double gz = g1[i] * (cache[kZ1 + i] > 0 ? 1.0 : slope_);
    grad[kB1 + i] += gz;
    grad[kW1 + i] += gz * x;
  }
}

double Discriminator::train_step(std::span<const double> real, std::span<const double> fake, double lr) {
  if (real.empty() || fake.empty()) throw std::invalid_argument("empty discriminator batch");
  std::vector<double> grad(kParams, 0.0);
  double loss = 0.0;
  // d/dz [-log sigmoid(z)] = sigmoid(z) - 1;  d/dz [-log(1 - sigmoid(z))] = sigmoid(z).
  for (double x : real) {
    const double z = forward(x, nullptr);
    loss -= log_sigmoid(z) / real.size();
    backward(x, (sigmoid(z) - 1.0) / real.size(), grad);
  }
  for (double x : fake) {
    const double z = forward(x, nullptr);
    loss -= log_sigmoid(-z) / fake.size();
    backward(x, sigmoid(z) / fake.size(), grad);
  }
  constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  ++step_;
  const double c1 = 1.0 - std::pow(b1, step_), c2 = 1.0 - std::pow(b2, step_);
  for (std::size_t k = 0; k < kParams; ++k) {
    m_[k] = b1 * m_[k] + (1 - b1) * grad[k];
    v_[k] = b2 * v_[k] + (1 - b2) * grad[k] * grad[k];
    params_[k] -= lr * (m_[k] / c1) / (std::sqrt(v_[k] / c2) + eps);
  }
  return loss;
}

QganResult train_qgan(const Circuit& c, const QganConfig& cfg) {
  if (c.n_qubits() != 3) throw std::invalid_argument("the QGAN generator needs 3 qubits, got " + std::to_string(c.n_qubits()));
  if (cfg.epochs < 0 || cfg.batch < 1 || cfg.dataset < cfg.batch || cfg.learning_rate <= 0)
    throw std::invalid_argument("invalid QGAN training settings");
  const std::vector<double> q = target_distribution();
  Rng rng = Rng::derive(cfg.seed, 0);
  Discriminator disc(cfg.leaky_slope, Rng::derive(cfg.seed, 1).next());

  std::vector<int> data(cfg.dataset);
  for (int& x : data) x = static_cast<int>(rng.categorical(q));

  const int n_params = c.param_count();
  std::vector<double> theta(n_params);
  for (double& t : theta) t = rng.uniform(-cfg.init_range, cfg.init_range);
  std::vector<double> m(n_params, 0.0), v(n_params, 0.0);
  int gen_step = 0;

  QganResult res;
  const int steps = cfg.dataset / cfg.batch;
  std::vector<double> real(cfg.batch), fake(cfg.batch);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(data.begin(), data.end(), std::mt19937_64(rng.next()));
    for (int s = 0; s < steps; ++s) {
      const std::vector<double> p = output_distribution(c, theta);
      std::vector<bool> drawn(kBins, false);
      for (int i = 0; i < cfg.batch; ++i) {
        real[i] = scale_sample(data[s * cfg.batch + i], kBins);
        const int g = static_cast<int>(rng.categorical(p));
        drawn[g] = true;
        fake[i] = scale_sample(g, kBins);
      }
      disc.train_step(real, fake, cfg.learning_rate);
      if (n_params == 0) continue;

      // Generator loss: -sum over the drawn bins of P_theta(x) log D(x).
      double log_d[kBins];
      for (int x = 0; x < kBins; ++x) log_d[x] = drawn[x] ? std::log(std::max(disc(scale_sample(x, kBins)), 1e-300)) : 0.0;
      auto gen_loss = [&](std::span<const double> t) {
        const std::vector<double> pt = output_distribution(c, t);
        double l = 0.0;
        for (int x = 0; x < kBins; ++x) l -= pt[x] * log_d[x];
        return l;
      };
      std::vector<double> grad(n_params), probe = theta;
      for (int k = 0; k < n_params; ++k) {
        probe[k] = theta[k] + cfg.fd_step;
        const double up = gen_loss(probe);
        probe[k] = theta[k] - cfg.fd_step;
        const double down = gen_loss(probe);
        probe[k] = theta[k];
        grad[k] = (up - down) / (2 * cfg.fd_step);
      }
      constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
      ++gen_step;
      const double c1 = 1.0 - std::pow(b1, gen_step), c2 = 1.0 - std::pow(b2, gen_step);
      for (int k = 0; k < n_params; ++k) {
        m[k] = b1 * m[k] + (1 - b1) * grad[k];
        v[k] = b2 * v[k] + (1 - b2) * grad[k] * grad[k];
        theta[k] -= cfg.learning_rate * (m[k] / c1) / (std::sqrt(v[k] / c2) + eps);
      }
    }
    res.kl_trace.push_back(kl_divergence(output_distribution(c, theta), q));
  }
  res.params = theta;
  res.kl = kl_divergence(output_distribution(c, theta), q);
  return res;
}

}  // namespace qnas
