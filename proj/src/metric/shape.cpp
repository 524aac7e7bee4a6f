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

#include "qnas/metric/shape.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qnas/core/simulator.hpp"
#include "qnas/mub/mub.hpp"

namespace qnas {

namespace {

using cd = std::complex<double>;

std::vector<double> angle_grid(int samples) {
  if (samples < 1) throw std::invalid_argument("shape distance needs at least one angle sample");
  std::vector<double> theta(samples);
  for (int t = 0; t < samples; ++t) theta[t] = 2 * std::numbers::pi * t / samples;
  return theta;
}

// Per-angle data shared by every restart: P_t = U1(theta_t) Psi and
// B_t = U2(theta_t).
struct Orbits {
  std::vector<Eigen::MatrixXcd> p;
  std::vector<Eigen::MatrixXcd> b;
  Eigen::Index dim = 0;
  Eigen::Index anchors = 0;
};

Orbits make_orbits(const Gate& g1, const Gate& g2, int n_qubits, int samples) {
  const MubSet& mub = shared_mub(n_qubits);
  const Eigen::MatrixXcd psi = mub.anchor_matrix();
  Orbits o;
  o.dim = psi.rows();
  o.anchors = psi.cols();
  for (double th : angle_grid(samples)) {
    o.p.push_back(gate_unitary(g1, th, n_qubits) * psi);
    o.b.push_back(gate_unitary(g2, th, n_qubits));
  }
  return o;
}

// Column-wise <q_k | w_k>.
Eigen::VectorXcd column_dots(const Eigen::MatrixXcd& q, const Eigen::MatrixXcd& w) {
  return (q.conjugate().cwiseProduct(w)).colwise().sum().transpose();
}

double objective_from(const Eigen::MatrixXcd& c, const Eigen::MatrixXd& alpha) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < c.rows(); ++k)
    for (Eigen::Index t = 0; t < c.cols(); ++t) s += 1.0 - (std::polar(1.0, alpha(k, t)) * c(k, t)).real();
  return s / static_cast<double>(c.size());
}

Eigen::MatrixXcd phase_factors(const Eigen::MatrixXd& alpha) {
  Eigen::MatrixXcd e(alpha.rows(), alpha.cols());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) e.data()[i] = std::polar(1.0, alpha.data()[i]);
  return e;
}

// Coordinate descent state. W_t = V P_t and Q_t = B_t M are kept in sync
// with V and M so each update costs a few d x d x K products per angle.
class Descent {
 public:
  Descent(const Orbits& o, const Eigen::MatrixXcd& v0) : o_(o), T_(static_cast<int>(o.p.size())) {
    v_ = v0;
    w_.resize(T_);
    q_.resize(T_);
    refresh_w();
    alpha_ = Eigen::MatrixXd::Zero(o.anchors, T_);
    m_ = Eigen::MatrixXcd::Zero(o.dim, o.anchors);
    m_.row(0).setOnes();  // fallback if a closed-form column vanishes
    update_m();
  }

  double objective() const { return objective_from(overlaps(), alpha_); }

  void update_alpha() {
    const Eigen::MatrixXcd c = overlaps();
    for (Eigen::Index i = 0; i < c.size(); ++i) alpha_.data()[i] = -std::arg(c.data()[i]);
  }

  // argmax over unitary V of Re sum e^{i alpha} <B_t m_k | V p_tk>.
  void update_v() {
    const Eigen::MatrixXcd e = phase_factors(alpha_);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(o_.dim, o_.dim);
    for (int t = 0; t < T_; ++t) x.noalias() += o_.p[t] * e.col(t).asDiagonal() * q_[t].adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    v_ = svd.matrixV() * svd.matrixU().adjoint();
    refresh_w();
  }

  // Column-wise argmax of the same sum over unit vectors m_k.
  void update_m() {
    const Eigen::MatrixXcd e = phase_factors(alpha_);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(o_.dim, o_.anchors);
    for (int t = 0; t < T_; ++t) s.noalias() += o_.b[t].adjoint() * (w_[t] * e.col(t).asDiagonal());
    for (Eigen::Index k = 0; k < s.cols(); ++k) {
      const double norm = s.col(k).norm();
      if (norm > 1e-14) m_.col(k) = s.col(k) / norm;
    }
    for (int t = 0; t < T_; ++t) q_[t].noalias() = o_.b[t] * m_;
  }

  ShapeSolution into_solution() && {
    ShapeSolution s;
    s.V = std::move(v_);
    s.M = std::move(m_);
    s.alpha = std::move(alpha_);
    return s;
  }

 private:
  // c(k, t) = <B_t m_k | V P_t e_k>.
  Eigen::MatrixXcd overlaps() const {
    Eigen::MatrixXcd c(o_.anchors, T_);
    for (int t = 0; t < T_; ++t) c.col(t) = column_dots(q_[t], w_[t]);
    return c;
  }

  void refresh_w() {
    for (int t = 0; t < T_; ++t) w_[t].noalias() = v_ * o_.p[t];
  }

  const Orbits& o_;
  int T_;
  Eigen::MatrixXcd v_, m_;
  Eigen::MatrixXd alpha_;
  std::vector<Eigen::MatrixXcd> w_, q_;
};

ShapeSolution descend(const Orbits& o, const ShapeConfig& cfg, const Eigen::MatrixXcd& v0) {
  Descent state(o, v0);
  std::vector<double> trace{state.objective()};
  int iterations = 0;
  bool converged = false;
  for (int it = 0; it < cfg.max_iters; ++it) {
    const double before = trace.back();
    state.update_alpha();
    trace.push_back(state.objective());
    state.update_v();
    trace.push_back(state.objective());
    state.update_alpha();
    trace.push_back(state.objective());
    state.update_m();
    trace.push_back(state.objective());
    iterations = it + 1;
    if (before - trace.back() < cfg.tol) {
      converged = true;
      break;
    }
  }
  ShapeSolution sol = std::move(state).into_solution();
  sol.trace = std::move(trace);
  sol.iterations = iterations;
  sol.converged = converged;
  sol.distance = std::max(0.0, sol.trace.back());
  return sol;
}

void check_dims(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 6) {
    throw std::invalid_argument("shape distance is computed on at most 6 qubits, got " + std::to_string(n_qubits));
  }
}

}  // namespace

ShapeSolution shape_descent(const Gate& g1, const Gate& g2, int n_qubits, const ShapeConfig& cfg,
                            const Eigen::MatrixXcd& v0) {
  check_dims(n_qubits);
  if (!g1.parametrized() || !g2.parametrized()) {
    throw std::invalid_argument("shape descent needs two parametrized gates");
  }
  return descend(make_orbits(g1, g2, n_qubits, cfg.samples), cfg, v0);
}

ShapeSolution shape_distance(const Gate& g1, const Gate& g2, int n_qubits, const ShapeConfig& cfg) {
  check_dims(n_qubits);
  validate_gate(g1, n_qubits);
  validate_gate(g2, n_qubits);
  ShapeSolution out;
  if (!g1.parametrized() && !g2.parametrized()) return out;
  if (g1.parametrized() != g2.parametrized()) {
    out.distance = std::numeric_limits<double>::infinity();
    return out;
  }
  // The anchors sit on the first gate only, so the two orientations can settle
  // in different minima; both are valid alignments and the smaller one wins.
  bool have = false;
  for (const bool swapped : {false, true}) {
    const Orbits o = swapped ? make_orbits(g2, g1, n_qubits, cfg.samples) : make_orbits(g1, g2, n_qubits, cfg.samples);
    Rng rng(cfg.seed);
    for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
      const Eigen::MatrixXcd v0 =
          r == 0 ? Eigen::MatrixXcd::Identity(o.dim, o.dim) : haar_unitary(static_cast<int>(o.dim), rng);
      ShapeSolution sol = descend(o, cfg, v0);
      if (!have || sol.distance < out.distance) {
        out = std::move(sol);
        out.swapped = swapped;
        have = true;
      }
    }
  }
  return out;
}

double shape_objective(const Gate& g1, const Gate& g2, int n_qubits, int samples, const Eigen::MatrixXcd& V,
                       const Eigen::MatrixXcd& M, const Eigen::MatrixXd& alpha) {
  check_dims(n_qubits);
  const MubSet& mub = shared_mub(n_qubits);
  const Eigen::MatrixXcd psi = mub.anchor_matrix();
  const auto theta = angle_grid(samples);
  double s = 0.0;
  for (int t = 0; t < samples; ++t) {
    const Eigen::MatrixXcd lhs = V * gate_unitary(g1, theta[t], n_qubits) * psi;
    const Eigen::MatrixXcd rhs = gate_unitary(g2, theta[t], n_qubits) * M;
    for (Eigen::Index k = 0; k < psi.cols(); ++k) {
      s += (std::polar(1.0, alpha(k, t)) * lhs.col(k) - rhs.col(k)).squaredNorm();
    }
  }
  return s / (2.0 * static_cast<double>(psi.cols()) * samples);
}

double shape_integral_estimate(const Gate& g1, const Gate& g2, int n_qubits, int samples,
                               const Eigen::MatrixXcd& V, int n_states, Rng& rng) {
  check_dims(n_qubits);
  if (n_states < 1) throw std::invalid_argument("need at least one sample state");
  const auto theta = angle_grid(samples);
  // W_t = U2(theta_t)^dagger V U1(theta_t); |<U2 phi|V U1 psi>| = |<phi|W_t psi>|.
  std::vector<Eigen::MatrixXcd> w;
  for (double th : theta) {
    w.push_back(gate_unitary(g2, th, n_qubits).adjoint() * V * gate_unitary(g1, th, n_qubits));
  }
  const int d = 1 << n_qubits;
  double total = 0.0;
  for (int s = 0; s < n_states; ++s) {
    const Eigen::VectorXcd psi = haar_state(d, rng);
    std::vector<Eigen::VectorXcd> images;
    for (const auto& wt : w) images.push_back(wt * psi);
    Eigen::VectorXcd phi = images[0];
    double value = 0.0;
    for (int it = 0; it < 100; ++it) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d);
      double fit = 0.0;
      for (const auto& im : images) {
        const cd c = phi.dot(im);
        fit += std::abs(c);
        const double a = std::abs(c);
        acc += (a > 1e-15 ? std::conj(c) / a : cd(1.0)) * im;
      }
      fit /= samples;
      const double norm = acc.norm();
      if (norm < 1e-15) {
        value = fit;
        break;
      }
      phi = acc / norm;
      if (it > 0 && fit - value < 1e-12) {
        value = std::max(value, fit);
        break;
      }
      value = fit;
    }
    total += 1.0 - value;
  }
  return total / n_states;
}

}  // namespace qnas
