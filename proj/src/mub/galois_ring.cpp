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

#include "qnas/mub/galois_ring.hpp"

#include <stdexcept>
#include <string>

#include "qnas/core/errors.hpp"

namespace qnas {

namespace {

// Hensel lifts to Z4 of primitive binary polynomials, constant term first.
// For each, x itself has multiplicative order 2^n - 1 in GR(4, n).
const std::vector<std::vector<std::uint8_t>>& lifted_polynomials() {
  static const std::vector<std::vector<std::uint8_t>> table = {
      {3, 1},
      {1, 1, 1},
      {3, 1, 2, 1},
      {1, 3, 2, 0, 1},
      {3, 2, 3, 0, 0, 1},
      {1, 3, 0, 2, 0, 0, 1},
      {3, 1, 0, 0, 2, 0, 0, 1},
      {1, 2, 3, 1, 3, 2, 2, 0, 1},
      {3, 0, 2, 0, 3, 0, 0, 0, 0, 1},
  };
  return table;
}

}  // namespace

GaloisRing::GaloisRing(int n) : n_(n) {
  if (n < 1 || n > kMaxRingDegree) {
    throw ConfigurationError("no basic primitive polynomial configured for GR(4, " + std::to_string(n) + ")");
  }
  h_ = lifted_polynomials()[n - 1];
}

GrElement GaloisRing::one() const { return constant(1); }

GrElement GaloisRing::constant(int v) const {
  GrElement e;
  e.c[0] = static_cast<std::uint8_t>(((v % 4) + 4) % 4);
  return e;
}

GrElement GaloisRing::generator() const {
  if (n_ == 1) return one();
  GrElement e;
  e.c[1] = 1;
  return e;
}

GrElement GaloisRing::add(const GrElement& a, const GrElement& b) const {
  GrElement r;
  for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) & 3);
  return r;
}

GrElement GaloisRing::scale(const GrElement& a, int k) const {
  GrElement r;
  const int m = ((k % 4) + 4) % 4;
  for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] * m) & 3);
  return r;
}

GrElement GaloisRing::mul(const GrElement& a, const GrElement& b) const {
  std::array<int, 2 * kMaxRingDegree> prod{};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) prod[i + j] += a.c[i] * b.c[j];
  // Reduce by the monic h from the top degree down.
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    const int top = prod[k] & 3;
    prod[k] = 0;
    if (top == 0) continue;
    for (int i = 0; i < n_; ++i) prod[k - n_ + i] -= top * h_[i];
  }
  GrElement r;
  for (int i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint8_t>(((prod[i] % 4) + 4) % 4);
  return r;
}

GrElement GaloisRing::pow(GrElement a, std::uint64_t e) const {
  GrElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GrElement GaloisRing::frobenius(const GrElement& a) const {
  const GrElement x2 = mul(generator(), generator());
  GrElement r;
  GrElement power = one();  // x^{2i}
  for (int i = 0; i < n_; ++i) {
    r = add(r, scale(power, a.c[i]));
    power = mul(power, x2);
  }
  return r;
}

GrElement GaloisRing::frobenius_teichmuller(const GrElement& r) const {
  const auto t = teichmuller_set();
  const auto [ia, ib] = two_adic(r);
  const GrElement& a = t[ia];
  const GrElement& b = t[ib];
  return add(mul(a, a), scale(mul(b, b), 2));
}

int GaloisRing::trace(const GrElement& a) const {
  GrElement sum;
  GrElement term = a;
  for (int k = 0; k < n_; ++k) {
    sum = add(sum, term);
    term = frobenius(term);
  }
  for (int i = 1; i < n_; ++i) {
    if (sum.c[i] != 0) throw std::logic_error("trace left the base ring Z4");
  }
  return sum.c[0];
}

std::vector<GrElement> GaloisRing::teichmuller_set() const {
  const std::uint64_t q = std::uint64_t{1} << n_;
  std::vector<GrElement> t;
  t.reserve(q);
  t.push_back(zero());
  GrElement p = one();
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    t.push_back(p);
    p = mul(p, generator());
  }
  return t;
}

std::pair<int, int> GaloisRing::two_adic(const GrElement& r) const {
  // a is the Teichmuller element congruent to r mod 2; then 2b = r - a.
  const auto t = teichmuller_set();
  GrElement reduced;
  for (int i = 0; i < n_; ++i) reduced.c[i] = r.c[i] & 1;
  int ia = -1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    bool match = true;
    for (int i = 0; i < n_ && match; ++i) match = (t[k].c[i] & 1) == reduced.c[i];
    if (match) {
      ia = static_cast<int>(k);
      break;
    }
  }
  if (ia < 0) throw std::logic_error("Teichmuller set does not cover the residue field");
  const GrElement diff = add(r, scale(t[ia], 3));  // r - a, all coefficients even
  GrElement half;
  for (int i = 0; i < n_; ++i) half.c[i] = static_cast<std::uint8_t>(diff.c[i] >> 1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    bool match = true;
    for (int i = 0; i < n_ && match; ++i) match = (t[k].c[i] & 1) == (half.c[i] & 1);
    if (match) return {ia, static_cast<int>(k)};
  }
  throw std::logic_error("no Teichmuller element for the 2-adic digit");
}

std::uint64_t GaloisRing::generator_order() const {
  const GrElement g = generator();
  GrElement p = g;
  for (std::uint64_t k = 1; k <= (std::uint64_t{1} << (2 * n_)); ++k) {
    if (p == one()) return k;
    p = mul(p, g);
  }
  return 0;
}

std::vector<GrElement> GaloisRing::all_elements() const {
  if (n_ > 6) throw std::invalid_argument("all_elements limited to n <= 6");
  const std::size_t count = std::size_t{1} << (2 * n_);
  std::vector<GrElement> out(count);
  for (std::size_t v = 0; v < count; ++v) {
    for (int i = 0; i < n_; ++i) out[v].c[i] = static_cast<std::uint8_t>((v >> (2 * i)) & 3);
  }
  return out;
}

}  // namespace qnas
