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

#include <array>
#include <cstdint>
#include <vector>

namespace qnas {

inline constexpr int kMaxRingDegree = 9;

/// Element of GR(4, n) as coefficients of 1, x, ..., x^{n-1} over Z4.
struct GrElement {
  std::array<std::uint8_t, kMaxRingDegree> c{};
  friend bool operator==(const GrElement&, const GrElement&) = default;
};

/// GR(4, n) = Z4[x] / (h(x)) with h a monic basic primitive polynomial whose
/// root x is the Teichmuller generator (x^{2^n - 1} = 1).
class GaloisRing {
 public:
  /// Throws ConfigurationError outside 1 <= n <= 9.
  explicit GaloisRing(int n);

  int degree() const { return n_; }
  /// Coefficients of h, constant term first, length n + 1.
  const std::vector<std::uint8_t>& modulus() const { return h_; }

  GrElement zero() const { return {}; }
  GrElement one() const;
  /// The generator of the Teichmuller set (x, or 1 when n = 1).
  GrElement generator() const;
  GrElement constant(int v) const;

  GrElement add(const GrElement& a, const GrElement& b) const;
  GrElement mul(const GrElement& a, const GrElement& b) const;
  GrElement scale(const GrElement& a, int k) const;
  GrElement pow(GrElement a, std::uint64_t e) const;

  /// Frobenius sum c_i x^i -> sum c_i x^{2i}.
  GrElement frobenius(const GrElement& a) const;
  /// Frobenius through the 2-adic form: a + 2b -> a^2 + 2 b^2 with a, b
  /// Teichmuller. Used to cross-check frobenius().
  GrElement frobenius_teichmuller(const GrElement& a) const;

  /// Z4-valued trace sum_{k<n} sigma^k(a).
  int trace(const GrElement& a) const;

  /// {0, 1, xi, ..., xi^{2^n - 2}} in that order.
  std::vector<GrElement> teichmuller_set() const;

  /// Unique (a, b) in T x T with r = a + 2b, as indices into teichmuller_set().
  std::pair<int, int> two_adic(const GrElement& r) const;

  /// Multiplicative order of the generator.
  std::uint64_t generator_order() const;

  /// All 4^n elements, n <= 6 (for exhaustive tests).
  std::vector<GrElement> all_elements() const;

 private:
  int n_;
  std::vector<std::uint8_t> h_;
};

}  // namespace qnas
