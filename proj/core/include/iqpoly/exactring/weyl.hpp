// Copyright 2026 The iqpoly Authors.
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

#include <cstddef>
#include <string>
#include <vector>

#include "iqpoly/exactring/laurent_poly.hpp"

namespace iqpoly {

/// Signed permutation of {1..d}, i.e. an element of Z_2^d x| S_d.
///
/// Equivalently a bijection w of {1..2d} commuting with r -> r' = 2d+1-r.
/// It acts by f(x_1, ..., x_d) -> f(x_{w(1)}, ..., x_{w(d)}), which is a left
/// action: (w1 * w2).f = w1.(w2.f) with (w1 * w2)(k) = w1(w2(k)).
class WeylElement {
 public:
  WeylElement() = default;
  /// Identity of W for rank d.
  explicit WeylElement(int d);
  /// perm holds sigma(1..d) (1-based), signs are +1 or -1.
  WeylElement(std::vector<int> perm, std::vector<int> signs);

  /// Images of 1..d inside 1..2d.
  static WeylElement from_images(int d, const std::vector<int>& images);
  /// The transposition exchanging a and b (and a', b'); a, b in 1..2d.
  static WeylElement transposition(int d, int a, int b);
  /// iota_m, inverting x_m.
  static WeylElement iota(int d, int m);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  /// w(k) for k in 1..2d.
  int image(int k) const;
  std::vector<int> images() const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool is_identity() const;
  /// Coxeter length in type B with generators s_1..s_{d-1} and iota_1.
  int length() const;

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_ && signs_ == o.signs_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const;

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f);

/// A parabolic subgroup: plain symmetric groups on disjoint index blocks and
/// one (possibly empty) block carrying the hyperoctahedral group.
struct ParabolicSpec {
  int d = 0;
  std::vector<std::vector<int>> sym_blocks;
  std::vector<int> hyper_block;

  /// Adjacent transpositions inside every block, plus iota on the first
  /// element of the hyperoctahedral block.
  std::vector<WeylElement> generators() const;
  /// Every element, in a deterministic order.
  std::vector<WeylElement> elements() const;
  std::size_t order() const;
  bool contains(const WeylElement& w) const;
  bool contains(const ParabolicSpec& sub) const;
  bool is_invariant(const LaurentPoly& f) const;

  void validate() const;
  std::string to_string() const;
};

/// Minimal-length representatives of W2 / W1 in increasing length order.
std::vector<WeylElement> coset_representatives(const ParabolicSpec& w2, const ParabolicSpec& w1);

/// Sum of sigma(f) over sigma in W2 / W1.
LaurentPoly coset_symmetrize(const ParabolicSpec& w2, const ParabolicSpec& w1, const LaurentPoly& f);

}  // namespace iqpoly
