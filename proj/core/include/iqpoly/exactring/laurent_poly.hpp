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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iqpoly/exactring/qscalar.hpp"

namespace iqpoly {

/// Hard cap on the number of torus variables x_1..x_d.
inline constexpr int kMaxVars = 8;

/// Exponent vector; entries past the polynomial's dimension stay zero.
/// std::array comparison gives the lexicographic order used everywhere.
using Exponent = std::array<std::int16_t, kMaxVars>;

/// Resolves an index r in 1..2d to (variable, sign): r <= d is x_r, and
/// r > d is x_{2d+1-r}^{-1}.  Variables are returned 0-based.
std::pair<int, int> resolve_index(int d, int r);

/// Sparse Laurent polynomial in x_1..x_d with coefficients in Q(q).
///
/// Terms are kept sorted by exponent (lexicographic, ascending) with no zero
/// coefficients, so equality and rendering are canonical.
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, QScalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(int dim);

  static LaurentPoly constant(int dim, const QScalar& c);
  /// The variable x_r for r in 1..2d, with the mirror rule applied.
  static LaurentPoly variable(int dim, int r);
  static LaurentPoly monomial(int dim, const std::vector<int>& exps, const QScalar& c = QScalar(1));
  static LaurentPoly monomial(int dim, const Exponent& e, const QScalar& c = QScalar(1));
  /// Builds from unsorted, possibly repeated terms.
  static LaurentPoly from_terms(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Single term c * x^e.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Nonzero constant (degree zero in every variable).
  bool is_constant() const;
  QScalar coefficient(const Exponent& e) const;
  QScalar constant_term() const { return coefficient(Exponent{}); }

  Exponent min_exponents() const;
  Exponent max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const QScalar& c);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const QScalar& c) { return a *= c; }
  friend LaurentPoly operator*(const QScalar& c, LaurentPoly a) { return a *= c; }

  /// Multiplies by x^e (exponents may be negative).
  LaurentPoly shifted(const Exponent& e) const;
  /// Integer power; negative powers are only defined for monomials.
  LaurentPoly pow(int e) const;

  /// Inverse of a monomial c * x^e.
  LaurentPoly monomial_inverse() const;

  bool operator==(const LaurentPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  /// Total order on canonical forms, for use as a map key.
  bool operator<(const LaurentPoly& o) const;

  std::size_t hash() const;

  /// Canonical text, e.g. "x1^-1 + (q + q^-1)*x1*x2^2".
  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

/// Adds two exponent vectors, failing loudly on int16 overflow.
Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_neg(const Exponent& a);

/// Substitutes slot k (0-based) by x_{images[k]}, images in 1..2d.
LaurentPoly substitute_slots(const LaurentPoly& f, const std::vector<int>& images);

/// Splits a nonzero polynomial as unit * primitive where unit = c * x^m and
/// primitive has minimal exponent 0 in every variable and lexicographically
/// leading coefficient 1.
struct FactorSplit {
  LaurentPoly unit;
  LaurentPoly primitive;
};
FactorSplit split_unit(const LaurentPoly& f);

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not
/// divide a.
std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);
/// As try_divide, but throws DenominatorError when the division is inexact.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace iqpoly
