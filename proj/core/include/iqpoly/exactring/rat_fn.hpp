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

#include <optional>
#include <string>
#include <vector>

#include "iqpoly/exactring/laurent_poly.hpp"

namespace iqpoly {

/// Quotient of Laurent polynomials with a factored denominator.
///
/// The denominator is a sorted multiset of primitive factors (see
/// split_unit); any unit has been folded into the numerator.  Sums use the
/// least common multiple of the factor multisets, which is what keeps the
/// symmetrization sums small without multivariate gcd.  Equality is by
/// cross-multiplication.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(LaurentPoly num) : dim_(num.dim()), num_(std::move(num)) {}
  /// num / den for a nonzero den.
  static RatFn fraction(const LaurentPoly& num, const LaurentPoly& den);

  int dim() const { return dim_; }
  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& num() const { return num_; }
  const std::vector<LaurentPoly>& den_factors() const { return den_; }
  /// Product of the denominator factors.
  LaurentPoly den() const;

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator*=(const QScalar& c);
  RatFn& operator*=(const LaurentPoly& p);

  RatFn inverse() const;

  /// Cross-multiplication equality.
  bool equals(const RatFn& o) const;
  bool operator==(const RatFn& o) const { return equals(o); }

  /// Drops every denominator factor that divides the numerator.
  RatFn simplified() const;
  /// The value as a Laurent polynomial, if the denominator cancels.
  std::optional<LaurentPoly> to_laurent() const;
  /// As to_laurent, throwing DenominatorError when it does not cancel.
  LaurentPoly as_laurent() const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  LaurentPoly num_;
  std::vector<LaurentPoly> den_;
};

/// theta_m(u) = (q^m u - 1) / (u - q^m).
RatFn theta_factor(int m, const RatFn& u);

/// Phi_S(u) = prod_{t in S} theta_1(u / x_t); indices in S are in 1..2d.
RatFn phi_product(const std::vector<int>& indices, const RatFn& u);

}  // namespace iqpoly
