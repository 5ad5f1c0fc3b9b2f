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

#include <string>
#include <vector>

#include "iqpoly/exactring/laurent_poly.hpp"

namespace iqpoly {

/// Laurent polynomial in one auxiliary variable z with LaurentPoly
/// coefficients: sum_k coeffs[k] z^{low + k}.
struct ZPoly {
  int dim = 0;
  int low = 0;
  std::vector<LaurentPoly> coeffs;

  ZPoly() = default;
  explicit ZPoly(int d) : dim(d) {}
  static ZPoly constant(const LaurentPoly& c);
  /// c * z^k.
  static ZPoly monomial(const LaurentPoly& c, int k);
  /// a + b z.
  static ZPoly linear(const LaurentPoly& a, const LaurentPoly& b);

  bool is_zero() const { return coeffs.empty(); }
  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  LaurentPoly coeff(int k) const;
  /// Strips zero coefficients at both ends.
  void trim();

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  bool operator==(const ZPoly& o) const;
};

/// Quotient of two ZPolys, unreduced.
struct ZRatFn {
  ZPoly num;
  ZPoly den;

  static ZRatFn constant(const LaurentPoly& c);
  static ZRatFn fraction(ZPoly n, ZPoly d);
  int dim() const { return num.dim != 0 ? num.dim : den.dim; }

  friend ZRatFn operator*(const ZRatFn& a, const ZRatFn& b);
  friend ZRatFn operator/(const ZRatFn& a, const ZRatFn& b);
  friend ZRatFn operator+(const ZRatFn& a, const ZRatFn& b);
  friend ZRatFn operator-(const ZRatFn& a, const ZRatFn& b);
  /// Cross-multiplication equality.
  bool equals(const ZRatFn& o) const;
};

enum class ExpansionPoint { kZero, kInfinity };

/// Truncated expansion: coeffs[k] multiplies z^{start + k * step}, where
/// step is +1 at zero and -1 at infinity.
struct ZSeries {
  int start = 0;
  int step = 1;
  std::vector<LaurentPoly> coeffs;

  /// Coefficient of z^e, zero outside the stored window.
  LaurentPoly at(int e, int dim) const;
};

/// Expansion of r at z = 0 (exponents from min(0, valuation) up to order) or
/// at z = infinity (exponents from max(0, degree) down to -order).  The
/// lowest (resp. highest) z-coefficient of the denominator must be a unit
/// of the Laurent ring, i.e. a monomial.
ZSeries expand_series(const ZRatFn& r, ExpansionPoint point, int order);

/// Power-series helpers on coefficient lists c[0..n] (index = power of z).
std::vector<LaurentPoly> series_mul(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b, int order,
                                    int dim);
/// exp(s) for a series with zero constant term.
std::vector<LaurentPoly> series_exp(const std::vector<LaurentPoly>& s, int order, int dim);
/// log(s) for a series with constant term 1.
std::vector<LaurentPoly> series_log(const std::vector<LaurentPoly>& s, int order, int dim);

}  // namespace iqpoly
