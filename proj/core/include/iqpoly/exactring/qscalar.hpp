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
#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace iqpoly {

/// Dense integer polynomial in q, lowest degree first.
using IntCoeffs = boost::container::small_vector<std::int64_t, 4>;

/// An exact element of Q(q).
///
/// The value is q^shift * num(q) / den(q) with num, den in Z[q].  The stored
/// form is canonical: num(0) != 0 and den(0) != 0 (powers of q live in
/// shift), gcd(num, den) = 1 in Z[q] including integer content, and the
/// leading coefficient of den is positive.  Zero is the empty numerator with
/// shift 0 and den = 1.  Canonical storage means operator== is structural.
class QScalar {
 public:
  QScalar() : den_{1} {}
  QScalar(std::int64_t c);  // NOLINT(google-explicit-constructor)

  /// The monomial c * q^k.
  static QScalar monomial(std::int64_t c, int k);
  static QScalar q_pow(int k) { return monomial(1, k); }
  /// Builds q^shift * num / den and normalizes it.
  static QScalar from_parts(int shift, IntCoeffs num, IntCoeffs den);
  /// Balanced q-integer [k] = (q^k - q^-k)/(q - q^-1).
  static QScalar q_int(int k);
  /// Balanced q-binomial coefficient.
  static QScalar q_binom(int k, int r);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when the denominator is 1, i.e. the value lies in Z[q, q^-1].
  bool is_laurent() const { return den_.size() == 1 && den_[0] == 1; }

  int shift() const { return shift_; }
  const IntCoeffs& num() const { return num_; }
  const IntCoeffs& den() const { return den_; }

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  QScalar inverse() const;
  QScalar pow(int e) const;

  bool operator==(const QScalar& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  /// A total order on canonical forms; only meaningful for sorting.
  bool operator<(const QScalar& o) const;

  std::size_t hash() const;

  /// Canonical rendering such as "-q^-1 + 2*q^3" or "(1 + q^2)/(1 - q^4)".
  std::string to_string() const;

 private:
  void normalize();

  int shift_ = 0;
  IntCoeffs num_;
  IntCoeffs den_;
};

/// Internal helpers on integer polynomials, exposed for tests.
namespace intpoly {
IntCoeffs mul(const IntCoeffs& a, const IntCoeffs& b);
IntCoeffs add(const IntCoeffs& a, const IntCoeffs& b);
IntCoeffs sub(const IntCoeffs& a, const IntCoeffs& b);
/// Greatest common divisor in Z[q], with positive leading coefficient.
IntCoeffs gcd(const IntCoeffs& a, const IntCoeffs& b);
/// Exact quotient a / b in Z[q]; throws if b does not divide a.
IntCoeffs exact_div(const IntCoeffs& a, const IntCoeffs& b);
}  // namespace intpoly

}  // namespace iqpoly
