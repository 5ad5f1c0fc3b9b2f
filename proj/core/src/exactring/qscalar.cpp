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

#include "iqpoly/exactring/qscalar.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigPoly = std::vector<BigInt>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in Z[q] addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coefficient overflow in Z[q] subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in Z[q] product");
  return r;
}

void trim(IntCoeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BigPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_one_poly(const IntCoeffs& p) { return p.size() == 1 && p[0] == 1; }

std::int64_t content(const IntCoeffs& p) {
  std::int64_t g = 0;
  for (auto c : p) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

BigPoly to_big(const IntCoeffs& p) { return BigPoly(p.begin(), p.end()); }

IntCoeffs from_big(const BigPoly& p) {
  IntCoeffs out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("gcd coefficient exceeds 64-bit range");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

BigInt big_content(const BigPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

void make_primitive(BigPoly& p) {
  BigInt g = big_content(p);
  if (g == 0) return;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
BigPoly prem(BigPoly a, const BigPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

void append_term(std::ostringstream& os, std::int64_t c, int e, bool first) {
  if (c == 0) return;
  if (!first) os << (c < 0 ? " - " : " + ");
  else if (c < 0) os << "-";
  std::int64_t a = c < 0 ? -c : c;
  if (e == 0) {
    os << a;
    return;
  }
  if (a != 1) os << a << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

std::string render_poly(const IntCoeffs& p, int offset) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    append_term(os, p[k], static_cast<int>(k) + offset, first);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t count_terms(const IntCoeffs& p) {
  return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](auto c) { return c != 0; }));
}

}  // namespace

namespace intpoly {

IntCoeffs mul(const IntCoeffs& a, const IntCoeffs& b) {
  if (a.empty() || b.empty()) return {};
  IntCoeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

IntCoeffs add(const IntCoeffs& a, const IntCoeffs& b) {
  IntCoeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  trim(r);
  return r;
}

IntCoeffs sub(const IntCoeffs& a, const IntCoeffs& b) {
  IntCoeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_sub(r[i], b[i]);
  trim(r);
  return r;
}

IntCoeffs gcd(const IntCoeffs& a, const IntCoeffs& b) {
  if (a.empty() && b.empty()) return {};
  if (a.empty()) return gcd(b, b);
  if (b.empty()) return gcd(a, a);
  const std::int64_t cg = std::gcd(content(a), content(b));
  if (a.size() == 1 || b.size() == 1) return {cg};
  BigPoly x = to_big(a), y = to_big(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BigPoly r = prem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.size() == 1) return {cg};
  make_primitive(x);
  for (auto& c : x) c *= cg;
  return from_big(x);
}

IntCoeffs exact_div(const IntCoeffs& a, const IntCoeffs& b) {
  if (b.empty()) throw DivisionByZero("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InvalidArgument("inexact polynomial division in Z[q]");
  IntCoeffs r = a;
  IntCoeffs quo(a.size() - b.size() + 1, 0);
  const std::int64_t lb = b.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const std::int64_t top = r[k + b.size() - 1];
    if (top % lb != 0) throw InvalidArgument("inexact polynomial division in Z[q]");
    const std::int64_t c = top / lb;
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = checked_sub(r[k + j], checked_mul(c, b[j]));
  }
  trim(r);
  if (!r.empty()) throw InvalidArgument("inexact polynomial division in Z[q]");
  trim(quo);
  return quo;
}

}  // namespace intpoly

QScalar::QScalar(std::int64_t c) : den_{1} {
  if (c != 0) num_.push_back(c);
}

QScalar QScalar::monomial(std::int64_t c, int k) {
  QScalar r(c);
  if (c != 0) r.shift_ = k;
  return r;
}

QScalar QScalar::from_parts(int shift, IntCoeffs num, IntCoeffs den) {
  QScalar r;
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

QScalar QScalar::q_int(int k) {
  // [k] = q^{1-k} + q^{3-k} + ... + q^{k-1}; [-k] = -[k].
  if (k == 0) return QScalar();
  const int a = k < 0 ? -k : k;
  IntCoeffs p(2 * a - 1, 0);
  for (int j = 0; j < a; ++j) p[2 * j] = 1;
  QScalar r = from_parts(1 - a, std::move(p), {1});
  return k < 0 ? -r : r;
}

QScalar QScalar::q_binom(int k, int r) {
  if (r < 0 || r > k) return QScalar();
  QScalar num(1), den(1);
  for (int j = 0; j < r; ++j) {
    num *= q_int(k - j);
    den *= q_int(j + 1);
  }
  return num / den;
}

bool QScalar::is_one() const { return shift_ == 0 && is_one_poly(num_) && is_one_poly(den_); }

QScalar QScalar::operator-() const {
  QScalar r = *this;
  for (auto& c : r.num_) c = checked_sub(0, c);
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int m = std::min(shift_, o.shift_);
  auto lift = [](const IntCoeffs& p, int by) {
    IntCoeffs r(static_cast<std::size_t>(by), 0);
    r.insert(r.end(), p.begin(), p.end());
    return r;
  };
  if (den_ == o.den_) {
    IntCoeffs n = intpoly::add(lift(num_, shift_ - m), lift(o.num_, o.shift_ - m));
    shift_ = m;
    num_ = std::move(n);
  } else {
    IntCoeffs n = intpoly::add(intpoly::mul(lift(num_, shift_ - m), o.den_),
                               intpoly::mul(lift(o.num_, o.shift_ - m), den_));
    shift_ = m;
    num_ = std::move(n);
    den_ = intpoly::mul(den_, o.den_);
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  QScalar r;
  r.shift_ = a.shift_ + b.shift_;
  if (a.is_laurent() && b.is_laurent()) {
    r.num_ = intpoly::mul(a.num_, b.num_);
    r.den_ = {1};
    // Products of polynomials with nonzero constant terms keep that property.
    return r;
  }
  r.num_ = intpoly::mul(a.num_, b.num_);
  r.den_ = intpoly::mul(a.den_, b.den_);
  r.normalize();
  return r;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

QScalar& QScalar::operator/=(const QScalar& o) { return *this = *this * o.inverse(); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  QScalar r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.back() < 0) {
    for (auto& c : r.num_) c = -c;
    for (auto& c : r.den_) c = -c;
  }
  return r;
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool QScalar::operator<(const QScalar& o) const {
  if (shift_ != o.shift_) return shift_ < o.shift_;
  if (num_ != o.num_)
    return std::lexicographical_compare(num_.begin(), num_.end(), o.num_.begin(), o.num_.end());
  return std::lexicographical_compare(den_.begin(), den_.end(), o.den_.begin(), o.den_.end());
}

std::size_t QScalar::hash() const {
  std::size_t h = std::hash<int>()(shift_);
  auto mix = [&h](std::int64_t c) { h ^= std::hash<std::int64_t>()(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto c : num_) mix(c);
  mix(0x51ed);
  for (auto c : den_) mix(c);
  return h;
}

std::string QScalar::to_string() const {
  if (is_zero()) return "0";
  if (is_laurent()) return render_poly(num_, shift_);
  std::string n, d;
  if (shift_ >= 0) {
    n = render_poly(num_, shift_);
    d = render_poly(den_, 0);
  } else {
    n = render_poly(num_, 0);
    d = render_poly(den_, -shift_);
  }
  if (count_terms(num_) > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

void QScalar::normalize() {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw DivisionByZero("zero denominator in Q(q)");
  if (num_.empty()) {
    shift_ = 0;
    den_ = {1};
    return;
  }
  auto strip_low = [](IntCoeffs& p) {
    std::size_t k = 0;
    while (p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    return static_cast<int>(k);
  };
  shift_ += strip_low(num_);
  shift_ -= strip_low(den_);
  if (is_one_poly(den_)) return;
  IntCoeffs g = intpoly::gcd(num_, den_);
  if (!is_one_poly(g)) {
    num_ = intpoly::exact_div(num_, g);
    den_ = intpoly::exact_div(den_, g);
  }
  if (den_.back() < 0) {
    for (auto& c : num_) c = -c;
    for (auto& c : den_) c = -c;
  }
}

}  // namespace iqpoly
