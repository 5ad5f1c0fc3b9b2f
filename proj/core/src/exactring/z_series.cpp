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

#include "iqpoly/exactring/z_series.hpp"

#include <algorithm>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

int common_dim(int a, int b) {
  if (a != 0 && b != 0 && a != b) throw DimensionMismatch("z-polynomials over different coefficient rings");
  return a != 0 ? a : b;
}

ZPoly reversed(const ZPoly& p) {
  ZPoly r(p.dim);
  if (p.is_zero()) return r;
  r.low = -p.high();
  r.coeffs.assign(p.coeffs.rbegin(), p.coeffs.rend());
  return r;
}

// Coefficients of z^lo..z^hi in the expansion of n/d at zero.
std::vector<LaurentPoly> expand_at_zero(ZPoly n, ZPoly d, int lo, int hi, int dim) {
  n.trim();
  d.trim();
  if (d.is_zero()) throw DivisionByZero("expansion of a rational function with zero denominator");
  std::vector<LaurentPoly> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)), LaurentPoly(dim));
  if (n.is_zero()) return out;
  if (!d.coeffs[0].is_monomial())
    throw DenominatorError("lowest denominator coefficient " + d.coeffs[0].to_string() + " is not invertible");
  const LaurentPoly inv0 = d.coeffs[0].monomial_inverse();
  const int val = n.low - d.low;
  const int count = hi - val + 1;
  std::vector<LaurentPoly> s;
  s.reserve(static_cast<std::size_t>(std::max(0, count)));
  for (int k = 0; k < count; ++k) {
    LaurentPoly acc = k < static_cast<int>(n.coeffs.size()) ? n.coeffs[k] : LaurentPoly(dim);
    const int top = std::min(k, static_cast<int>(d.coeffs.size()) - 1);
    for (int j = 1; j <= top; ++j) acc -= d.coeffs[j] * s[k - j];
    s.push_back(acc * inv0);
  }
  for (int e = lo; e <= hi; ++e) {
    const int k = e - val;
    if (k >= 0 && k < count) out[e - lo] = s[k];
  }
  return out;
}

}  // namespace

ZPoly ZPoly::constant(const LaurentPoly& c) { return monomial(c, 0); }

ZPoly ZPoly::monomial(const LaurentPoly& c, int k) {
  ZPoly p(c.dim());
  if (!c.is_zero()) {
    p.low = k;
    p.coeffs.push_back(c);
  }
  return p;
}

ZPoly ZPoly::linear(const LaurentPoly& a, const LaurentPoly& b) {
  ZPoly p(common_dim(a.dim(), b.dim()));
  p.coeffs = {a, b};
  p.trim();
  return p;
}

LaurentPoly ZPoly::coeff(int k) const {
  if (k < low || k > high()) return LaurentPoly(dim);
  return coeffs[k - low];
}

void ZPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  if (lead) {
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    low += static_cast<int>(lead);
  }
  if (coeffs.empty()) low = 0;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ZPoly r(common_dim(a.dim, b.dim));
  r.low = std::min(a.low, b.low);
  const int hi = std::max(a.high(), b.high());
  for (int k = r.low; k <= hi; ++k) r.coeffs.push_back(a.coeff(k) + b.coeff(k));
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly nb = b;
  for (auto& c : nb.coeffs) c = -c;
  return a + nb;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r(common_dim(a.dim, b.dim));
  if (a.is_zero() || b.is_zero()) return r;
  r.low = a.low + b.low;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, LaurentPoly(r.dim));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

bool ZPoly::operator==(const ZPoly& o) const {
  ZPoly a = *this, b = o;
  a.trim();
  b.trim();
  return a.low == b.low && a.coeffs == b.coeffs;
}

ZRatFn ZRatFn::constant(const LaurentPoly& c) {
  return {ZPoly::constant(c), ZPoly::constant(LaurentPoly::constant(c.dim(), QScalar(1)))};
}

ZRatFn ZRatFn::fraction(ZPoly n, ZPoly d) {
  d.trim();
  if (d.is_zero()) throw DivisionByZero("zero denominator in a z-rational function");
  n.trim();
  return {std::move(n), std::move(d)};
}

ZRatFn operator*(const ZRatFn& a, const ZRatFn& b) { return {a.num * b.num, a.den * b.den}; }

ZRatFn operator/(const ZRatFn& a, const ZRatFn& b) { return ZRatFn::fraction(a.num * b.den, a.den * b.num); }

ZRatFn operator+(const ZRatFn& a, const ZRatFn& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

ZRatFn operator-(const ZRatFn& a, const ZRatFn& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

bool ZRatFn::equals(const ZRatFn& o) const { return num * o.den == o.num * den; }

LaurentPoly ZSeries::at(int e, int dim) const {
  const int k = (e - start) * step;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return LaurentPoly(dim);
  return coeffs[k];
}

ZSeries expand_series(const ZRatFn& r, ExpansionPoint point, int order) {
  const int dim = r.dim();
  ZPoly n = r.num, d = r.den;
  n.trim();
  d.trim();
  if (d.is_zero()) throw DivisionByZero("expansion of a rational function with zero denominator");
  ZSeries out;
  if (point == ExpansionPoint::kZero) {
    const int val = n.is_zero() ? 0 : n.low - d.low;
    out.start = std::min(0, val);
    out.step = 1;
    out.coeffs = expand_at_zero(n, d, out.start, order, dim);
    return out;
  }
  // z = 1/w and expand in w at zero.
  ZPoly rn = reversed(n), rd = reversed(d);
  const int val = rn.is_zero() ? 0 : rn.low - rd.low;
  const int lo = std::min(0, val);
  out.start = -lo;
  out.step = -1;
  out.coeffs = expand_at_zero(rn, rd, lo, order, dim);
  return out;
}

std::vector<LaurentPoly> series_mul(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b, int order,
                                    int dim) {
  std::vector<LaurentPoly> r(static_cast<std::size_t>(order + 1), LaurentPoly(dim));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<LaurentPoly> series_exp(const std::vector<LaurentPoly>& s, int order, int dim) {
  if (!s.empty() && !s[0].is_zero()) throw InvalidArgument("series_exp needs a zero constant term");
  auto get = [&](int k) { return k < static_cast<int>(s.size()) ? s[k] : LaurentPoly(dim); };
  std::vector<LaurentPoly> e(static_cast<std::size_t>(order + 1), LaurentPoly(dim));
  e[0] = LaurentPoly::constant(dim, QScalar(1));
  for (int k = 1; k <= order; ++k) {
    LaurentPoly acc(dim);
    for (int j = 1; j <= k; ++j) acc += get(j) * e[k - j] * QScalar(j);
    e[k] = acc * (QScalar(1) / QScalar(k));
  }
  return e;
}

std::vector<LaurentPoly> series_log(const std::vector<LaurentPoly>& s, int order, int dim) {
  if (s.empty() || s[0] != LaurentPoly::constant(dim, QScalar(1)))
    throw InvalidArgument("series_log needs constant term 1");
  auto get = [&](int k) { return k < static_cast<int>(s.size()) ? s[k] : LaurentPoly(dim); };
  std::vector<LaurentPoly> l(static_cast<std::size_t>(order + 1), LaurentPoly(dim));
  for (int k = 1; k <= order; ++k) {
    LaurentPoly acc = get(k) * QScalar(k);
    for (int j = 1; j < k; ++j) acc -= l[j] * get(k - j) * QScalar(j);
    l[k] = acc * (QScalar(1) / QScalar(k));
  }
  return l;
}

}  // namespace iqpoly
