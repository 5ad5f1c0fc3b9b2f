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

#include "iqpoly/exactring/rat_fn.hpp"

#include <algorithm>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

using Factors = std::vector<LaurentPoly>;

void sort_factors(Factors& f) { std::sort(f.begin(), f.end()); }

// Multiset difference a \ b of sorted factor lists.
Factors difference(const Factors& a, const Factors& b) {
  Factors out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Factors multiset_union(const Factors& a, const Factors& b) {
  Factors out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentPoly product(int dim, const Factors& f) {
  LaurentPoly p = LaurentPoly::constant(dim, QScalar(1));
  for (const auto& x : f) p *= x;
  return p;
}

}  // namespace

RatFn RatFn::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFn r;
  r.dim_ = den.dim();
  if (num.is_zero()) {
    r.num_ = LaurentPoly(r.dim_);
    return r;
  }
  FactorSplit s = split_unit(den);
  r.num_ = num * s.unit.monomial_inverse();
  if (!s.primitive.is_constant()) r.den_.push_back(std::move(s.primitive));
  return r;
}

LaurentPoly RatFn::den() const { return product(dim_, den_); }

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RatFn r = a;
    r.num_ += b.num_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }
  RatFn r;
  r.dim_ = a.dim_;
  r.den_ = multiset_union(a.den_, b.den_);
  r.num_ = a.num_ * product(a.dim_, difference(r.den_, a.den_)) +
           b.num_ * product(b.dim_, difference(r.den_, b.den_));
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  RatFn r;
  r.dim_ = std::max(a.dim_, b.dim_);
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
  sort_factors(r.den_);
  return r;
}

RatFn& RatFn::operator*=(const QScalar& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RatFn& RatFn::operator*=(const LaurentPoly& p) {
  num_ *= p;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  FactorSplit s = split_unit(num_);
  RatFn r;
  r.dim_ = dim_;
  r.num_ = product(dim_, den_) * s.unit.monomial_inverse();
  if (!s.primitive.is_constant()) r.den_.push_back(std::move(s.primitive));
  return r;
}

bool RatFn::equals(const RatFn& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return num_ * product(dim_, difference(o.den_, den_)) == o.num_ * product(dim_, difference(den_, o.den_));
}

RatFn RatFn::simplified() const {
  RatFn r = *this;
  Factors keep;
  for (const auto& f : den_) {
    if (auto q = try_divide(r.num_, f)) {
      r.num_ = std::move(*q);
    } else {
      keep.push_back(f);
    }
  }
  r.den_ = std::move(keep);
  return r;
}

std::optional<LaurentPoly> RatFn::to_laurent() const {
  LaurentPoly n = num_;
  for (const auto& f : den_) {
    auto q = try_divide(n, f);
    if (!q) return std::nullopt;
    n = std::move(*q);
  }
  return n;
}

LaurentPoly RatFn::as_laurent() const {
  auto r = to_laurent();
  if (!r) throw DenominatorError("rational function is not a Laurent polynomial: " + to_string());
  return *r;
}

std::string RatFn::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (k) s += "*";
    s += "(" + den_[k].to_string() + ")";
  }
  return s + ")";
}

RatFn theta_factor(int m, const RatFn& u) {
  const int d = u.dim();
  const RatFn qm(LaurentPoly::constant(d, QScalar::q_pow(m)));
  const RatFn one(LaurentPoly::constant(d, QScalar(1)));
  RatFn numer = qm * u - one;
  RatFn denom = u - qm;
  return numer / denom;
}

RatFn phi_product(const std::vector<int>& indices, const RatFn& u) {
  const int d = u.dim();
  RatFn p(LaurentPoly::constant(d, QScalar(1)));
  for (int t : indices) {
    RatFn arg = u;
    arg *= LaurentPoly::variable(d, t).monomial_inverse();
    p *= theta_factor(1, arg);
  }
  return p;
}

}  // namespace iqpoly
