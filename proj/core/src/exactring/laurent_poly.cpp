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

#include "iqpoly/exactring/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

void check_dim(int a, int b) {
  if (a != b)
    throw DimensionMismatch("Laurent polynomials of dimension " + std::to_string(a) + " and " +
                            std::to_string(b));
}

std::int16_t narrow(int v) {
  if (v > std::numeric_limits<std::int16_t>::max() || v < std::numeric_limits<std::int16_t>::min())
    throw OverflowError("exponent out of range");
  return static_cast<std::int16_t>(v);
}

// Sorts and merges equal exponents, dropping zeros.
void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    QScalar c = std::move(terms[i].second);
    while (j < terms.size() && terms[j].first == terms[i].first) {
      c += terms[j].second;
      ++j;
    }
    if (!c.is_zero()) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::string monomial_text(int dim, const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < dim; ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    os << "x" << (k + 1);
    if (e[k] != 1) os << "^" << e[k];
    first = false;
  }
  return os.str();
}

bool single_term(const QScalar& c) {
  if (!c.is_laurent()) return false;
  return std::count_if(c.num().begin(), c.num().end(), [](auto v) { return v != 0; }) == 1;
}

}  // namespace

std::pair<int, int> resolve_index(int d, int r) {
  if (r < 1 || r > 2 * d) throw InvalidArgument("variable index " + std::to_string(r) + " outside 1.." +
                                                std::to_string(2 * d));
  if (r <= d) return {r - 1, 1};
  return {2 * d - r, -1};
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = narrow(int(a[k]) + int(b[k]));
  return r;
}

Exponent exponent_neg(const Exponent& a) {
  Exponent r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = narrow(-int(a[k]));
  return r;
}

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxVars) throw InvalidArgument("unsupported dimension " + std::to_string(dim));
}

LaurentPoly LaurentPoly::constant(int dim, const QScalar& c) { return monomial(dim, Exponent{}, c); }

LaurentPoly LaurentPoly::variable(int dim, int r) {
  auto [k, s] = resolve_index(dim, r);
  Exponent e{};
  e[k] = static_cast<std::int16_t>(s);
  return monomial(dim, e);
}

LaurentPoly LaurentPoly::monomial(int dim, const std::vector<int>& exps, const QScalar& c) {
  if (static_cast<int>(exps.size()) != dim) throw DimensionMismatch("exponent vector length differs from dimension");
  Exponent e{};
  for (int k = 0; k < dim; ++k) e[k] = narrow(exps[k]);
  return monomial(dim, e, c);
}

LaurentPoly LaurentPoly::monomial(int dim, const Exponent& e, const QScalar& c) {
  LaurentPoly p(dim);
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(int dim, std::vector<Term> terms) {
  LaurentPoly p(dim);
  p.terms_ = std::move(terms);
  canonicalize(p.terms_);
  return p;
}

bool LaurentPoly::is_constant() const { return terms_.size() == 1 && terms_[0].first == Exponent{}; }

QScalar LaurentPoly::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return QScalar();
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < dim_; ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < dim_; ++k) m[k] = std::max(m[k], e[k]);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check_dim(a.dim_, b.dim_);
  LaurentPoly r(a.dim_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      QScalar c = i->second + j->second;
      if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.dim_ != 0 && b.dim_ != 0) check_dim(a.dim_, b.dim_);
    return LaurentPoly(std::max(a.dim_, b.dim_));
  }
  check_dim(a.dim_, b.dim_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by one term preserves the lexicographic order.
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const auto& [e, c] = single.terms_[0];
    LaurentPoly r(a.dim_);
    r.terms_.reserve(other.terms_.size());
    for (const auto& [f, d] : other.terms_) r.terms_.emplace_back(exponent_add(e, f), c * d);
    return r;
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) prod.emplace_back(exponent_add(e, f), c * d);
  return LaurentPoly::from_terms(a.dim_, std::move(prod));
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = exponent_add(t.first, e);
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return monomial_inverse().pow(-e);
  LaurentPoly result = constant(dim_, QScalar(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw DenominatorError("only monomials are invertible in the Laurent ring");
  return monomial(dim_, exponent_neg(terms_[0].first), terms_[0].second.inverse());
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].first != o.terms_[k].first) return terms_[k].first < o.terms_[k].first;
    if (terms_[k].second != o.terms_[k].second) return terms_[k].second < o.terms_[k].second;
  }
  return false;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = static_cast<std::size_t>(dim_);
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < dim_; ++k) h = h * 1000003u + static_cast<std::size_t>(e[k] + 40000);
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::string mono = monomial_text(dim_, e);
    std::string piece;
    if (mono.empty()) {
      piece = c.to_string();
      if (!single_term(c)) piece = "(" + piece + ")";
    } else if (c.is_one()) {
      piece = mono;
    } else if ((-c).is_one()) {
      piece = "-" + mono;
    } else if (single_term(c)) {
      piece = c.to_string() + "*" + mono;
    } else {
      piece = "(" + c.to_string() + ")*" + mono;
    }
    if (first) {
      os << piece;
    } else if (piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly substitute_slots(const LaurentPoly& f, const std::vector<int>& images) {
  const int d = f.dim();
  if (static_cast<int>(images.size()) != d) throw DimensionMismatch("substitution map has wrong length");
  std::array<std::pair<int, int>, kMaxVars> target{};
  for (int k = 0; k < d; ++k) target[k] = resolve_index(d, images[k]);
  std::vector<LaurentPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Exponent g{};
    for (int k = 0; k < d; ++k) {
      if (e[k] == 0) continue;
      const auto [var, sign] = target[k];
      g[var] = narrow(int(g[var]) + sign * int(e[k]));
    }
    out.emplace_back(g, c);
  }
  return LaurentPoly::from_terms(d, std::move(out));
}

FactorSplit split_unit(const LaurentPoly& f) {
  if (f.is_zero()) throw DivisionByZero("cannot split the zero polynomial");
  const Exponent m = f.min_exponents();
  const QScalar& lc = f.terms().back().second;
  LaurentPoly prim = f.shifted(exponent_neg(m));
  prim *= lc.inverse();
  return {LaurentPoly::monomial(f.dim(), m, lc), std::move(prim)};
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly(b.dim());
  check_dim(a.dim(), b.dim());
  const int d = a.dim();
  FactorSplit s = split_unit(b);
  LaurentPoly scaled = a * s.unit.monomial_inverse();
  const LaurentPoly& p = s.primitive;
  if (p.is_constant()) return scaled;

  const Exponent shift = scaled.min_exponents();
  const Exponent deg_a = exponent_add(scaled.max_exponents(), exponent_neg(shift));
  const Exponent deg_p = p.max_exponents();
  Exponent box{};
  for (int k = 0; k < d; ++k) {
    if (deg_a[k] < deg_p[k]) return std::nullopt;
    box[k] = static_cast<std::int16_t>(deg_a[k] - deg_p[k]);
  }

  std::map<Exponent, QScalar> rem;
  for (const auto& [e, c] : scaled.terms()) rem.emplace(exponent_add(e, exponent_neg(shift)), c);
  const Exponent lead = p.terms().back().first;
  std::vector<LaurentPoly::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponent t{};
    for (int k = 0; k < d; ++k) {
      const int v = int(top->first[k]) - int(lead[k]);
      if (v < 0 || v > box[k]) return std::nullopt;
      t[k] = static_cast<std::int16_t>(v);
    }
    const QScalar c = top->second;
    for (const auto& [e, pc] : p.terms()) {
      const Exponent key = exponent_add(t, e);
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(key, -(c * pc));
      } else {
        it->second -= c * pc;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quot.emplace_back(exponent_add(t, shift), c);
  }
  return LaurentPoly::from_terms(d, std::move(quot));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto r = try_divide(a, b);
  if (!r) throw DenominatorError("denominator " + b.to_string() + " does not divide the numerator");
  return *r;
}

}  // namespace iqpoly
