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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iqpoly/exactring/qscalar.hpp"
#include "iqpoly/polyrep/polyrep.hpp"

namespace iqpoly::relcheck {

/// The formal variables that appear in the generating-function relations.
enum class FormalVar { kZ = 0, kW = 1, kW1 = 2, kW2 = 3 };
inline constexpr int kNumFormalVars = 4;

const char* formal_var_name(FormalVar v);

/// Exponent vector over (z, w, w1, w2).
using FormalMono = std::array<int, kNumFormalVars>;

FormalMono mono(FormalVar v, int e = 1);
FormalMono operator+(const FormalMono& a, const FormalMono& b);
FormalMono operator-(const FormalMono& a);

/// One factor of a product of formal distributions.
///
///   kScalar     c
///   kMonomial   u^e
///   kDelta      sum_{k in Z} (alpha u^e)^k, e.g. Delta(zw) with alpha = C
///   kGeometric  sum_{k >= 0} (alpha u^e)^k, i.e. (1 - alpha u^e)^-1 expanded
///               in nonnegative powers of the monomial as written
///   kB          B_i(u) = sum_r q^{ri} B_{i,r} u^r
///   kTheta      Theta_i(u) = 1 + sum_{m >= 1} (q - q^-1) Theta_{i,m} u^m
///   kK, kKinv   K_i^{+-1}
struct Factor {
  enum class Kind { kScalar, kMonomial, kDelta, kGeometric, kB, kTheta, kK, kKinv };
  Kind kind = Kind::kScalar;
  QScalar scalar{1};
  FormalMono exps{};
  int gen = 0;
  FormalVar var = FormalVar::kZ;

  bool is_operator() const { return kind == Kind::kB || kind == Kind::kTheta || kind == Kind::kK || kind == Kind::kKinv; }
  std::string to_string() const;
};

/// An ordered product of factors.  Operator factors keep their order; the
/// others are central.
struct TermExpr {
  std::vector<Factor> factors;
  std::string to_string() const;
};

/// A finite sum of TermExprs.
class TermSum {
 public:
  TermSum() = default;
  explicit TermSum(TermExpr t) { terms_.push_back(std::move(t)); }

  const std::vector<TermExpr>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  TermSum& operator+=(const TermSum& o);
  TermSum& operator-=(const TermSum& o);
  friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
  friend TermSum operator-(TermSum a, const TermSum& b) { return a -= b; }
  friend TermSum operator*(const TermSum& a, const TermSum& b);
  friend TermSum operator*(const QScalar& c, const TermSum& a);

  /// Exchanges two formal variables everywhere.
  TermSum swapped(FormalVar a, FormalVar b) const;
  /// Formal variables that occur in some factor.
  std::vector<FormalVar> variables() const;
  std::string to_string() const;

 private:
  std::vector<TermExpr> terms_;
};

// Builders.  Each returns a one-term sum.
TermSum scalar(const QScalar& c);
TermSum monomial(const FormalMono& e, const QScalar& c = QScalar(1));
TermSum delta(const QScalar& alpha, const FormalMono& e);
TermSum geometric(const QScalar& alpha, const FormalMono& e);
TermSum B(int i, FormalVar u);
TermSum Theta(int i, FormalVar u);
TermSum K(int i);
TermSum Kinv(int i);

/// Sym_{w1,w2} t = t + t|_{w1 <-> w2}.
TermSum sym_w1w2(const TermSum& t);

/// Required degree of each formal variable; absent variables must have
/// degree 0.
using Degrees = std::map<FormalVar, int>;

/// One operator word with its coefficient.
using ModeTerm = std::pair<QScalar, Word>;

/// The coefficient of the requested multi-degree, as a combination of
/// operator words with like words merged and zero coefficients dropped,
/// sorted by word.  Throws UnboundedExtraction when some summation index is
/// not pinned down by the degree constraints.
std::vector<ModeTerm> extract_mode(const TermSum& t, const Degrees& degrees);

/// Number of raw (unmerged) index assignments, useful as a structural bound.
std::size_t extraction_size(const TermSum& t, const Degrees& degrees);

}  // namespace iqpoly::relcheck
