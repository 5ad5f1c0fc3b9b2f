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

#include "iqpoly/relcheck/term_expr.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "iqpoly/errors.hpp"

namespace iqpoly::relcheck {

namespace {

using i64 = long long;
constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;
constexpr std::size_t kMaxAssignments = 1u << 20;

std::string mono_string(const FormalMono& e) {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < kNumFormalVars; ++v) {
    if (e[v] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << formal_var_name(static_cast<FormalVar>(v));
    if (e[v] != 1) os << "^" << e[v];
  }
  return first ? "1" : os.str();
}

// Summation index of one factor: x ranges over [lo, hi] and contributes
// x * coeffs to the multi-degree.
struct Index {
  std::size_t factor = 0;
  i64 lo = -kInf;
  i64 hi = kInf;
  FormalMono coeffs{};
};

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

bool is_finite(i64 x) { return x > -kInf && x < kInf; }

class Solver {
 public:
  Solver(const TermExpr& t, const Degrees& degrees) : term_(t) {
    FormalMono offset{};
    for (std::size_t f = 0; f < t.factors.size(); ++f) {
      const Factor& x = t.factors[f];
      switch (x.kind) {
        case Factor::Kind::kMonomial: offset = offset + x.exps; break;
        case Factor::Kind::kDelta: idx_.push_back({f, -kInf, kInf, x.exps}); break;
        case Factor::Kind::kGeometric: idx_.push_back({f, 0, kInf, x.exps}); break;
        case Factor::Kind::kB: idx_.push_back({f, -kInf, kInf, mono(x.var)}); break;
        case Factor::Kind::kTheta: idx_.push_back({f, 0, kInf, mono(x.var)}); break;
        default: break;
      }
    }
    for (const auto& [v, deg] : degrees) target_[static_cast<int>(v)] = deg;
    for (int v = 0; v < kNumFormalVars; ++v) target_[v] -= offset[v];
  }

  void run(const std::function<void(const std::vector<i64>&)>& emit) {
    std::vector<i64> lo(idx_.size()), hi(idx_.size());
    for (std::size_t j = 0; j < idx_.size(); ++j) {
      lo[j] = idx_[j].lo;
      hi[j] = idx_[j].hi;
    }
    solve(lo, hi, emit);
  }

 private:
  bool propagate(std::vector<i64>& lo, std::vector<i64>& hi) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < kNumFormalVars; ++v) {
        const i64 rhs = target_[v];
        bool any = false;
        for (const auto& ix : idx_) any = any || ix.coeffs[v] != 0;
        if (!any) {
          if (rhs != 0) return false;
          continue;
        }
        for (std::size_t j = 0; j < idx_.size(); ++j) {
          const i64 a = idx_[j].coeffs[v];
          if (a == 0) continue;
          bool min_inf = false, max_inf = false;
          i64 rest_min = 0, rest_max = 0;
          for (std::size_t l = 0; l < idx_.size(); ++l) {
            const i64 b = idx_[l].coeffs[v];
            if (l == j || b == 0) continue;
            const i64 p = b > 0 ? lo[l] : hi[l];
            const i64 r = b > 0 ? hi[l] : lo[l];
            if (is_finite(p)) rest_min += b * p; else min_inf = true;
            if (is_finite(r)) rest_max += b * r; else max_inf = true;
          }
          // a * x_j lies in [rhs - rest_max, rhs - rest_min].
          i64 new_lo = lo[j], new_hi = hi[j];
          if (a > 0) {
            if (!max_inf) new_lo = std::max(new_lo, ceil_div(rhs - rest_max, a));
            if (!min_inf) new_hi = std::min(new_hi, floor_div(rhs - rest_min, a));
          } else {
            if (!min_inf) new_lo = std::max(new_lo, ceil_div(rhs - rest_min, a));
            if (!max_inf) new_hi = std::min(new_hi, floor_div(rhs - rest_max, a));
          }
          if (new_lo > new_hi) return false;
          if (new_lo != lo[j] || new_hi != hi[j]) {
            lo[j] = new_lo;
            hi[j] = new_hi;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void solve(std::vector<i64> lo, std::vector<i64> hi, const std::function<void(const std::vector<i64>&)>& emit) {
    if (!propagate(lo, hi)) return;
    std::size_t pick = idx_.size();
    i64 width = kInf;
    bool unbounded = false;
    for (std::size_t j = 0; j < idx_.size(); ++j) {
      if (lo[j] == hi[j]) continue;
      if (!is_finite(lo[j]) || !is_finite(hi[j])) {
        unbounded = true;
        continue;
      }
      if (hi[j] - lo[j] < width) {
        width = hi[j] - lo[j];
        pick = j;
      }
    }
    if (pick == idx_.size()) {
      if (unbounded) throw UnboundedExtraction("summation index is not bounded in term " + term_.to_string());
      if (++emitted_ > kMaxAssignments) throw UnboundedExtraction("extraction exceeds the assignment cap");
      emit(lo);
      return;
    }
    for (i64 x = lo[pick]; x <= hi[pick]; ++x) {
      std::vector<i64> l2 = lo, h2 = hi;
      l2[pick] = h2[pick] = x;
      solve(std::move(l2), std::move(h2), emit);
    }
  }

 public:
  const std::vector<Index>& indices() const { return idx_; }

 private:
  const TermExpr& term_;
  std::vector<Index> idx_;
  FormalMono target_{};
  std::size_t emitted_ = 0;
};

}  // namespace

const char* formal_var_name(FormalVar v) {
  switch (v) {
    case FormalVar::kZ: return "z";
    case FormalVar::kW: return "w";
    case FormalVar::kW1: return "w1";
    case FormalVar::kW2: return "w2";
  }
  return "?";
}

FormalMono mono(FormalVar v, int e) {
  FormalMono m{};
  m[static_cast<int>(v)] = e;
  return m;
}

FormalMono operator+(const FormalMono& a, const FormalMono& b) {
  FormalMono r{};
  for (int k = 0; k < kNumFormalVars; ++k) r[k] = a[k] + b[k];
  return r;
}

FormalMono operator-(const FormalMono& a) {
  FormalMono r{};
  for (int k = 0; k < kNumFormalVars; ++k) r[k] = -a[k];
  return r;
}

std::string Factor::to_string() const {
  switch (kind) {
    case Kind::kScalar: return "(" + scalar.to_string() + ")";
    case Kind::kMonomial: return mono_string(exps);
    case Kind::kDelta: return "Delta[" + scalar.to_string() + "; " + mono_string(exps) + "]";
    case Kind::kGeometric: return "1/(1-(" + scalar.to_string() + ")" + mono_string(exps) + ")";
    case Kind::kB: return "B" + std::to_string(gen) + "(" + formal_var_name(var) + ")";
    case Kind::kTheta: return "Theta" + std::to_string(gen) + "(" + formal_var_name(var) + ")";
    case Kind::kK: return "K" + std::to_string(gen);
    case Kind::kKinv: return "K" + std::to_string(gen) + "^-1";
  }
  return "?";
}

std::string TermExpr::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? " " : "") + factors[k].to_string();
  return s;
}

TermSum& TermSum::operator+=(const TermSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

TermSum& TermSum::operator-=(const TermSum& o) { return *this += QScalar(-1) * o; }

TermSum operator*(const TermSum& a, const TermSum& b) {
  TermSum r;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      TermExpr t = x;
      t.factors.insert(t.factors.end(), y.factors.begin(), y.factors.end());
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

TermSum operator*(const QScalar& c, const TermSum& a) { return scalar(c) * a; }

TermSum TermSum::swapped(FormalVar a, FormalVar b) const {
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  TermSum r = *this;
  for (auto& t : r.terms_) {
    for (auto& f : t.factors) {
      std::swap(f.exps[ia], f.exps[ib]);
      if (f.var == a) f.var = b;
      else if (f.var == b) f.var = a;
    }
  }
  return r;
}

std::vector<FormalVar> TermSum::variables() const {
  std::set<int> seen;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) {
      if (f.kind == Factor::Kind::kB || f.kind == Factor::Kind::kTheta) seen.insert(static_cast<int>(f.var));
      for (int v = 0; v < kNumFormalVars; ++v)
        if (f.exps[v] != 0) seen.insert(v);
    }
  }
  std::vector<FormalVar> out;
  for (int v : seen) out.push_back(static_cast<FormalVar>(v));
  return out;
}

std::string TermSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) s += (k ? "\n + " : "") + terms_[k].to_string();
  return s;
}

TermSum scalar(const QScalar& c) {
  Factor f;
  f.kind = Factor::Kind::kScalar;
  f.scalar = c;
  return TermSum(TermExpr{{f}});
}

TermSum monomial(const FormalMono& e, const QScalar& c) {
  Factor f;
  f.kind = Factor::Kind::kMonomial;
  f.exps = e;
  TermExpr t{{f}};
  if (!c.is_one()) t.factors.insert(t.factors.begin(), scalar(c).terms()[0].factors[0]);
  return TermSum(std::move(t));
}

TermSum delta(const QScalar& alpha, const FormalMono& e) {
  Factor f;
  f.kind = Factor::Kind::kDelta;
  f.scalar = alpha;
  f.exps = e;
  return TermSum(TermExpr{{f}});
}

TermSum geometric(const QScalar& alpha, const FormalMono& e) {
  Factor f;
  f.kind = Factor::Kind::kGeometric;
  f.scalar = alpha;
  f.exps = e;
  return TermSum(TermExpr{{f}});
}

namespace {

TermSum op_factor(Factor::Kind kind, int i, FormalVar u) {
  Factor f;
  f.kind = kind;
  f.gen = i;
  f.var = u;
  return TermSum(TermExpr{{f}});
}

}  // namespace

TermSum B(int i, FormalVar u) { return op_factor(Factor::Kind::kB, i, u); }
TermSum Theta(int i, FormalVar u) { return op_factor(Factor::Kind::kTheta, i, u); }
TermSum K(int i) { return op_factor(Factor::Kind::kK, i, FormalVar::kZ); }
TermSum Kinv(int i) { return op_factor(Factor::Kind::kKinv, i, FormalVar::kZ); }

TermSum sym_w1w2(const TermSum& t) { return t + t.swapped(FormalVar::kW1, FormalVar::kW2); }

std::vector<ModeTerm> extract_mode(const TermSum& t, const Degrees& degrees) {
  static const QScalar gap = QScalar::q_pow(1) - QScalar::q_pow(-1);
  std::map<Word, QScalar> acc;
  for (const auto& term : t.terms()) {
    Solver solver(term, degrees);
    const auto& idx = solver.indices();
    solver.run([&](const std::vector<i64>& values) {
      std::vector<i64> at(term.factors.size(), 0);
      for (std::size_t j = 0; j < idx.size(); ++j) at[idx[j].factor] = values[j];
      QScalar c(1);
      Word w;
      for (std::size_t f = 0; f < term.factors.size(); ++f) {
        const Factor& x = term.factors[f];
        const int k = static_cast<int>(at[f]);
        switch (x.kind) {
          case Factor::Kind::kScalar: c *= x.scalar; break;
          case Factor::Kind::kMonomial: break;
          case Factor::Kind::kDelta:
          case Factor::Kind::kGeometric: c *= x.scalar.pow(k); break;
          case Factor::Kind::kB:
            c *= QScalar::q_pow(k * x.gen);
            w.push_back(GeneratorMode::B(x.gen, k));
            break;
          case Factor::Kind::kTheta:
            if (k > 0) {
              c *= gap;
              w.push_back(GeneratorMode::Theta(x.gen, k));
            }
            break;
          case Factor::Kind::kK: w.push_back(GeneratorMode::K(x.gen)); break;
          case Factor::Kind::kKinv: w.push_back(GeneratorMode::Kinv(x.gen)); break;
        }
      }
      auto [it, fresh] = acc.emplace(std::move(w), c);
      if (!fresh) it->second += c;
    });
  }
  std::vector<ModeTerm> out;
  for (auto& [w, c] : acc)
    if (!c.is_zero()) out.emplace_back(c, w);
  return out;
}

std::size_t extraction_size(const TermSum& t, const Degrees& degrees) {
  std::size_t n = 0;
  for (const auto& term : t.terms()) {
    Solver solver(term, degrees);
    solver.run([&](const std::vector<i64>&) { ++n; });
  }
  return n;
}

}  // namespace iqpoly::relcheck
