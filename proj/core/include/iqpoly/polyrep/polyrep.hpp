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

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/exactring/laurent_poly.hpp"
#include "iqpoly/exactring/rat_fn.hpp"
#include "iqpoly/exactring/z_series.hpp"

namespace iqpoly {

/// One generator mode: B(i, r), Theta(i, m), K(i), Kinv(i) or H(i, k).
struct GeneratorMode {
  enum class Kind { kB, kTheta, kK, kKinv, kH };
  Kind kind = Kind::kK;
  int i = 1;
  int m = 0;  // r for B, m for Theta, k for H; unused for K and Kinv

  static GeneratorMode B(int i, int r) { return {Kind::kB, i, r}; }
  static GeneratorMode Theta(int i, int m) { return {Kind::kTheta, i, m}; }
  static GeneratorMode K(int i) { return {Kind::kK, i, 0}; }
  static GeneratorMode Kinv(int i) { return {Kind::kKinv, i, 0}; }
  static GeneratorMode H(int i, int k) { return {Kind::kH, i, k}; }

  /// "B:1:0", "Theta:1:2", "K:2", "Kinv:2", "H:1:2".
  static GeneratorMode parse(const std::string& s);
  std::string to_string() const;
  void validate(const Variant& var) const;

  auto operator<=>(const GeneratorMode&) const = default;
};

/// A product of modes; the last entry acts first.
using Word = std::vector<GeneratorMode>;
std::string to_string(const Word& w);

/// A vector of P: finitely many components f_v, each W_[v]-invariant.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(Variant var) : var_(var) {}
  static ModuleElement single(const Variant& var, const Composition& v, LaurentPoly f);

  const Variant& variant() const { return var_; }
  const std::map<Composition, LaurentPoly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  LaurentPoly component(const Composition& v) const;

  void add(const Composition& v, const LaurentPoly& f);
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator*=(const QScalar& c);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b);
  friend ModuleElement operator*(const QScalar& c, ModuleElement a) { return a *= c; }

  bool operator==(const ModuleElement& o) const { return comps_ == o.comps_; }
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }

  /// One "(v) f" line per component, or "0".
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  Variant var_;
  std::map<Composition, LaurentPoly> comps_;
};

/// How the delta_{i,n+1} correction in the H multiplier is written.
/// kCorrected is the series-consistent 2(q^{(n+1)k} - q^{nk}) / (k(q - q^-1));
/// kLiteral keeps (q^{(2n+2)k} - q^{2nk}) / (k(q - q^-1)) for comparison.
enum class HFormula { kCorrected, kLiteral };

struct PolyrepOptions {
  HFormula h_formula = HFormula::kCorrected;
  bool check_invariance = true;
};

/// Counters for every B evaluation; they back the well-definedness report.
struct WellDefinedness {
  std::atomic<std::uint64_t> evaluations{0};
  std::atomic<std::uint64_t> denominator_failures{0};
  std::atomic<std::uint64_t> invariance_failures{0};
};

/// The operators on P for one variant.  Caches are internal and guarded,
/// so a Representation can be shared across worker threads.
class Representation {
 public:
  explicit Representation(Variant var, PolyrepOptions opts = {});
  ~Representation();
  Representation(const Representation&) = delete;
  Representation& operator=(const Representation&) = delete;

  const Variant& variant() const { return var_; }
  const PolyrepOptions& options() const { return opts_; }
  const WellDefinedness& stats() const { return stats_; }

  QScalar k_scalar(int i, const Composition& v) const;
  /// The rational function whose z = 0 expansion is Theta_i on component v.
  ZRatFn theta_ratfn(int i, const Composition& v) const;
  /// Coefficient of z^m (m >= 0) in that expansion.
  LaurentPoly theta_series_coeff(int i, const Composition& v, int m) const;
  /// Theta_{i,m} multiplier: the z^m coefficient over (q - q^-1), m >= 1.
  LaurentPoly theta_multiplier(int i, const Composition& v, int m) const;
  LaurentPoly h_multiplier(int i, const Composition& v, int k) const;

  /// B_{i,r} on one component: f lives at b_source(target, i).
  LaurentPoly b_component(int i, int r, const Composition& target, const LaurentPoly& f) const;

  ModuleElement apply_K(int i, const ModuleElement& e) const;
  ModuleElement apply_Kinv(int i, const ModuleElement& e) const;
  ModuleElement apply_theta(int i, int m, const ModuleElement& e) const;
  ModuleElement apply_B(int i, int r, const ModuleElement& e) const;
  ModuleElement apply_H(int i, int k, const ModuleElement& e) const;
  ModuleElement apply(const GeneratorMode& g, const ModuleElement& e) const;
  ModuleElement apply_word(const Word& w, const ModuleElement& e) const;

  /// W_[v]-orbit sums of the monomials with every |exponent| <= bound,
  /// deduplicated, ordered by total degree and then lexicographically.
  std::vector<LaurentPoly> spanning_set(const Composition& v, int bound) const;

 private:
  struct BTerm;
  struct Caches;

  const std::vector<BTerm>& b_terms(int i, const Composition& target) const;

  Variant var_;
  PolyrepOptions opts_;
  mutable WellDefinedness stats_;
  std::unique_ptr<Caches> caches_;
};

}  // namespace iqpoly
