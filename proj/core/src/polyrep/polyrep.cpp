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

#include "iqpoly/polyrep/polyrep.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "iqpoly/errors.hpp"
#include "iqpoly/exactring/serialize.hpp"
#include "iqpoly/exactring/weyl.hpp"

namespace iqpoly {

namespace {

const char* kind_tag(GeneratorMode::Kind k) {
  switch (k) {
    case GeneratorMode::Kind::kB: return "B";
    case GeneratorMode::Kind::kTheta: return "Theta";
    case GeneratorMode::Kind::kK: return "K";
    case GeneratorMode::Kind::kKinv: return "Kinv";
    case GeneratorMode::Kind::kH: return "H";
  }
  return "?";
}

int parse_int(const std::string& s, const std::string& whole) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw InvalidArgument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("bad integer '" + s + "' in generator mode '" + whole + "'");
  }
}

bool is_invariant_under(const ParabolicSpec& P, const LaurentPoly& f) {
  return P.generators().empty() || P.is_invariant(f);
}

}  // namespace

GeneratorMode GeneratorMode::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw InvalidArgument("empty generator mode");
  const std::string& tag = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count) throw InvalidArgument("generator mode '" + s + "' has the wrong number of fields");
  };
  if (tag == "B") {
    need(3);
    return B(parse_int(parts[1], s), parse_int(parts[2], s));
  }
  if (tag == "Theta") {
    need(3);
    return Theta(parse_int(parts[1], s), parse_int(parts[2], s));
  }
  if (tag == "H") {
    need(3);
    return H(parse_int(parts[1], s), parse_int(parts[2], s));
  }
  if (tag == "K") {
    need(2);
    return K(parse_int(parts[1], s));
  }
  if (tag == "Kinv") {
    need(2);
    return Kinv(parse_int(parts[1], s));
  }
  throw InvalidArgument("unknown generator '" + tag + "' (expected B, Theta, K, Kinv or H)");
}

std::string GeneratorMode::to_string() const {
  std::string s = std::string(kind_tag(kind)) + ":" + std::to_string(i);
  if (kind == Kind::kB || kind == Kind::kTheta || kind == Kind::kH) s += ":" + std::to_string(m);
  return s;
}

void GeneratorMode::validate(const Variant& var) const {
  if (i < 1 || i > var.N() - 1)
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(var.N() - 1));
  if (kind == Kind::kTheta && m < 1) throw InvalidArgument("Theta modes start at m = 1");
  if (kind == Kind::kH && m < 1) throw InvalidArgument("H modes start at k = 1");
  if (kind == Kind::kH && var.kind != VariantKind::kCOdd) throw InvalidArgument("H is only provided for c-odd");
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].to_string();
  return s;
}

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement ModuleElement::single(const Variant& var, const Composition& v, LaurentPoly f) {
  ModuleElement e(var);
  e.add(v, f);
  return e;
}

LaurentPoly ModuleElement::component(const Composition& v) const {
  auto it = comps_.find(v);
  return it == comps_.end() ? LaurentPoly(var_.d) : it->second;
}

void ModuleElement::add(const Composition& v, const LaurentPoly& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = comps_.try_emplace(v, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) comps_.erase(it);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [v, f] : o.comps_) add(v, f);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [v, f] : comps_) f *= c;
  return *this;
}

ModuleElement operator-(ModuleElement a, const ModuleElement& b) {
  for (const auto& [v, f] : b.comps_) a.add(v, -f);
  return a;
}

std::string ModuleElement::to_string() const {
  if (comps_.empty()) return "0";
  std::string s;
  for (const auto& [v, f] : comps_) {
    if (!s.empty()) s += "\n";
    s += "(" + iqpoly::to_string(v) + ") " + f.to_string();
  }
  return s;
}

nlohmann::json ModuleElement::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [v, f] : comps_)
    arr.push_back({{"v", v}, {"text", f.to_string()}, {"poly", serial::to_json(f)}});
  return arr;
}

// ---------------------------------------------------------------------------
// Representation

struct Representation::BTerm {
  LaurentPoly xj;                // x_j
  RatFn phi;                     // Phi_{[v]_i \ j}(q x_j)
  std::vector<int> images;       // slot map for f(x_{tau_j^+ [v]})
};

struct Representation::Caches {
  std::mutex mu;
  std::map<std::pair<int, Composition>, std::vector<BTerm>> b_terms;
  std::map<std::pair<int, Composition>, std::vector<LaurentPoly>> theta;
  std::map<Composition, ParabolicSpec> parabolics;
};

Representation::Representation(Variant var, PolyrepOptions opts)
    : var_(var), opts_(opts), caches_(std::make_unique<Caches>()) {}

Representation::~Representation() = default;

QScalar Representation::k_scalar(int i, const Composition& v) const {
  const int e = v[i] - v[i - 1];
  if (var_.kind == VariantKind::kCOdd) return QScalar::q_pow(e + (i == var_.n ? 1 : 0));
  return i == var_.n ? -QScalar::q_pow(e + 1) : QScalar::q_pow(e);
}

ZRatFn Representation::theta_ratfn(int i, const Composition& v) const {
  const int d = var_.d, n = var_.n;
  const BlockPartition I = blocks(var_, v);
  auto cst = [&](const QScalar& c) { return LaurentPoly::constant(d, c); };
  const LaurentPoly one = cst(QScalar(1));
  ZPoly num = ZPoly::constant(one), den = ZPoly::constant(one);
  // Phi_S(c/z) = prod_t (q c - x_t z) / (c - q x_t z).
  const QScalar c1 = QScalar::q_pow(1 - i), c2 = QScalar::q_pow(-1 - i);
  for (int t : I[i - 1]) {
    const LaurentPoly x = LaurentPoly::variable(d, t);
    num = num * ZPoly::linear(cst(QScalar::q_pow(1) * c1), -x);
    den = den * ZPoly::linear(cst(c1), -(x * QScalar::q_pow(1)));
  }
  for (int t : I[i]) {
    const LaurentPoly x = LaurentPoly::variable(d, t);
    num = num * ZPoly::linear(cst(c2), -(x * QScalar::q_pow(1)));
    den = den * ZPoly::linear(cst(QScalar::q_pow(1) * c2), -x);
  }
  int e = v[i] - v[i - 1];
  if (var_.kind == VariantKind::kCOdd) {
    if (i == n + 1) {
      num = num * (ZPoly::constant(one) - ZPoly::monomial(cst(QScalar::q_pow(2 * n)), 2));
      den = den * (ZPoly::constant(one) - ZPoly::monomial(cst(QScalar::q_pow(2 * n + 2)), 2));
    }
  } else if (i == n) {
    e += 1;
    // theta_1(q^{2n-1} z^2) = (q^{2n} z^2 - 1) / (q^{2n-1} z^2 - q)
    num = num * (ZPoly::monomial(cst(QScalar::q_pow(2 * n)), 2) - ZPoly::constant(one));
    den = den * (ZPoly::monomial(cst(QScalar::q_pow(2 * n - 1)), 2) - ZPoly::constant(cst(QScalar::q_pow(1))));
  }
  num = num * ZPoly::constant(cst(QScalar::q_pow(e)));
  return ZRatFn::fraction(num, den);
}

LaurentPoly Representation::theta_series_coeff(int i, const Composition& v, int m) const {
  if (m < 0) return LaurentPoly(var_.d);
  const auto key = std::make_pair(i, v);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->theta.find(key);
    if (it != caches_->theta.end() && static_cast<int>(it->second.size()) > m) return it->second[m];
  }
  // Slots may be replaced by a longer expansion from another thread, so
  // only copies leave the lock.
  const int want = std::max(2 * m, 8);
  const ZSeries s = expand_series(theta_ratfn(i, v), ExpansionPoint::kZero, want);
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(want + 1), LaurentPoly(var_.d));
  for (int k = 0; k <= want; ++k) coeffs[k] = s.at(k, var_.d);
  std::lock_guard<std::mutex> lock(caches_->mu);
  auto& slot = caches_->theta[key];
  if (slot.size() < coeffs.size()) slot = std::move(coeffs);
  return slot[m];
}

LaurentPoly Representation::theta_multiplier(int i, const Composition& v, int m) const {
  if (m < 1) throw InvalidArgument("Theta modes start at m = 1");
  static const QScalar inv_gap = (QScalar::q_pow(1) - QScalar::q_pow(-1)).inverse();
  return theta_series_coeff(i, v, m) * inv_gap;
}

LaurentPoly Representation::h_multiplier(int i, const Composition& v, int k) const {
  if (var_.kind != VariantKind::kCOdd) throw InvalidArgument("H is only provided for c-odd");
  if (k < 1) throw InvalidArgument("H modes start at k = 1");
  const int d = var_.d, n = var_.n;
  const BlockPartition I = blocks(var_, v);
  LaurentPoly power_sum(d);
  for (int t : I[i - 1]) power_sum += LaurentPoly::variable(d, t).pow(k);
  for (int t : I[i]) power_sum -= LaurentPoly::variable(d, t).pow(k) * QScalar::q_pow(2 * k);
  const QScalar kk(k);
  LaurentPoly h = power_sum * (QScalar::q_int(k) * QScalar::q_pow((i - 1) * k) / kk);
  if (i == n + 1 && k % 2 == 0) {
    const QScalar gap = QScalar::q_pow(1) - QScalar::q_pow(-1);
    QScalar extra = opts_.h_formula == HFormula::kCorrected
                        ? QScalar(2) * (QScalar::q_pow((n + 1) * k) - QScalar::q_pow(n * k))
                        : QScalar::q_pow((2 * n + 2) * k) - QScalar::q_pow(2 * n * k);
    h += LaurentPoly::constant(d, extra / (kk * gap));
  }
  return h;
}

const std::vector<Representation::BTerm>& Representation::b_terms(int i, const Composition& target) const {
  const auto key = std::make_pair(i, target);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->b_terms.find(key);
    if (it != caches_->b_terms.end()) return it->second;
  }
  const int d = var_.d;
  const BlockPartition I = blocks(var_, target);
  std::vector<BTerm> terms;
  for (int j : I[i - 1]) {
    BTerm t;
    t.xj = LaurentPoly::variable(d, j);
    std::vector<int> rest;
    for (int s : I[i - 1])
      if (s != j) rest.push_back(s);
    t.phi = phi_product(rest, RatFn(t.xj * QScalar::q_pow(1)));
    std::vector<int> lst = listing(tau_plus(var_, I, j));
    t.images.assign(lst.begin(), lst.begin() + d);
    terms.push_back(std::move(t));
  }
  std::lock_guard<std::mutex> lock(caches_->mu);
  return caches_->b_terms.emplace(key, std::move(terms)).first->second;
}

LaurentPoly Representation::b_component(int i, int r, const Composition& target, const LaurentPoly& f) const {
  const Composition source = b_source(var_, target, i);
  if (!is_valid(var_, target) || !is_valid(var_, source))
    throw InvalidArgument("no B_" + std::to_string(i) + " step into (" + to_string(target) + ")");
  if (f.is_zero()) return LaurentPoly(var_.d);
  if (opts_.check_invariance && !is_invariant_under(parabolic(var_, source), f))
    throw InvarianceError("B input at (" + to_string(source) + ") is not W-invariant: " + f.to_string());
  stats_.evaluations.fetch_add(1, std::memory_order_relaxed);
  RatFn sum;
  for (const BTerm& t : b_terms(i, target)) {
    RatFn term = t.phi;
    term *= t.xj.pow(r) * substitute_slots(f, t.images);
    sum = sum.dim() == 0 ? term : sum + term;
  }
  auto out = sum.to_laurent();
  if (!out) {
    stats_.denominator_failures.fetch_add(1, std::memory_order_relaxed);
    throw DenominatorError("B_" + std::to_string(i) + "," + std::to_string(r) + " at (" + to_string(target) +
                           ") left a denominator: " + sum.to_string());
  }
  if (opts_.check_invariance && !is_invariant_under(parabolic(var_, target), *out)) {
    stats_.invariance_failures.fetch_add(1, std::memory_order_relaxed);
    throw InvarianceError("B output at (" + to_string(target) + ") is not W-invariant: " + out->to_string());
  }
  if (out->dim() == 0) return LaurentPoly(var_.d);
  return *out;
}

ModuleElement Representation::apply_K(int i, const ModuleElement& e) const {
  ModuleElement out(var_);
  for (const auto& [v, f] : e.components()) out.add(v, f * k_scalar(i, v));
  return out;
}

ModuleElement Representation::apply_Kinv(int i, const ModuleElement& e) const {
  ModuleElement out(var_);
  for (const auto& [v, f] : e.components()) out.add(v, f * k_scalar(i, v).inverse());
  return out;
}

ModuleElement Representation::apply_theta(int i, int m, const ModuleElement& e) const {
  ModuleElement out(var_);
  for (const auto& [v, f] : e.components()) out.add(v, f * theta_multiplier(i, v, m));
  return out;
}

ModuleElement Representation::apply_H(int i, int k, const ModuleElement& e) const {
  ModuleElement out(var_);
  for (const auto& [v, f] : e.components()) out.add(v, f * h_multiplier(i, v, k));
  return out;
}

ModuleElement Representation::apply_B(int i, int r, const ModuleElement& e) const {
  ModuleElement out(var_);
  for (const auto& [src, f] : e.components()) {
    const Composition target = b_target(var_, src, i);
    if (!is_valid(var_, target)) continue;
    out.add(target, b_component(i, r, target, f));
  }
  return out;
}

ModuleElement Representation::apply(const GeneratorMode& g, const ModuleElement& e) const {
  g.validate(var_);
  switch (g.kind) {
    case GeneratorMode::Kind::kB: return apply_B(g.i, g.m, e);
    case GeneratorMode::Kind::kTheta: return apply_theta(g.i, g.m, e);
    case GeneratorMode::Kind::kK: return apply_K(g.i, e);
    case GeneratorMode::Kind::kKinv: return apply_Kinv(g.i, e);
    case GeneratorMode::Kind::kH: return apply_H(g.i, g.m, e);
  }
  return e;
}

ModuleElement Representation::apply_word(const Word& w, const ModuleElement& e) const {
  ModuleElement cur = e;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply(*it, cur);
  return cur;
}

std::vector<LaurentPoly> Representation::spanning_set(const Composition& v, int bound) const {
  if (bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  const int d = var_.d;
  const ParabolicSpec P = parabolic(var_, v);
  const std::vector<WeylElement> group = P.elements();
  std::vector<Exponent> monos;
  Exponent e{};
  for (int k = 0; k < d; ++k) e[k] = static_cast<std::int16_t>(-bound);
  while (true) {
    monos.push_back(e);
    int k = d - 1;
    while (k >= 0 && e[k] == bound) e[k--] = static_cast<std::int16_t>(-bound);
    if (k < 0) break;
    ++e[k];
  }
  auto weight = [&](const Exponent& x) {
    int s = 0;
    for (int k = 0; k < d; ++k) s += std::abs(x[k]);
    return s;
  };
  std::stable_sort(monos.begin(), monos.end(),
                   [&](const Exponent& a, const Exponent& b) { return std::make_tuple(weight(a), a) < std::make_tuple(weight(b), b); });
  std::set<LaurentPoly> seen;
  std::vector<LaurentPoly> out;
  for (const Exponent& x : monos) {
    const LaurentPoly m = LaurentPoly::monomial(d, x);
    std::set<LaurentPoly> orbit;
    for (const auto& g : group) orbit.insert(weyl_act(g, m));
    LaurentPoly sum(d);
    for (const auto& o : orbit) sum += o;
    if (seen.insert(sum).second) out.push_back(sum);
  }
  return out;
}

}  // namespace iqpoly
