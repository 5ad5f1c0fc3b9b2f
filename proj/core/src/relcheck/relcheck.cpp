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

#include "iqpoly/relcheck/relcheck.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "iqpoly/errors.hpp"
#include "iqpoly/exactring/rat_fn.hpp"
#include "iqpoly/exactring/z_series.hpp"

namespace iqpoly::relcheck {

namespace {

QScalar qp(int k) { return QScalar::q_pow(k); }

class WordEvaluator {
 public:
  WordEvaluator(const Representation& rep, ModuleElement base) : rep_(rep), base_(std::move(base)) {}

  const ModuleElement& eval(const Word& w) {
    if (w.empty()) return base_;
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const Word tail(w.begin() + 1, w.end());
    ModuleElement r = rep_.apply(w.front(), eval(tail));
    return memo_.emplace(w, std::move(r)).first->second;
  }

  ModuleElement combine(const std::vector<ModeTerm>& terms) {
    ModuleElement acc(rep_.variant());
    for (const auto& [c, w] : terms) acc += c * eval(w);
    return acc;
  }

 private:
  const Representation& rep_;
  ModuleElement base_;
  std::map<Word, ModuleElement> memo_;
};

CheckReport blank_report(const RelationSpec& spec, const Variant& var, const Degrees& mode) {
  CheckReport r;
  r.relation = relation_name(spec.id);
  r.part = spec.part;
  r.variant = var.to_string();
  r.i = spec.i;
  r.j = spec.j;
  r.mode = mode;
  return r;
}

void record_failure(CheckReport& r, const std::string& vector_id, nlohmann::json lhs, nlohmann::json rhs) {
  if (r.failures++ == 0) {
    r.first_failure = vector_id;
    r.witness_lhs = std::move(lhs);
    r.witness_rhs = std::move(rhs);
  }
}

// Phi_S(c / z) as a rational function of z: prod (q c - x_t z) / (c - q x_t z).
ZRatFn phi_over_z(int d, const std::vector<int>& S, const QScalar& c) {
  ZPoly num = ZPoly::constant(LaurentPoly::constant(d, QScalar(1)));
  ZPoly den = num;
  for (int t : S) {
    const LaurentPoly xt = LaurentPoly::variable(d, t);
    num = num * ZPoly::linear(LaurentPoly::constant(d, qp(1) * c), -xt);
    den = den * ZPoly::linear(LaurentPoly::constant(d, c), xt * QScalar(-1) * qp(1));
  }
  return ZRatFn::fraction(num, den);
}

// Phi_S(c z) as a rational function of z: prod (q c z - x_t) / (c z - q x_t).
ZRatFn phi_times_z(int d, const std::vector<int>& S, const QScalar& c) {
  ZPoly num = ZPoly::constant(LaurentPoly::constant(d, QScalar(1)));
  ZPoly den = num;
  for (int t : S) {
    const LaurentPoly xt = LaurentPoly::variable(d, t);
    num = num * ZPoly::linear(-xt, LaurentPoly::constant(d, qp(1) * c));
    den = den * ZPoly::linear(xt * QScalar(-1) * qp(1), LaurentPoly::constant(d, c));
  }
  return ZRatFn::fraction(num, den);
}

std::vector<int> without(const std::vector<int>& S, int r) {
  std::vector<int> out;
  for (int t : S)
    if (t != r) out.push_back(t);
  return out;
}

RatFn rat(const LaurentPoly& p) { return RatFn(p); }

// Both sides of the lemma on one component, indexed by (a, b) in the window.
struct LemmaSides {
  std::map<std::pair<int, int>, LaurentPoly> lhs, rhs;
  std::map<std::pair<int, int>, std::string> lhs_error;
};

LemmaSides lemma_sides(const Variant& var, const Composition& v, int window) {
  const int d = var.d, n = var.n;
  const BlockPartition I = blocks(var, v);
  const std::vector<int>& In = I[n - 1];
  const std::vector<int>& In1 = I[n];
  LemmaSides out;

  // Delta-supported side: one Phi weight per index, then the (a, b)
  // coefficient of (z - q^-1 w) delta(...) delta(...).
  std::vector<std::pair<int, RatFn>> wr, ws;
  for (int r : In) {
    const LaurentPoly xr = LaurentPoly::variable(d, r);
    wr.emplace_back(r, phi_product(without(In, r), rat(xr * qp(1))) * phi_product(In1, rat(xr.monomial_inverse() * qp(1))));
  }
  for (int s : In1) {
    const LaurentPoly xs = LaurentPoly::variable(d, s);
    ws.emplace_back(s, phi_product(In, rat(xs.monomial_inverse() * qp(1))) * phi_product(without(In1, s), rat(xs * qp(1))));
  }
  for (int a = -window; a <= window; ++a) {
    for (int b = -window; b <= window; ++b) {
      RatFn acc{LaurentPoly(d)};
      for (const auto& [r, wt] : wr) {
        const LaurentPoly xr = LaurentPoly::variable(d, r);
        const LaurentPoly c = xr.pow(a - 1 - b) * qp(n * (a - 1) + (n + 1) * b) -
                              xr.pow(a - b + 1) * qp(-1 + n * a + (n + 1) * (b - 1));
        acc = acc + wt * rat(c);
      }
      for (const auto& [s, wt] : ws) {
        const LaurentPoly xs = LaurentPoly::variable(d, s);
        const LaurentPoly c = xs.pow(b - a + 1) * qp(n * (a - 1) + (n + 1) * b) -
                              xs.pow(b - 1 - a) * qp(-1 + n * a + (n + 1) * (b - 1));
        acc = acc + (-(wt * rat(c)));
      }
      if (auto p = acc.to_laurent()) {
        out.lhs[{a, b}] = *p;
      } else {
        out.lhs_error[{a, b}] = "left side is not a Laurent polynomial: " + acc.to_string();
      }
    }
  }

  // Closed-form side.
  const int order = 2 * window + 2;
  const ZSeries A = expand_series(phi_over_z(d, In, qp(1 - n)) / phi_over_z(d, In1, qp(-1 - n)), ExpansionPoint::kZero, order);
  const ZRatFn prefactor = ZRatFn::fraction(
      ZPoly::constant(LaurentPoly::constant(d, qp(1))) - ZPoly::monomial(LaurentPoly::constant(d, qp(2 * n + 1)), 2),
      ZPoly::constant(LaurentPoly::constant(d, QScalar(1))) -
          ZPoly::monomial(LaurentPoly::constant(d, qp(2 * n + 2)), 2));
  const ZSeries Bw = expand_series(prefactor * phi_times_z(d, In, qp(n + 2)) / phi_times_z(d, In1, qp(n)),
                                   ExpansionPoint::kZero, order);
  const QScalar scale = (QScalar(1) - qp(2)).inverse();
  for (int a = -window; a <= window; ++a) {
    for (int b = -window; b <= window; ++b) {
      LaurentPoly acc(d);
      // delta(q^N zw) (w - q z) A(z): z^{k + alpha} w^{k + beta}.
      for (int beta = 0; beta <= 1; ++beta) {
        const int k = b - beta, alpha = a - k;
        const LaurentPoly c = beta == 1 ? A.at(alpha, d) : A.at(alpha - 1, d) * QScalar(-1) * qp(1);
        acc += c * qp(var.N() * k);
      }
      // delta(q^N zw) (z - q w) B(w).
      for (int alpha = 0; alpha <= 1; ++alpha) {
        const int k = a - alpha, beta = b - k;
        const LaurentPoly c = alpha == 1 ? Bw.at(beta, d) : Bw.at(beta - 1, d) * QScalar(-1) * qp(1);
        acc += c * qp(var.N() * k);
      }
      out.rhs[{a, b}] = acc * scale;
    }
  }
  return out;
}

CheckReport identity_report(const std::string& part, const RatFn& expr) {
  CheckReport r;
  r.relation = "theta1_identity";
  r.part = part;
  r.variant = "any";
  r.vectors = 1;
  if (!expr.is_zero()) {
    r.failures = 1;
    r.first_failure = "rational";
    r.witness_lhs = expr.to_string();
    r.witness_rhs = "0";
  }
  return r;
}

}  // namespace

std::vector<TestVector> test_vectors(const Representation& rep, const CheckConfig& cfg) {
  std::vector<TestVector> out;
  std::mt19937_64 rng(cfg.seed);
  for (const auto& v : enum_compositions(rep.variant())) {
    const auto span = rep.spanning_set(v, cfg.degree_bound);
    std::vector<std::size_t> pick(span.size());
    for (std::size_t k = 0; k < pick.size(); ++k) pick[k] = k;
    const auto cap = static_cast<std::size_t>(cfg.max_vectors_per_component);
    if (cap > 0 && pick.size() > cap) {
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(cap);
      std::sort(pick.begin(), pick.end());
    }
    for (std::size_t k : pick) out.push_back({to_string(v) + ":" + std::to_string(k), v, span[k]});
  }
  return out;
}

TestVector find_vector(const Representation& rep, const std::string& id, int degree_bound) {
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw InvalidArgument("vector id must look like '0,2,0:1'");
  const Composition v = parse_composition(id.substr(0, colon));
  if (!is_valid(rep.variant(), v)) throw InvalidArgument("composition " + to_string(v) + " is not valid here");
  std::size_t idx = 0;
  try {
    idx = static_cast<std::size_t>(std::stoul(id.substr(colon + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("bad vector index in '" + id + "'");
  }
  const auto span = rep.spanning_set(v, degree_bound);
  if (idx >= span.size())
    throw InvalidArgument("vector index " + std::to_string(idx) + " out of range (" + std::to_string(span.size()) +
                          " spanning vectors)");
  return {id, v, span[idx]};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json mode = nlohmann::json::object();
  for (const auto& [u, deg] : r.mode) mode[formal_var_name(u)] = deg;
  nlohmann::json j = {
      {"relation", r.relation}, {"part", r.part},         {"variant", r.variant},
      {"i", r.i},               {"j", r.j},               {"mode", mode},
      {"vectors", r.vectors},   {"failures", r.failures}, {"lhs_terms", r.lhs_terms},
      {"rhs_terms", r.rhs_terms}, {"status", r.pass() ? "pass" : "fail"},
  };
  if (!r.pass()) {
    j["first_failure"] = r.first_failure;
    if (!r.error.empty()) j["error"] = r.error;
    j["witness"] = {{"lhs", r.witness_lhs}, {"rhs", r.witness_rhs}};
  }
  return j;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  os << (r.pass() ? "pass " : "FAIL ") << r.relation;
  if (!r.part.empty()) os << "[" << r.part << "]";
  os << " " << r.variant << " (" << r.i << "," << r.j << ") mode";
  for (const auto& [u, deg] : r.mode) os << " " << formal_var_name(u) << "=" << deg;
  os << " vectors=" << r.vectors;
  if (!r.pass()) {
    os << " failures=" << r.failures << " first=" << r.first_failure;
    if (!r.error.empty()) os << " error=" << r.error;
  }
  return os.str();
}

std::vector<Degrees> mode_grid(const std::vector<FormalVar>& vars, int window) {
  std::vector<Degrees> out{Degrees{}};
  for (FormalVar u : vars) {
    std::vector<Degrees> next;
    for (const auto& base : out) {
      for (int e = -window; e <= window; ++e) {
        Degrees d = base;
        d[u] = e;
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<CheckReport> check_spec(const Representation& rep, const RelationSpec& spec,
                                    const std::vector<TestVector>& vectors, int window) {
  const Variant& var = rep.variant();
  const auto grid = mode_grid(spec.vars, window);
  std::vector<CheckReport> reports;
  std::vector<std::pair<std::vector<ModeTerm>, std::vector<ModeTerm>>> sides;
  reports.reserve(grid.size());
  for (const auto& mode : grid) {
    CheckReport r = blank_report(spec, var, mode);
    std::vector<ModeTerm> L, R;
    try {
      L = extract_mode(spec.lhs, mode);
      R = extract_mode(spec.rhs, mode);
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.lhs_terms = L.size();
    r.rhs_terms = R.size();
    reports.push_back(std::move(r));
    sides.emplace_back(std::move(L), std::move(R));
  }
  for (const auto& tv : vectors) {
    WordEvaluator ev(rep, ModuleElement::single(var, tv.v, tv.f));
    for (std::size_t m = 0; m < grid.size(); ++m) {
      CheckReport& r = reports[m];
      if (!r.error.empty()) continue;
      ++r.vectors;
      try {
        const ModuleElement L = ev.combine(sides[m].first);
        const ModuleElement R = ev.combine(sides[m].second);
        if (L != R) record_failure(r, tv.id, L.to_json(), R.to_json());
      } catch (const Error& e) {
        record_failure(r, tv.id, nlohmann::json{{"error", e.what()}}, nullptr);
      }
    }
  }
  return reports;
}

std::vector<CheckReport> check_relations(const Representation& rep, const std::vector<RelationSpec>& specs,
                                         const CheckConfig& cfg) {
  const auto vectors = test_vectors(rep, cfg);
  std::vector<std::vector<CheckReport>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < specs.size(); k = next++) {
      const int window = specs[k].vars.size() >= 3 ? cfg.three_var_window : cfg.mode_window;
      slots[k] = check_spec(rep, specs[k], vectors, window);
    }
  };
  const int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(specs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<CheckReport> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

std::vector<CheckReport> check_theta_lemma(const Representation& rep, const CheckConfig& cfg) {
  const Variant& var = rep.variant();
  if (var.kind != VariantKind::kCOdd) throw InvalidArgument("the K Theta lemma is stated for c-odd");
  const int n = var.n, W = cfg.mode_window;
  const RelationSpec taum1 = build_relation(RelationId::kR_BB_taum1, var, n, n + 1).at(0);
  const auto vectors = test_vectors(rep, cfg);

  std::map<std::pair<int, int>, CheckReport> lemma, cross;
  std::map<std::pair<int, int>, std::vector<ModeTerm>> extracted;
  for (int a = -W; a <= W; ++a) {
    for (int b = -W; b <= W; ++b) {
      const Degrees mode{{FormalVar::kZ, a}, {FormalVar::kW, b}};
      for (auto* m : {&lemma, &cross}) {
        CheckReport r;
        r.relation = "Lemma_KTheta";
        r.part = m == &lemma ? "lemma" : "cross-path";
        r.variant = var.to_string();
        r.i = n;
        r.j = n + 1;
        r.mode = mode;
        (*m)[{a, b}] = r;
      }
      extracted[{a, b}] = extract_mode(taum1.rhs, mode);
    }
  }

  std::map<Composition, LemmaSides> per_v;
  for (const auto& tv : vectors) {
    auto it = per_v.find(tv.v);
    if (it == per_v.end()) it = per_v.emplace(tv.v, lemma_sides(var, tv.v, W)).first;
    const LemmaSides& S = it->second;
    WordEvaluator ev(rep, ModuleElement::single(var, tv.v, tv.f));
    for (auto& [ab, r] : lemma) {
      ++r.vectors;
      const LaurentPoly rhs = S.rhs.at(ab) * tv.f;
      auto err = S.lhs_error.find(ab);
      if (err != S.lhs_error.end()) {
        record_failure(r, tv.id, err->second, nullptr);
        continue;
      }
      const LaurentPoly lhs = S.lhs.at(ab) * tv.f;
      if (lhs != rhs) record_failure(r, tv.id, lhs.to_string(), rhs.to_string());
    }
    for (auto& [ab, r] : cross) {
      ++r.vectors;
      const ModuleElement lemma_rhs = ModuleElement::single(var, tv.v, S.rhs.at(ab) * tv.f);
      try {
        const ModuleElement op_rhs = ev.combine(extracted.at(ab));
        if (op_rhs != lemma_rhs) record_failure(r, tv.id, lemma_rhs.to_json(), op_rhs.to_json());
      } catch (const Error& e) {
        record_failure(r, tv.id, nlohmann::json{{"error", e.what()}}, nullptr);
      }
    }
  }
  std::vector<CheckReport> out;
  for (auto& [ab, r] : lemma) out.push_back(std::move(r));
  for (auto& [ab, r] : cross) out.push_back(std::move(r));
  return out;
}

std::vector<CheckReport> check_theta1_identities(int d) {
  if (d < 3) throw InvalidArgument("the theta_1 identities need three independent variables");
  auto X = [&](int k) { return LaurentPoly::variable(d, k); };
  auto th = [&](const LaurentPoly& u) { return theta_factor(1, RatFn(u * qp(1))); };
  const RatFn two(LaurentPoly::constant(d, QScalar::q_int(2)));
  const RatFn one(LaurentPoly::constant(d, QScalar(1)));
  const LaurentPoly xr = X(1), xs = X(2), xt = X(3);
  const LaurentPoly ir = xr.monomial_inverse(), is = xs.monomial_inverse();

  const RatFn t_r = th(xt * ir), t_R = th(xt * xr), t_s = th(xt * is), t_S = th(xt * xs);
  const RatFn rs = th(xr * is), sr = th(xs * ir);
  const RatFn first = rs * (t_r * t_R * t_s * t_S + (-(two * t_r * t_R * t_S)) + t_R * t_S) +
                      sr * (t_r * t_R * t_s * t_S + (-(two * t_s * t_R * t_S)) + t_R * t_S);
  const RatFn factored = two * t_R * t_S * (t_r * t_s + (-(rs * t_r)) + (-(sr * t_s)) + one);

  const RatFn r2 = th(xr * xr), rS = th(xr * xs);
  const RatFn second = rs * r2 * rs * rS + sr * r2 * rs * rS + (-(two * rs * rS * r2));

  const RatFn sum_rule = th(xr) + th(ir) + (-two);
  const RatFn sum_rule_ratio = th(xr * is) + th(xs * ir) + (-two);

  // 1 - theta_1(z/w1) theta_1(q^-1 w1/w2) with z = x1, w1 = x2, w2 = x3.
  const RatFn lhs_aux = one + (-(theta_factor(1, RatFn(xr * is)) * theta_factor(1, RatFn(xs * X(3).monomial_inverse() * qp(-1)))));
  const RatFn rhs_aux = RatFn::fraction((QScalar(1) - qp(2)) * xs * (xr - xt * qp(1)),
                                        (xr - xs * qp(1)) * (xs - xt * qp(2)));

  return {
      identity_report("first", first),
      identity_report("first-factored", factored),
      identity_report("first-forms-agree", first + (-factored)),
      identity_report("second", second),
      identity_report("theta1(qz)+theta1(q/z)=[2]", sum_rule),
      identity_report("theta1(qz)+theta1(q/z)=[2] at z=x1/x2", sum_rule_ratio),
      identity_report("one-minus-theta-product", lhs_aux + (-rhs_aux)),
  };
}

std::vector<ExpansionProbe> probe_iserre_expansions(const Representation& rep, int i, const CheckConfig& cfg) {
  const auto vectors = test_vectors(rep, cfg);
  std::vector<ExpansionProbe> out;
  for (const auto& e : SimplifiedExpansion::all()) {
    ExpansionProbe p{e, "pass", 0};
    const RelationSpec spec = build_iserre_simplified(rep.variant(), i, e);
    bool bounded = true;
    try {
      for (const auto& mode : mode_grid(spec.vars, cfg.three_var_window)) extract_mode(spec.rhs, mode);
    } catch (const UnboundedExtraction&) {
      bounded = false;
    }
    if (!bounded) {
      p.status = "unbounded";
    } else {
      for (const auto& r : check_spec(rep, spec, vectors, cfg.three_var_window))
        if (!r.pass()) ++p.failing_modes;
      if (p.failing_modes) p.status = "fail";
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace iqpoly::relcheck
