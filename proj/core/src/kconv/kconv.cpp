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

#include "iqpoly/kconv/kconv.hpp"

#include <algorithm>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

bool middle_step(const Variant& var, int i) { return var.kind == VariantKind::kCOdd && i == var.n + 1; }

// g acting on a quotient, keeping the denominator factored.
RatFn act(const WeylElement& g, const RatFn& f) {
  RatFn out(weyl_act(g, f.num()));
  const LaurentPoly one = LaurentPoly::constant(f.dim(), QScalar(1));
  for (const auto& fac : f.den_factors()) out *= RatFn::fraction(one, weyl_act(g, fac));
  return out;
}

// prefactor * wedge_{q^2} T * value / wedge T*, times p_2^* f.
RatFn kernel(const BClass& bc, const LaurentPoly& f) {
  const ClosedOrbitDatum& D = bc.datum;
  const int d = D.var.d;
  const LaurentPoly one = LaurentPoly::constant(d, QScalar(1));
  LaurentPoly pulled = f;
  if (D.pullback_flips_last) pulled = weyl_act(WeylElement::iota(d, d), f);
  RatFn k(pulled * bc.value * bc.prefactor);
  for (const auto& mu : D.cotangent_monomials) {
    // (1 - q^2 mu^{-1}) / (1 - mu)
    k *= RatFn::fraction(one - mu.monomial_inverse() * QScalar::q_pow(2), one - mu);
  }
  return k;
}

LaurentPoly finish(const BClass& bc, const RatFn& sum) {
  const ClosedOrbitDatum& D = bc.datum;
  auto out = sum.to_laurent();
  if (!out)
    throw DenominatorError("closed-orbit convolution at i=" + std::to_string(D.i) + ", v=(" + to_string(D.v) +
                           ") left a denominator");
  LaurentPoly res = out->dim() == 0 ? LaurentPoly(D.var.d) : *out;
  const ParabolicSpec P = parabolic(D.var, D.v);
  if (!P.generators().empty() && !P.is_invariant(res))
    throw InvarianceError("closed-orbit convolution output is not W_[v]-invariant: " + res.to_string());
  return res;
}

LaurentPoly symmetrize_over(const BClass& bc, const std::vector<WeylElement>& reps, const LaurentPoly& f) {
  if (f.is_zero()) return LaurentPoly(bc.datum.var.d);
  const ParabolicSpec src = parabolic(bc.datum.var, bc.datum.source);
  if (!src.generators().empty() && !src.is_invariant(f))
    throw InvarianceError("convolution input is not invariant for the source parabolic");
  const RatFn k = kernel(bc, f);
  RatFn sum;
  for (const auto& g : reps) {
    RatFn term = act(g, k);
    sum = sum.dim() == 0 ? term : sum + term;
  }
  return finish(bc, sum);
}

}  // namespace

ClosedOrbitDatum orbit_datum(const Variant& var, int i, const Composition& v) {
  if (i < 1 || i >= var.N()) throw InvalidArgument("orbit index outside 1..N-1");
  if (!is_valid(var, v)) throw InvalidArgument("invalid composition (" + to_string(v) + ")");
  if (v[i - 1] == 0) throw InvalidArgument("v_i = 0: the closed orbit is empty");
  ClosedOrbitDatum D;
  D.var = var;
  D.i = i;
  D.v = v;
  D.source = b_source(var, v, i);
  if (!is_valid(var, D.source)) throw InvalidArgument("no B_" + std::to_string(i) + " step into (" + to_string(v) + ")");
  D.vpp = v;
  D.vpp[i - 1] -= 1;
  D.vpp[var.tau(i)] -= 1;
  D.E = e_theta(var, i, i + 1, D.vpp, 1);
  const int d = var.d;
  D.rel_cotangent = LaurentPoly(d);
  if (middle_step(var, i)) {
    // Fibre of flags V_n < V'_n < V'_n^perp < V_n^perp:
    // T* = sum_{a < t <= vbar_{n+1}} x_a / x_t with a = 1 + vbar_n.
    const int a = partial_sum(v, var.n) + 1;
    const LaurentPoly xa = LaurentPoly::variable(d, a);
    for (int t = a + 1; t <= partial_sum(v, var.n + 1); ++t)
      D.cotangent_monomials.push_back(xa * LaurentPoly::variable(d, t).monomial_inverse());
    D.line_index = partial_sum(v, var.n + 1);
  } else {
    // Grassmannian fibre: T* = sum_{vbar_{i-1} < t < vbar_i} x_t / x_{vbar_i}.
    const int l = partial_sum(v, i);
    const LaurentPoly xl_inv = LaurentPoly::variable(d, l).monomial_inverse();
    for (int t = partial_sum(v, i - 1) + 1; t < l; ++t)
      D.cotangent_monomials.push_back(LaurentPoly::variable(d, t) * xl_inv);
    D.line_index = l;
    D.pullback_flips_last = var.kind == VariantKind::kDEven && i == var.n;
  }
  for (const auto& mu : D.cotangent_monomials) D.rel_cotangent += mu;
  D.line_coord = LaurentPoly::variable(d, D.line_index);
  return D;
}

BClass make_bclass(const ClosedOrbitDatum& datum, int r) {
  BClass bc;
  bc.datum = datum;
  bc.r = r;
  LaurentPoly det = LaurentPoly::constant(datum.var.d, QScalar(1));
  for (const auto& mu : datum.cotangent_monomials) det *= mu;
  bc.value = det * datum.line_coord.pow(r);
  bc.prefactor = (-QScalar::q_pow(1)).pow(1 - datum.v[datum.i - 1]);
  return bc;
}

std::vector<WeylElement> closed_orbit_representatives(const ClosedOrbitDatum& D) {
  const int d = D.var.d;
  std::vector<WeylElement> reps;
  if (middle_step(D.var, D.i)) {
    const int a = partial_sum(D.v, D.var.n) + 1;
    for (int j = a; j <= d; ++j) {
      const WeylElement t = WeylElement::transposition(d, a, j);
      reps.push_back(t);
      reps.push_back(WeylElement::iota(d, j) * t);
    }
    return reps;
  }
  for (int j = partial_sum(D.v, D.i - 1) + 1; j <= partial_sum(D.v, D.i); ++j)
    reps.push_back(WeylElement::transposition(d, j, D.line_index));
  return reps;
}

LaurentPoly convolve_closed(const BClass& bc, const LaurentPoly& f) {
  return symmetrize_over(bc, closed_orbit_representatives(bc.datum), f);
}

LaurentPoly convolve_closed_generic(const BClass& bc, const LaurentPoly& f) {
  const ClosedOrbitDatum& D = bc.datum;
  return symmetrize_over(bc, coset_representatives(parabolic(D.var, D.v), parabolic(D.var, D.E)), f);
}

MonomialFormReadings bclass_monomial_readings(const Variant& var, const Composition& v, int k) {
  if (var.kind != VariantKind::kCOdd) throw InvalidArgument("the monomial form is stated for c-odd only");
  const int i = var.n + 1;
  if (v[i - 1] < 1) throw InvalidArgument("v_{n+1} must be at least 1");
  // The class itself only needs the cotangent data, so build it even when
  // no B step lands on v.
  const int d = var.d;
  const int a = partial_sum(v, var.n) + 1;
  LaurentPoly value = LaurentPoly::constant(d, QScalar(1));
  const LaurentPoly xa = LaurentPoly::variable(d, a);
  for (int t = a + 1; t <= partial_sum(v, var.n + 1); ++t) value *= xa * LaurentPoly::variable(d, t).monomial_inverse();
  value *= LaurentPoly::variable(d, partial_sum(v, var.n + 1)).pow(k);
  const int e = k + v[i - 1];
  MonomialFormReadings out;
  out.value = value;
  out.reading_a = xa.pow(-e);  // x_{vbar_{n+1}} = x_a^{-1}
  out.reading_b = xa.pow(e);   // x_{vbar_{n+1}} taken as x_a
  out.a_matches = out.reading_a == value;
  out.b_matches = out.reading_b == value;
  return out;
}

LaurentPoly bclass_monomial_form(const Variant& var, const Composition& v, int k) {
  const MonomialFormReadings m = bclass_monomial_readings(var, v, k);
  if (m.a_matches) return m.reading_a;
  if (m.b_matches) return m.reading_b;
  throw IdentificationError("neither coordinate reading of x_{vbar_{n+1}}^{k+v_{n+1}} reproduces " +
                            m.value.to_string() + " (k=" + std::to_string(k) + ", v=(" + to_string(v) + "))");
}

std::vector<CrosscheckEntry> crosscheck(const Representation& rep, int degree_bound, int r_lo, int r_hi) {
  const Variant& var = rep.variant();
  std::vector<CrosscheckEntry> out;
  for (int i = 1; i < var.N(); ++i)
    for (const auto& v : enum_compositions(var)) {
      if (v[i - 1] == 0 || !is_valid(var, b_source(var, v, i))) continue;
      const ClosedOrbitDatum D = orbit_datum(var, i, v);
      const auto span = rep.spanning_set(D.source, degree_bound);
      for (int r = r_lo; r <= r_hi; ++r) {
        const BClass bc = make_bclass(D, r);
        CrosscheckEntry e;
        e.variant = var.kind_name();
        e.n = var.n;
        e.d = var.d;
        e.i = i;
        e.r = r;
        e.v = v;
        for (const auto& f : span) {
          const LaurentPoly want = rep.b_component(i, r, v, f);
          const LaurentPoly got = convolve_closed(bc, f);
          const LaurentPoly got_generic = convolve_closed_generic(bc, f);
          ++e.vectors;
          if (got == want) ++e.agree;
          if (got_generic == want) ++e.generic_agree;
          if ((got != want || got_generic != want) && e.first_mismatch.empty())
            e.first_mismatch = "f=" + f.to_string() + " B=" + want.to_string() + " conv=" + got.to_string() +
                               " generic=" + got_generic.to_string();
        }
        out.push_back(std::move(e));
      }
    }
  return out;
}

nlohmann::json to_json(const CrosscheckEntry& e) {
  nlohmann::json j{{"variant", e.variant}, {"n", e.n},       {"d", e.d},
                   {"i", e.i},             {"v", e.v},       {"r", e.r},
                   {"vectors", e.vectors}, {"agree", e.agree}, {"generic_agree", e.generic_agree},
                   {"status", e.pass() ? "pass" : "fail"}};
  if (!e.first_mismatch.empty()) j["witness"] = e.first_mismatch;
  return j;
}

}  // namespace iqpoly
