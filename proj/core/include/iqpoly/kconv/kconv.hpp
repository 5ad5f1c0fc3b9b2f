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

#include <string>
#include <vector>

#include <json.hpp>

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/exactring/laurent_poly.hpp"
#include "iqpoly/exactring/rat_fn.hpp"
#include "iqpoly/exactring/weyl.hpp"
#include "iqpoly/polyrep/polyrep.hpp"

namespace iqpoly {

/// Data of the closed orbit E^theta_{i,i+1}(v'', 1) with target v.
struct ClosedOrbitDatum {
  Variant var;
  int i = 1;
  Composition v;       // target, ro(E)
  Composition source;  // v' = co(E)
  Composition vpp;     // v'' = v - e_i - e_{tau i + 1}
  OrbitMatrix E;
  /// Monomials mu_t of the relative cotangent class, in summation order.
  std::vector<LaurentPoly> cotangent_monomials;
  LaurentPoly rel_cotangent;
  /// Index (1..2d) whose variable is the tautological line coordinate.
  int line_index = 0;
  LaurentPoly line_coord;
  /// The pullback p_2^* needs iota_d (the Lagrangian block of d-even, i = n).
  bool pullback_flips_last = false;
};

ClosedOrbitDatum orbit_datum(const Variant& var, int i, const Composition& v);

struct BClass {
  ClosedOrbitDatum datum;
  int r = 0;
  /// Det(T*_{p1}) * line_coord^r.
  LaurentPoly value;
  /// (-q)^{1 - v_i}.
  QScalar prefactor;
};

BClass make_bclass(const ClosedOrbitDatum& datum, int r);

/// Representatives of W_[v] / W_[E], hardcoded per case family:
/// transpositions (j, vbar_i) for j in [v]_i, or for the middle step of
/// c-odd the signed set {(a, j), iota_j (a, j)} with a = 1 + vbar_n.
std::vector<WeylElement> closed_orbit_representatives(const ClosedOrbitDatum& datum);

/// prefactor * sum_g g( wedge_{q^2} T * p_2^* f * value / wedge T* ).
LaurentPoly convolve_closed(const BClass& bc, const LaurentPoly& f);
/// Same sum over the generic minimal-length coset representatives.
LaurentPoly convolve_closed_generic(const BClass& bc, const LaurentPoly& f);

/// Both coordinate readings of the monomial form of B_{n+1, v, k}:
/// the claimed x_{vbar_{n+1}}^{k + v_{n+1}} with x_{vbar_{n+1}} = x_a^{-1}
/// (reading A) or with x_{vbar_{n+1}} read as x_a (reading B).
struct MonomialFormReadings {
  LaurentPoly value;
  LaurentPoly reading_a;
  LaurentPoly reading_b;
  bool a_matches = false;
  bool b_matches = false;
};
MonomialFormReadings bclass_monomial_readings(const Variant& var, const Composition& v, int k);
/// The matching reading; throws IdentificationError when neither matches.
LaurentPoly bclass_monomial_form(const Variant& var, const Composition& v, int k);

/// One (variant, i, v, r) instance of the geometric/combinatorial check.
struct CrosscheckEntry {
  std::string variant;
  int n = 0, d = 0, i = 0, r = 0;
  Composition v;
  int vectors = 0;
  int agree = 0;
  int generic_agree = 0;
  std::string first_mismatch;
  bool pass() const { return agree == vectors && generic_agree == vectors; }
};

/// Runs convolve_closed (both coset paths) against apply_B over every
/// target v, 1 <= i < N, r in [r_lo, r_hi] and the full spanning set of
/// the source.
std::vector<CrosscheckEntry> crosscheck(const Representation& rep, int degree_bound, int r_lo, int r_hi);
nlohmann::json to_json(const CrosscheckEntry& e);

}  // namespace iqpoly
