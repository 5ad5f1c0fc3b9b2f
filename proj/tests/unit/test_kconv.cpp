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

#include <gtest/gtest.h>

#include "iqpoly/errors.hpp"
#include "iqpoly/kconv/kconv.hpp"
#include "test_support.hpp"

namespace iqpoly {
namespace {

using testing::C;
using testing::Q;
using testing::X;

const Variant kC11 = Variant::make(VariantKind::kCOdd, 1, 1);
const Variant kD11 = Variant::make(VariantKind::kDEven, 1, 1);

TEST(OrbitDatum, RelativeCotangentExamples) {
  ClosedOrbitDatum D = orbit_datum(kC11, 1, {1, 0, 1});
  EXPECT_TRUE(D.rel_cotangent.is_zero());
  EXPECT_EQ(make_bclass(D, 0).value, C(1, QScalar(1)));
  EXPECT_EQ(D.line_coord, X(1, 1));

  D = orbit_datum(kC11, 2, {0, 2, 0});
  EXPECT_EQ(D.rel_cotangent, X(1, 1).pow(2));
  EXPECT_EQ(D.E, e_theta(kC11, 2, 3, {0, 0, 0}, 1));

  D = orbit_datum(kD11, 1, {1, 1});
  EXPECT_TRUE(D.rel_cotangent.is_zero());
  EXPECT_TRUE(D.pullback_flips_last);

  EXPECT_THROW(orbit_datum(kC11, 2, {1, 0, 1}), InvalidArgument);
}

TEST(OrbitDatum, CotangentClosedFormsOnLargerBlocks) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 3);
  // v = (2,2,2): block 1 = {1,2}, so T* = x1/x2.
  EXPECT_EQ(orbit_datum(var, 1, {2, 2, 2}).rel_cotangent, X(3, 1) * X(3, 2).pow(-1));
  // v = (1,4,1), i = 2: a = 2, t in {3,4,5}: x2/x3 + x2/x4 + x2/x5 with
  // x4 = x3^-1, x5 = x2^-1.
  const LaurentPoly want = X(3, 2) * X(3, 3).pow(-1) + X(3, 2) * X(3, 3) + X(3, 2).pow(2);
  EXPECT_EQ(orbit_datum(var, 2, {1, 4, 1}).rel_cotangent, want);
}

TEST(Convolve, ExamplesAgreeWithB) {
  const ClosedOrbitDatum D2 = orbit_datum(kC11, 2, {0, 2, 0});
  EXPECT_EQ(convolve_closed(make_bclass(D2, 0), X(1, 1)), C(1, Q(-1)) * (X(1, 1) + X(1, 2)));
  const ClosedOrbitDatum D1 = orbit_datum(kC11, 1, {1, 0, 1});
  EXPECT_EQ(convolve_closed(make_bclass(D1, 1), X(1, 1) + X(1, 2)), X(1, 1).pow(2) + C(1, QScalar(1)));
  EXPECT_TRUE(convolve_closed(make_bclass(D1, 5), LaurentPoly(1)).is_zero());
}

TEST(Convolve, RepresentativeCounts) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 2);
  const ClosedOrbitDatum D = orbit_datum(var, 2, {0, 4, 0});
  const auto reps = closed_orbit_representatives(D);
  EXPECT_EQ(reps.size(), 4u);
  EXPECT_EQ(coset_representatives(parabolic(var, D.v), parabolic(var, D.E)).size(), 4u);
}

TEST(Convolve, IsLinear) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 2);
  Representation rep(var);
  const ClosedOrbitDatum D = orbit_datum(var, 2, {1, 2, 1});
  const BClass bc = make_bclass(D, 1);
  const auto span = rep.spanning_set(D.source, 2);
  const LaurentPoly f = span[1], g = span[2];
  EXPECT_EQ(convolve_closed(bc, f * Q(3) + g), convolve_closed(bc, f) * Q(3) + convolve_closed(bc, g));
}

TEST(Convolve, SingleCosetDegenerates) {
  // v_i = 1 with i <= n: one representative, no symmetrization.
  const Variant var = Variant::make(VariantKind::kCOdd, 2, 2);
  const ClosedOrbitDatum D = orbit_datum(var, 1, {1, 1, 0, 1, 1});
  EXPECT_EQ(closed_orbit_representatives(D).size(), 1u);
  // Source (0,2,0,2,0): f must be symmetric in x1, x2.
  const LaurentPoly f = X(2, 1) * X(2, 2) + X(2, 1).pow(2) + X(2, 2).pow(2);
  Representation rep(var);
  EXPECT_EQ(convolve_closed(make_bclass(D, 2), f), X(2, 1).pow(2) * f);
  EXPECT_EQ(convolve_closed(make_bclass(D, 2), f), rep.b_component(1, 2, D.v, f));
}

TEST(MonomialForm, ReadingsAgainstTheClass) {
  // k = 0: reading B (x_{vbar_2} taken as x_1) reproduces x_1^2.
  const auto m0 = bclass_monomial_readings(kC11, {0, 2, 0}, 0);
  EXPECT_EQ(m0.value, X(1, 1).pow(2));
  EXPECT_FALSE(m0.a_matches);
  EXPECT_TRUE(m0.b_matches);
  EXPECT_EQ(bclass_monomial_form(kC11, {0, 2, 0}, 0), X(1, 1).pow(2));
  // k = -v_{n+1}: the claimed form is 1 but the class is x_1^4.
  const auto m1 = bclass_monomial_readings(kC11, {0, 2, 0}, -2);
  EXPECT_EQ(m1.reading_a, C(1, QScalar(1)));
  EXPECT_EQ(m1.value, X(1, 1).pow(4));
  EXPECT_THROW(bclass_monomial_form(kC11, {0, 2, 0}, -2), IdentificationError);
}

TEST(MonomialForm, ValueIsXaToTheVMinusK) {
  for (int d = 1; d <= 2; ++d) {
    const Variant var = Variant::make(VariantKind::kCOdd, 1, d);
    for (const auto& v : enum_compositions(var)) {
      if (v[1] < 1) continue;
      const int a = v[0] + 1;
      for (int k = -2; k <= 2; ++k) {
        const auto m = bclass_monomial_readings(var, v, k);
        EXPECT_EQ(m.value, X(d, a).pow(v[1] - k));
        EXPECT_EQ(m.b_matches, k == 0);
        EXPECT_FALSE(m.a_matches);
      }
    }
  }
}

TEST(Crosscheck, SmallGridAgrees) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven}) {
    const Variant var = Variant::make(kind, 1, 2);
    Representation rep(var);
    for (const auto& e : crosscheck(rep, 2, -2, 2)) EXPECT_TRUE(e.pass()) << e.first_mismatch;
  }
}

TEST(Crosscheck, FullGridAgrees) {
  int instances = 0;
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven}) {
    for (int n = 1; n <= 2; ++n) {
      for (int d = 1; d <= 2; ++d) {
        const Variant var = Variant::make(kind, n, d);
        Representation rep(var);
        for (const auto& e : crosscheck(rep, 3, -2, 2)) {
          EXPECT_TRUE(e.pass()) << var.to_string() << " i=" << e.i << " r=" << e.r << " " << e.first_mismatch;
          instances += e.vectors;
        }
      }
    }
  }
  EXPECT_GE(instances, 200);
  RecordProperty("instances", instances);
}

}  // namespace
}  // namespace iqpoly
