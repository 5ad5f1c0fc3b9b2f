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

#include <fstream>

#include "iqpoly/errors.hpp"
#include "iqpoly/exactring/serialize.hpp"
#include "iqpoly/polyrep/polyrep.hpp"
#include "test_support.hpp"

namespace iqpoly {
namespace {

using testing::C;
using testing::Q;
using testing::X;

const Variant kC11 = Variant::make(VariantKind::kCOdd, 1, 1);
const Variant kD11 = Variant::make(VariantKind::kDEven, 1, 1);

TEST(GeneratorMode, ParseAndRender) {
  for (const char* s : {"B:1:0", "B:2:-3", "K:2", "Kinv:1", "Theta:1:2", "H:2:4"})
    EXPECT_EQ(GeneratorMode::parse(s).to_string(), s);
  EXPECT_THROW(GeneratorMode::parse("B:1"), InvalidArgument);
  EXPECT_THROW(GeneratorMode::parse("Q:1"), InvalidArgument);
  EXPECT_THROW(GeneratorMode::parse("K:x"), InvalidArgument);
  EXPECT_THROW(GeneratorMode::parse("Theta:1:0").validate(kC11), InvalidArgument);
  EXPECT_THROW(GeneratorMode::parse("K:3").validate(kC11), InvalidArgument);
}

TEST(KOperator, Scalars) {
  Representation rep(kC11);
  EXPECT_EQ(rep.k_scalar(1, {1, 0, 1}), QScalar(1));
  EXPECT_EQ(rep.k_scalar(2, {1, 0, 1}), Q(1));
  Representation drep(kD11);
  EXPECT_EQ(drep.k_scalar(1, {1, 1}), -Q(1));
  const ModuleElement e = ModuleElement::single(kC11, {1, 0, 1}, X(1, 1));
  EXPECT_EQ(rep.apply_K(2, e), Q(1) * e);
  EXPECT_EQ(rep.apply_Kinv(2, rep.apply_K(2, e)), e);
}

TEST(ThetaOperator, RatfnAndMultipliers) {
  Representation rep(kC11);
  const int d = 1;
  const LaurentPoly one = C(d, QScalar(1));
  const ZRatFn expect = ZRatFn::fraction(ZPoly::linear(one, -(C(d, Q(-1)) * X(d, 1))),
                                         ZPoly::linear(one, -(C(d, Q(1)) * X(d, 1))));
  EXPECT_TRUE(rep.theta_ratfn(1, {1, 0, 1}).equals(expect));
  EXPECT_EQ(rep.theta_multiplier(1, {1, 0, 1}, 1), X(d, 1));
  EXPECT_EQ(rep.theta_multiplier(1, {1, 0, 1}, 2), C(d, Q(1)) * X(d, 1).pow(2));
  EXPECT_TRUE(rep.apply_theta(1, 3, ModuleElement(kC11)).is_zero());
}

TEST(ThetaOperator, EmptyBlocksGiveOne) {
  const Variant var = Variant::make(VariantKind::kCOdd, 2, 1);
  Representation rep(var);
  // [v]_1 = [v]_2 = {} for v = (0,0,2,0,0).
  const ZSeries s = expand_series(rep.theta_ratfn(1, {0, 0, 2, 0, 0}), ExpansionPoint::kZero, 4);
  EXPECT_EQ(s.at(0, 1), C(1, QScalar(1)));
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(s.at(m, 1).is_zero());
}

TEST(ThetaOperator, ConstantTermIsOne) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven})
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 2; ++d) {
        const Variant var = Variant::make(kind, n, d);
        Representation rep(var);
        for (const auto& v : enum_compositions(var))
          for (int i = 1; i < var.N(); ++i)
            ASSERT_EQ(rep.theta_series_coeff(i, v, 0), C(d, QScalar(1))) << var.to_string() << " i=" << i;
      }
}

TEST(BOperator, SmallExamples) {
  Representation rep(kC11);
  const int d = 1;
  const LaurentPoly f = X(d, 1) + X(d, 2);
  const ModuleElement e = ModuleElement::single(kC11, {0, 2, 0}, f);
  EXPECT_EQ(rep.apply_B(1, 0, e), ModuleElement::single(kC11, {1, 0, 1}, f));
  EXPECT_EQ(rep.apply_B(1, 1, e), ModuleElement::single(kC11, {1, 0, 1}, X(d, 1).pow(2) + C(d, QScalar(1))));
  const ModuleElement g = ModuleElement::single(kC11, {1, 0, 1}, X(d, 1));
  EXPECT_EQ(rep.apply_B(2, 0, g), ModuleElement::single(kC11, {0, 2, 0}, C(d, Q(-1)) * f));
  // Routing: (0,2,0) -> (1,0,1) -> nothing.
  EXPECT_TRUE(rep.apply_word({GeneratorMode::B(1, 0), GeneratorMode::B(1, 0)}, e).is_zero());
}

TEST(BOperator, RejectsNonInvariantInput) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 2);
  Representation rep(var);
  const ModuleElement e = ModuleElement::single(var, {0, 4, 0}, X(2, 1));
  EXPECT_THROW(rep.apply_B(1, 0, e), InvarianceError);
}

TEST(HOperator, Multipliers) {
  Representation rep(kC11);
  EXPECT_EQ(rep.h_multiplier(1, {1, 0, 1}, 1), X(1, 1));
  EXPECT_EQ(rep.h_multiplier(1, {1, 0, 1}, 2), C(1, QScalar::q_int(2) / QScalar(2)) * X(1, 1).pow(2));
  EXPECT_THROW(Representation(kD11).h_multiplier(1, {1, 1}, 1), InvalidArgument);
}

// exp((q - q^-1) sum_k H_k z^k) against the Theta expansion.
bool exp_log_agrees(const Representation& rep, int i, const Composition& v, int order) {
  const int d = rep.variant().d;
  const QScalar gap = Q(1) - Q(-1);
  std::vector<LaurentPoly> h(order + 1, LaurentPoly(d));
  for (int k = 1; k <= order; ++k) h[k] = rep.h_multiplier(i, v, k) * gap;
  const auto e = series_exp(h, order, d);
  for (int m = 0; m <= order; ++m)
    if (e[m] != rep.theta_series_coeff(i, v, m)) return false;
  return true;
}

TEST(HOperator, ExpLogMatchesThetaSeries) {
  for (int d = 1; d <= 2; ++d) {
    const Variant var = Variant::make(VariantKind::kCOdd, 1, d);
    Representation rep(var);
    for (const auto& v : enum_compositions(var))
      for (int i = 1; i < var.N(); ++i) EXPECT_TRUE(exp_log_agrees(rep, i, v, 4)) << "d=" << d << " i=" << i;
  }
}

TEST(HOperator, LiteralCorrectionFailsExpLog) {
  // With the literal (q^{(2n+2)k} - q^{2nk}) term the i = n+1 check breaks
  // at k = 2, which is why the corrected form is the default.
  Representation rep(kC11, PolyrepOptions{HFormula::kLiteral, true});
  EXPECT_TRUE(exp_log_agrees(rep, 1, {1, 0, 1}, 4));
  EXPECT_FALSE(exp_log_agrees(rep, 2, {0, 2, 0}, 4));
}

TEST(Spanning, Examples) {
  Representation rep(kC11);
  EXPECT_EQ(rep.spanning_set({0, 2, 0}, 1), (std::vector<LaurentPoly>{C(1, QScalar(1)), X(1, 1) + X(1, 2)}));
  EXPECT_EQ(rep.spanning_set({1, 0, 1}, 1), (std::vector<LaurentPoly>{C(1, QScalar(1)), X(1, 2), X(1, 1)}));
  EXPECT_EQ(rep.spanning_set({1, 0, 1}, 0), (std::vector<LaurentPoly>{C(1, QScalar(1))}));
  EXPECT_THROW(rep.spanning_set({1, 0, 1}, -1), InvalidArgument);
}

// The structural properties over the whole small grid: polynomiality and
// invariance (enforced inside b_component), K-conjugation, K inverse.
TEST(BOperator, PolynomialityAndKConjugation) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven})
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 2; ++d) {
        const Variant var = Variant::make(kind, n, d);
        Representation rep(var);
        for (const auto& src : enum_compositions(var))
          for (const auto& f : rep.spanning_set(src, d == 1 ? 3 : 2)) {
            const ModuleElement e = ModuleElement::single(var, src, f);
            for (int j = 1; j < var.N(); ++j)
              for (int r = -2; r <= 2; ++r) {
                const ModuleElement b = rep.apply_B(j, r, e);
                for (int i = 1; i < var.N(); ++i) {
                  const int c = var.cartan(var.tau(i), j) - var.cartan(i, j);
                  ASSERT_EQ(rep.apply_K(i, b), Q(c) * rep.apply_B(j, r, rep.apply_K(i, e)));
                }
              }
          }
        EXPECT_EQ(rep.stats().denominator_failures.load(), 0u);
        EXPECT_EQ(rep.stats().invariance_failures.load(), 0u);
      }
}

}  // namespace
}  // namespace iqpoly

namespace iqpoly {
namespace {

TEST(BOperator, MatchesFrozenSympyOracle) {
  std::ifstream in(std::string(IQPOLY_FIXTURE_DIR) + "/b_operator_oracle.json");
  ASSERT_TRUE(in.good());
  const auto doc = nlohmann::json::parse(in);
  int checked = 0;
  for (const auto& c : doc.at("cases")) {
    const Variant var =
        Variant::make(Variant::parse_kind(c.at("variant")), c.at("n").get<int>(), c.at("d").get<int>());
    Representation rep(var);
    const Composition src = c.at("source").get<Composition>();
    const LaurentPoly f = serial::laurent_from_json(c.at("f"));
    const LaurentPoly want = serial::laurent_from_json(c.at("expected"));
    const ModuleElement got = rep.apply_B(c.at("i").get<int>(), c.at("r").get<int>(), ModuleElement::single(var, src, f));
    EXPECT_EQ(got.component(c.at("target").get<Composition>()), want)
        << var.to_string() << " i=" << c.at("i") << " r=" << c.at("r") << " f=" << f.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

}  // namespace
}  // namespace iqpoly
