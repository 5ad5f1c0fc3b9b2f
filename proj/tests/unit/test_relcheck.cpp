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

#include <random>

#include "iqpoly/errors.hpp"
#include "iqpoly/relcheck/relcheck.hpp"

namespace iqpoly::relcheck {
namespace {

constexpr FormalVar kZ = FormalVar::kZ;
constexpr FormalVar kW = FormalVar::kW;
constexpr FormalVar kW1 = FormalVar::kW1;
constexpr FormalVar kW2 = FormalVar::kW2;

QScalar qp(int k) { return QScalar::q_pow(k); }

int failures(const std::vector<CheckReport>& rs) {
  int f = 0;
  for (const auto& r : rs) f += !r.pass();
  return f;
}

TEST(ExtractMode, ProductOfTwoSeries) {
  const TermSum t = (monomial(mono(kZ), qp(-1)) - monomial(mono(kW))) * B(1, kZ) * B(2, kW);
  const auto got = extract_mode(t, {{kZ, 0}, {kW, 0}});
  const std::vector<ModeTerm> want = {
      {qp(-2), {GeneratorMode::B(1, -1), GeneratorMode::B(2, 0)}},
      {-qp(-2), {GeneratorMode::B(1, 0), GeneratorMode::B(2, -1)}},
  };
  EXPECT_EQ(got, want);
}

TEST(ExtractMode, DeltaPicksTheSummationIndex) {
  // C = q^3 for c-odd n = 1.
  const TermSum t = (QScalar(1) - qp(2)).inverse() *
                    (delta(qp(3), mono(kZ) + mono(kW)) *
                     ((monomial(mono(kZ)) - monomial(mono(kW), qp(1))) * K(1) * Theta(2, kW) +
                      (monomial(mono(kW)) - monomial(mono(kZ), qp(1))) * K(2) * Theta(1, kZ)));
  const auto got = extract_mode(t, {{kZ, 0}, {kW, 0}});
  const std::vector<ModeTerm> want = {
      {-qp(-4), {GeneratorMode::K(1), GeneratorMode::Theta(2, 1)}},
      {-qp(-4), {GeneratorMode::K(2), GeneratorMode::Theta(1, 1)}},
  };
  EXPECT_EQ(got, want);
}

TEST(ExtractMode, ZeroSumIsEmpty) {
  EXPECT_TRUE(extract_mode(TermSum(), {{kZ, 3}}).empty());
  // Terms that cancel are dropped as well.
  const TermSum t = B(1, kZ) - B(1, kZ);
  EXPECT_TRUE(extract_mode(t, {{kZ, 1}}).empty());
}

TEST(ExtractMode, ThetaConstantTermIsTheIdentity) {
  const auto got = extract_mode(Theta(1, kZ), {{kZ, 0}});
  ASSERT_EQ(got.size(), 1u);
  EXPECT_TRUE(got[0].second.empty());
  EXPECT_TRUE(extract_mode(Theta(1, kZ), {{kZ, -1}}).empty());
  const auto m2 = extract_mode(Theta(1, kZ), {{kZ, 2}});
  EXPECT_EQ(m2[0].first, qp(1) - qp(-1));
}

TEST(ExtractMode, UnpinnedIndexIsRejected) {
  EXPECT_THROW(extract_mode(B(1, kZ) * B(2, kZ), {{kZ, 0}}), UnboundedExtraction);
  EXPECT_THROW(extract_mode(geometric(qp(1), mono(kW)) * B(1, kW), {{kW, 0}}),
               UnboundedExtraction);
  // A variable that occurs nowhere must have degree zero.
  EXPECT_TRUE(extract_mode(B(1, kZ), {{kZ, 0}, {kW, 1}}).empty());
}

TEST(ExtractMode, GeometricExpandsInTheWrittenMonomial) {
  // (1 - q z/w)^-1 B(w): the z^2 w^0 coefficient needs k = 2, so B_{1,2}.
  const auto got = extract_mode(geometric(qp(1), mono(kZ) + mono(kW, -1)) * B(1, kW), {{kZ, 2}, {kW, 0}});
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].first, qp(2) * qp(2));
  EXPECT_EQ(got[0].second, (Word{GeneratorMode::B(1, 2)}));
  EXPECT_TRUE(extract_mode(geometric(qp(1), mono(kZ) + mono(kW, -1)) * B(1, kW), {{kZ, -1}, {kW, 0}}).empty());
}

TEST(ExtractMode, SymEqualsSwappedDegrees) {
  // One summand of the iSerre right side for c-odd n = 1.
  const TermSum t = delta(qp(3), mono(kW2) + mono(kZ)) * geometric(qp(2), mono(kW1) + mono(kW2, -1)) *
                    Theta(2, kZ) * K(1) * B(1, kW1);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = deg(rng), b = deg(rng), c = deg(rng);
    auto merged = extract_mode(t, {{kW1, a}, {kW2, b}, {kZ, c}});
    for (auto& m : extract_mode(t, {{kW1, b}, {kW2, a}, {kZ, c}})) merged.push_back(m);
    std::map<Word, QScalar> want;
    for (const auto& [coef, w] : merged) want[w] += coef;
    std::map<Word, QScalar> got;
    for (const auto& [coef, w] : extract_mode(sym_w1w2(t), {{kW1, a}, {kW2, b}, {kZ, c}})) got[w] += coef;
    for (auto it = want.begin(); it != want.end();) it = it->second.is_zero() ? want.erase(it) : std::next(it);
    EXPECT_EQ(got, want) << a << " " << b << " " << c;
  }
}

TEST(ExtractMode, CatalogueExtractionsAreFinite) {
  for (const Variant& var : {Variant::make(VariantKind::kCOdd, 2, 2), Variant::make(VariantKind::kDEven, 2, 2)}) {
    for (const auto& s : catalogue(var)) {
      const int window = s.vars.size() >= 3 ? 1 : 2;
      for (const auto& mode : mode_grid(s.vars, window)) {
        // Bounded by a polynomial in the window; 4096 is far above the
        // largest count that occurs.
        EXPECT_LT(extraction_size(s.lhs, mode), 4096u) << s.name();
        EXPECT_LT(extraction_size(s.rhs, mode), 4096u) << s.name();
      }
    }
  }
}

TEST(Catalogue, ApplicabilityFollowsCartanData) {
  const Variant c22 = Variant::make(VariantKind::kCOdd, 2, 2);
  EXPECT_TRUE(applicable(RelationId::kR_BB_tau0, c22, 1, 4));
  EXPECT_FALSE(applicable(RelationId::kR_BB_tau0, c22, 2, 3));
  EXPECT_TRUE(applicable(RelationId::kR_BB_taum1, c22, 2, 3));
  EXPECT_TRUE(applicable(RelationId::kR_Serre, c22, 1, 2));
  EXPECT_FALSE(applicable(RelationId::kR_Serre, c22, 2, 3));
  EXPECT_TRUE(applicable(RelationId::kR_BB_comm, c22, 1, 3));
  EXPECT_FALSE(applicable(RelationId::kR_BB_comm, c22, 1, 4));
  EXPECT_FALSE(applicable(RelationId::kA_BnBn, c22, 2, 2));

  const Variant d22 = Variant::make(VariantKind::kDEven, 2, 2);
  EXPECT_TRUE(applicable(RelationId::kA_BnBn, d22, 2, 2));
  EXPECT_FALSE(applicable(RelationId::kR_BB_offdiag, d22, 2, 2));
  EXPECT_TRUE(applicable(RelationId::kA_SerreN, d22, 2, 1));
  EXPECT_TRUE(applicable(RelationId::kA_SerreN, d22, 2, 3));
  EXPECT_FALSE(applicable(RelationId::kR_Serre, d22, 2, 1));
  EXPECT_TRUE(applicable(RelationId::kR_Serre, d22, 1, 2));
  EXPECT_FALSE(applicable(RelationId::kR_iSerre, d22, 2, 2));

  EXPECT_EQ(parse_relation("R_iSerre"), RelationId::kR_iSerre);
  EXPECT_THROW(parse_relation("R_nope"), InvalidArgument);
}

TEST(CheckRelation, ThetaThetaCommutesAtEveryMode) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 2);
  Representation rep(var);
  CheckConfig cfg;
  cfg.degree_bound = 2;
  const auto r = check_relations(rep, catalogue(var, {RelationId::kR_TT}), cfg);
  EXPECT_EQ(failures(r), 0);
  EXPECT_EQ(r.size(), 4u * 25u);
}

TEST(CheckRelation, TauMinusOneRelationSmallCase) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 1);
  Representation rep(var);
  const auto specs = build_relation(RelationId::kR_BB_taum1, var, 1, 2);
  ASSERT_EQ(specs.size(), 1u);
  const auto r = check_spec(rep, specs[0], test_vectors(rep, {}), 2);
  EXPECT_EQ(r.size(), 25u);
  EXPECT_EQ(failures(r), 0);
  for (const auto& x : r) EXPECT_GT(x.vectors, 0);
}

TEST(CheckRelation, IserreBothFormsAndTheirAgreement) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 1);
  Representation rep(var);
  CheckConfig cfg;
  const auto r = check_relations(rep, catalogue(var, {RelationId::kR_iSerre, RelationId::kR_iSerre_simplified}), cfg);
  // Two instances (i = 1, 2) of three identities, 27 modes each.
  EXPECT_EQ(r.size(), 6u * 27u);
  EXPECT_EQ(failures(r), 0);
  int forms = 0;
  for (const auto& x : r) forms += x.part == "forms";
  EXPECT_EQ(forms, 2 * 27);
}

TEST(CheckRelation, CorruptedEntryFailsWithWitness) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 1);
  Representation rep(var);
  RelationSpec s = build_relation(RelationId::kR_BB_taum1, var, 1, 2).at(0);
  s.rhs = qp(1) * s.rhs;
  const auto r = check_spec(rep, s, test_vectors(rep, {}), 1);
  ASSERT_GT(failures(r), 0);
  for (const auto& x : r) {
    if (x.pass()) continue;
    EXPECT_FALSE(x.first_failure.empty());
    EXPECT_FALSE(x.witness_lhs.is_null());
    const auto j = to_json(x);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_TRUE(j.contains("witness"));
    break;
  }
}

TEST(CheckRelation, DEvenRelationsSmallCase) {
  const Variant var = Variant::make(VariantKind::kDEven, 1, 1);
  Representation rep(var);
  const auto r = check_relations(rep, catalogue(var, {RelationId::kA_BnBn}), {});
  EXPECT_EQ(r.size(), 25u);
  EXPECT_EQ(failures(r), 0);
}

TEST(CheckRelation, ReportsDoNotDependOnWorkerCount) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 1);
  Representation rep(var);
  CheckConfig one, three;
  three.workers = 3;
  const auto specs = catalogue(var);
  const auto a = check_relations(rep, specs, one);
  const auto b = check_relations(rep, specs, three);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(to_json(a[k]).dump(), to_json(b[k]).dump());
}

TEST(TestVectors, IdsResolve) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 1);
  Representation rep(var);
  const auto vs = test_vectors(rep, {});
  ASSERT_FALSE(vs.empty());
  for (const auto& tv : vs) {
    const TestVector back = find_vector(rep, tv.id, 3);
    EXPECT_EQ(back.v, tv.v);
    EXPECT_EQ(back.f, tv.f);
  }
  EXPECT_THROW(find_vector(rep, "0,2,0", 3), InvalidArgument);
  EXPECT_THROW(find_vector(rep, "0,2,0:999", 3), InvalidArgument);
  EXPECT_THROW(find_vector(rep, "0,1,0:0", 3), InvalidArgument);

  CheckConfig capped;
  capped.max_vectors_per_component = 2;
  capped.seed = 11;
  const auto a = test_vectors(rep, capped), b = test_vectors(rep, capped);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].id, b[k].id);
}

TEST(ThetaLemma, SmallCaseAndCrossPath) {
  Representation rep(Variant::make(VariantKind::kCOdd, 1, 1));
  const auto r = check_theta_lemma(rep, {});
  EXPECT_EQ(r.size(), 50u);
  EXPECT_EQ(failures(r), 0);
  int cross = 0;
  for (const auto& x : r) cross += x.part == "cross-path";
  EXPECT_EQ(cross, 25);
}

TEST(ThetaLemma, RejectsDEven) {
  Representation rep(Variant::make(VariantKind::kDEven, 1, 1));
  EXPECT_THROW(check_theta_lemma(rep, {}), InvalidArgument);
}

TEST(Theta1Identities, AllVanish) {
  const auto r = check_theta1_identities(3);
  EXPECT_EQ(r.size(), 7u);
  EXPECT_EQ(failures(r), 0);
  EXPECT_THROW(check_theta1_identities(2), InvalidArgument);
}

TEST(IserreExpansions, OnlyTheMixedChoiceIsFinite) {
  Representation rep(Variant::make(VariantKind::kCOdd, 1, 1));
  int bounded = 0;
  for (const auto& p : probe_iserre_expansions(rep, 1, {})) {
    if (p.status == "unbounded") continue;
    ++bounded;
    EXPECT_EQ(p.status, "pass");
    EXPECT_EQ(p.expansion.label(), SimplifiedExpansion{}.label());
  }
  EXPECT_EQ(bounded, 1);
}

}  // namespace
}  // namespace iqpoly::relcheck
