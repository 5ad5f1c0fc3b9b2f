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

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/errors.hpp"

namespace iqpoly {
namespace {

const Variant kC11 = Variant::make(VariantKind::kCOdd, 1, 1);
const Variant kC12 = Variant::make(VariantKind::kCOdd, 1, 2);
const Variant kD11 = Variant::make(VariantKind::kDEven, 1, 1);

TEST(Variant, DerivedData) {
  EXPECT_EQ(kC11.N(), 3);
  EXPECT_EQ(kD11.N(), 2);
  EXPECT_EQ(kC11.tau(1), 2);
  EXPECT_EQ(kC11.central(), QScalar::q_pow(3));
  const Variant c2 = Variant::make(VariantKind::kCOdd, 2, 2);
  EXPECT_EQ(c2.cartan(2, 3), -1);
  EXPECT_EQ(c2.cartan(1, 4), 0);
  EXPECT_EQ(c2.cartan(4, 0), -1);  // the cycle closes up
  EXPECT_EQ(c2.cartan(3, 3), 2);
  EXPECT_THROW(Variant::make(VariantKind::kCOdd, 0, 1), InvalidArgument);
}

TEST(Compositions, SmallEnumerations) {
  EXPECT_EQ(enum_compositions(kC11), (std::vector<Composition>{{0, 2, 0}, {1, 0, 1}}));
  EXPECT_EQ(enum_compositions(kC12), (std::vector<Composition>{{0, 4, 0}, {1, 2, 1}, {2, 0, 2}}));
  EXPECT_EQ(enum_compositions(kD11), (std::vector<Composition>{{1, 1}}));
}

TEST(Blocks, PartialSumIntervals) {
  EXPECT_EQ(blocks(kC12, {1, 2, 1}), (BlockPartition{{1}, {2, 3}, {4}}));
  EXPECT_EQ(blocks(kC12, {0, 4, 0}), (BlockPartition{{}, {1, 2, 3, 4}, {}}));
  EXPECT_EQ(blocks(kC11, {1, 0, 1}), (BlockPartition{{1}, {}, {2}}));
}

TEST(Blocks, MirrorPropertyOnAllEnumerated) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven})
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d) {
        const Variant var = Variant::make(kind, n, d);
        for (const auto& v : enum_compositions(var)) ASSERT_TRUE(has_mirror_property(var, blocks(var, v)));
      }
}

TEST(TauPlus, WorkedExample) {
  const Variant var = Variant::make(VariantKind::kCOdd, 1, 3);
  const BlockPartition I{{1, 2}, {3, 4}, {5, 6}};
  const BlockPartition J = tau_plus(var, I, 1);
  EXPECT_EQ(J, (BlockPartition{{2}, {1, 3, 4, 6}, {5}}));
  EXPECT_EQ(listing(J), (std::vector<int>{2, 1, 3, 4, 6, 5}));
  EXPECT_EQ(tau_plus(kC11, blocks(kC11, {1, 0, 1}), 1), (BlockPartition{{}, {1, 2}, {}}));
  EXPECT_THROW(tau_plus(var, I, 5), InvalidArgument);
  EXPECT_THROW(tau_plus(var, I, 9), InvalidArgument);
}

TEST(TauPlus, PreservesMirrorProperty) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven})
    for (int n = 1; n <= 2; ++n)
      for (int d = 1; d <= 3; ++d) {
        const Variant var = Variant::make(kind, n, d);
        for (const auto& v : enum_compositions(var)) {
          const BlockPartition I = blocks(var, v);
          for (int s = 0; s + 1 < var.N(); ++s)
            for (int r : I[s]) {
              const BlockPartition J = tau_plus(var, I, r);
              ASSERT_TRUE(has_mirror_property(var, J));
              // A second shift of a middle index keeps the property too.
              for (int s2 = 0; s2 + 1 < var.N(); ++s2)
                for (int r2 : J[s2]) ASSERT_TRUE(has_mirror_property(var, tau_plus(var, J, r2)));
            }
        }
      }
}

TEST(ETheta, SubstitutionAndMargins) {
  const OrbitMatrix E = e_theta(kC11, 1, 2, {0, 0, 0}, 1);
  EXPECT_EQ(E, OrbitMatrix(3, {0, 1, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(E.ro(), (Composition{1, 0, 1}));
  EXPECT_EQ(E.co(), (Composition{0, 2, 0}));
  EXPECT_THROW(e_theta(kC11, 0, 2, {0, 0, 0}, 1), InvalidArgument);
}

TEST(ETheta, MirrorSymmetryOfIndices) {
  const Variant var = Variant::make(VariantKind::kCOdd, 2, 2);
  const Composition zero(5, 0);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      EXPECT_EQ(e_theta(var, i, j, zero, 1), e_theta(var, var.tau(i) + 1, var.tau(j) + 1, zero, 1));
}

TEST(ETheta, MarginsOfClosedOrbits) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven}) {
    const Variant var = Variant::make(kind, 2, 2);
    for (const auto& v : enum_compositions(var))
      for (int i = 1; i < var.N(); ++i) {
        // v'' = v - e_i - e_{tau i + 1}, needs to be nonnegative.
        Composition vpp = v;
        vpp[i - 1] -= 1;
        vpp[var.tau(i)] -= 1;
        if (*std::min_element(vpp.begin(), vpp.end()) < 0) continue;
        const OrbitMatrix E = e_theta(var, i, i + 1, vpp, 1);
        Composition ro = vpp, co = vpp;
        ro[i - 1] += 1;
        ro[var.tau(i)] += 1;
        co[i] += 1;
        co[var.tau(i) - 1] += 1;
        EXPECT_EQ(E.ro(), ro);
        EXPECT_EQ(E.co(), co);
      }
  }
}

TEST(Order, ChainInXi32) {
  const Composition m{1, 2, 1};
  const auto cls = enum_margin_class(kC12, m, m);
  ASSERT_EQ(cls.size(), 3u);
  const OrbitMatrix a = diag(m);
  const OrbitMatrix b(3, {0, 1, 0, 1, 0, 1, 0, 1, 0});
  const OrbitMatrix c(3, {0, 0, 1, 0, 2, 0, 1, 0, 0});
  EXPECT_TRUE(leq(kC12, a, b));
  EXPECT_TRUE(leq(kC12, b, c));
  EXPECT_TRUE(leq(kC12, a, c));
  EXPECT_FALSE(leq(kC12, c, a));
  EXPECT_EQ(hasse(kC12, {a, b, c}), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(Order, DEvenParityIncomparability) {
  const OrbitMatrix a(2, {1, 0, 0, 1});
  const OrbitMatrix b(2, {0, 1, 1, 0});
  EXPECT_FALSE(leq(kD11, a, b));
  EXPECT_FALSE(leq(kD11, b, a));
  EXPECT_TRUE(leq(kD11, a, a));
}

void check_partial_order(const Variant& var) {
  const auto comps = enum_compositions(var);
  for (const auto& ro : comps)
    for (const auto& co : comps) {
      const auto cls = enum_margin_class(var, ro, co);
      for (const auto& A : cls) {
        ASSERT_TRUE(is_valid(var, A));
        ASSERT_TRUE(leq(var, A, A));
        for (const auto& B : cls) {
          if (leq(var, A, B) && leq(var, B, A)) ASSERT_EQ(A, B);
          for (const auto& Cm : cls)
            if (leq(var, A, B) && leq(var, B, Cm)) ASSERT_TRUE(leq(var, A, Cm));
        }
      }
    }
}

TEST(Order, PartialOrderAxioms) {
  check_partial_order(kC12);
  check_partial_order(Variant::make(VariantKind::kCOdd, 2, 2));
  check_partial_order(Variant::make(VariantKind::kDEven, 2, 2));
}

TEST(Order, DiagonalAndClosedOrbitsAreMinimal) {
  for (auto kind : {VariantKind::kCOdd, VariantKind::kDEven}) {
    const Variant var = Variant::make(kind, 2, 2);
    for (const auto& v : enum_compositions(var)) {
      for (const auto& B : enum_margin_class(var, v, v))
        if (leq(var, B, diag(v))) EXPECT_EQ(B, diag(v));
      for (int i = 1; i < var.N(); ++i) {
        Composition vpp = v;
        vpp[i - 1] -= 1;
        vpp[var.tau(i)] -= 1;
        if (*std::min_element(vpp.begin(), vpp.end()) < 0) continue;
        const OrbitMatrix E = e_theta(var, i, i + 1, vpp, 1);
        if (!is_valid(var, E)) continue;
        for (const auto& B : enum_margin_class(var, E.ro(), E.co()))
          if (leq(var, B, E)) EXPECT_EQ(B, E) << var.to_string() << " i=" << i << " v=" << to_string(v);
      }
    }
  }
}

TEST(Parabolic, ExamplesAndShapes) {
  ParabolicSpec p = parabolic(kC11, {0, 2, 0});
  EXPECT_TRUE(p.sym_blocks.empty());
  EXPECT_EQ(p.hyper_block, (std::vector<int>{1}));
  p = parabolic(kC11, {1, 0, 1});
  EXPECT_TRUE(p.hyper_block.empty());
  EXPECT_EQ(p.order(), 1u);
  p = parabolic(kD11, {1, 1});
  EXPECT_TRUE(p.hyper_block.empty());
  EXPECT_EQ(p.order(), 1u);
  // W_[E] for the closed orbit at i = n+1 fixes the first middle index.
  const OrbitMatrix E = e_theta(kC12, 2, 3, {0, 2, 0}, 1);
  p = parabolic(kC12, E);
  EXPECT_EQ(p.hyper_block, (std::vector<int>{2}));
  EXPECT_TRUE(parabolic(kC12, Composition{0, 4, 0}).contains(p));
}

}  // namespace
}  // namespace iqpoly
