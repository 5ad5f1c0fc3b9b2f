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

#include <benchmark/benchmark.h>

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/kconv/kconv.hpp"
#include "iqpoly/polyrep/polyrep.hpp"
#include "iqpoly/relcheck/relcheck.hpp"

namespace {

using namespace iqpoly;

Variant variant_arg(const benchmark::State& st) {
  return Variant::make(st.range(0) ? VariantKind::kDEven : VariantKind::kCOdd, static_cast<int>(st.range(1)),
                       static_cast<int>(st.range(2)));
}

// Polynomial product on the torus variables.
void BM_LaurentMul(benchmark::State& st) {
  const int d = static_cast<int>(st.range(0));
  LaurentPoly a = LaurentPoly::constant(d, QScalar(1)), b = a;
  for (int k = 1; k <= d; ++k) {
    a += LaurentPoly::variable(d, k) * QScalar::q_pow(k);
    b += LaurentPoly::variable(d, k).monomial_inverse();
  }
  a = a.pow(3);
  b = b.pow(3);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul)->Arg(1)->Arg(2)->Arg(3);

// Every B_{i,r} on the full spanning set, with a fresh operator cache.
void BM_ApplyB(benchmark::State& st) {
  const Variant var = variant_arg(st);
  for (auto _ : st) {
    Representation rep(var);
    for (const auto& v : enum_compositions(var))
      for (const auto& f : rep.spanning_set(v, 2))
        for (int i = 1; i < var.N(); ++i)
          benchmark::DoNotOptimize(rep.apply_B(i, 1, ModuleElement::single(var, v, f)));
  }
}
BENCHMARK(BM_ApplyB)->Args({0, 1, 1})->Args({0, 1, 2})->Args({0, 2, 2})->Args({1, 2, 2})->Unit(benchmark::kMillisecond);

void BM_Crosscheck(benchmark::State& st) {
  const Variant var = variant_arg(st);
  for (auto _ : st) {
    Representation rep(var);
    benchmark::DoNotOptimize(crosscheck(rep, 2, -1, 1));
  }
}
BENCHMARK(BM_Crosscheck)->Args({0, 1, 2})->Args({1, 2, 2})->Unit(benchmark::kMillisecond);

// The whole relation catalogue under the default windows.
void BM_RelationSuite(benchmark::State& st) {
  const Variant var = variant_arg(st);
  relcheck::CheckConfig cfg;
  for (auto _ : st) {
    Representation rep(var);
    benchmark::DoNotOptimize(relcheck::check_relations(rep, relcheck::catalogue(var, {}), cfg));
  }
}
BENCHMARK(BM_RelationSuite)->Args({0, 1, 1})->Args({1, 1, 1})->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_OrderAxioms(benchmark::State& st) {
  const Variant var = variant_arg(st);
  for (auto _ : st) {
    int comparisons = 0;
    for (const auto& v : enum_compositions(var)) {
      const auto cls = enum_margin_class(var, v, v);
      for (const auto& a : cls)
        for (const auto& b : cls) comparisons += leq(var, a, b);
    }
    benchmark::DoNotOptimize(comparisons);
  }
}
BENCHMARK(BM_OrderAxioms)->Args({0, 2, 2})->Args({1, 2, 2});

}  // namespace

BENCHMARK_MAIN();
