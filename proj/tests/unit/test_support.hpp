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

#include <cstdint>
#include <random>
#include <vector>

#include "iqpoly/exactring/laurent_poly.hpp"
#include "iqpoly/exactring/qscalar.hpp"
#include "iqpoly/exactring/rat_fn.hpp"

namespace iqpoly::testing {

inline QScalar Q(int k) { return QScalar::q_pow(k); }
inline LaurentPoly X(int d, int r) { return LaurentPoly::variable(d, r); }
inline LaurentPoly C(int d, const QScalar& c) { return LaurentPoly::constant(d, c); }
inline RatFn R(const LaurentPoly& p) { return RatFn(p); }

// Small random elements for the algebraic-law sweeps.  Everything is drawn
// from one mt19937_64 so a failing seed reproduces exactly.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  QScalar scalar() {
    IntCoeffs num, den;
    const int nn = uniform(1, 3), nd = uniform(1, 2);
    for (int k = 0; k < nn; ++k) num.push_back(uniform(-3, 3));
    for (int k = 0; k < nd; ++k) den.push_back(uniform(-2, 2));
    if (num.back() == 0) num.back() = 1;
    if (den.back() == 0) den.back() = 1;
    return QScalar::from_parts(uniform(-2, 2), num, den);
  }

  QScalar laurent_scalar() {
    IntCoeffs num;
    const int nn = uniform(1, 3);
    for (int k = 0; k < nn; ++k) num.push_back(uniform(-3, 3));
    if (num.back() == 0) num.back() = 1;
    return QScalar::from_parts(uniform(-2, 2), num, {1});
  }

  LaurentPoly poly(int d, int max_terms = 3, int max_exp = 2, bool laurent_coeffs = false) {
    std::vector<LaurentPoly::Term> terms;
    const int nt = uniform(0, max_terms);
    for (int t = 0; t < nt; ++t) {
      Exponent e{};
      for (int k = 0; k < d; ++k) e[k] = static_cast<std::int16_t>(uniform(-max_exp, max_exp));
      terms.emplace_back(e, laurent_coeffs ? laurent_scalar() : scalar());
    }
    return LaurentPoly::from_terms(d, std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace iqpoly::testing
