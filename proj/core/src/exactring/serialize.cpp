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

#include "iqpoly/exactring/serialize.hpp"

#include "iqpoly/errors.hpp"

namespace iqpoly::serial {

using nlohmann::json;

json to_json(const QScalar& c) {
  json num = json::array(), den = json::array();
  for (auto x : c.num()) num.push_back(x);
  for (auto x : c.den()) den.push_back(x);
  return json::array({c.shift(), num, den});
}

json to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json exps = json::array();
    for (int k = 0; k < f.dim(); ++k) exps.push_back(e[k]);
    terms.push_back(json::array({exps, to_json(c)}));
  }
  return json{{"dim", f.dim()}, {"terms", terms}};
}

QScalar qscalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("QScalar must be [shift, num, den]");
  IntCoeffs num, den;
  for (const auto& x : j[1]) num.push_back(x.get<std::int64_t>());
  for (const auto& x : j[2]) den.push_back(x.get<std::int64_t>());
  if (num.empty()) return QScalar(0);
  return QScalar::from_parts(j[0].get<int>(), num, den);
}

LaurentPoly laurent_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at(0);
    if (static_cast<int>(exps.size()) != dim) throw DimensionMismatch("exponent length differs from dim");
    Exponent e{};
    for (int k = 0; k < dim; ++k) e[k] = exps[k].get<std::int16_t>();
    terms.emplace_back(e, qscalar_from_json(t.at(1)));
  }
  return LaurentPoly::from_terms(dim, std::move(terms));
}

}  // namespace iqpoly::serial
