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

#include <json.hpp>

#include "iqpoly/exactring/laurent_poly.hpp"
#include "iqpoly/exactring/qscalar.hpp"

namespace iqpoly::serial {

// Bumped whenever the array layout below changes.
inline constexpr int kSchemaVersion = 1;

// QScalar  -> [shift, [num coeffs low..high], [den coeffs low..high]]
// LaurentPoly -> {"dim": d, "terms": [[[e_1..e_d], QScalar], ...]}
nlohmann::json to_json(const QScalar& c);
nlohmann::json to_json(const LaurentPoly& f);

QScalar qscalar_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace iqpoly::serial
