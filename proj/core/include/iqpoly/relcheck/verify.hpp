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

#include <vector>

#include <json.hpp>

#include "iqpoly/relcheck/relcheck.hpp"

namespace iqpoly::relcheck {

/// Everything one verification run needs.
struct VerifyConfig {
  Variant var;
  /// Empty selects the whole catalogue.
  std::vector<RelationId> relations;
  CheckConfig check;
  bool crosscheck = true;
  int crosscheck_r_lo = -2;
  int crosscheck_r_hi = 2;
  /// Lemma and theta_1 identities run only for c-odd and only when the
  /// relation filter is empty.
  bool extras = true;
  /// Wall time is opt-in so reports stay byte-identical across runs.
  bool include_timing = false;
};

struct VerifyOutcome {
  nlohmann::json report;
  bool all_pass = false;
};

VerifyOutcome run_verify(const VerifyConfig& cfg);

}  // namespace iqpoly::relcheck
