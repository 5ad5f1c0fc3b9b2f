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
#include <string>
#include <vector>

#include <json.hpp>

#include "iqpoly/polyrep/polyrep.hpp"
#include "iqpoly/relcheck/catalogue.hpp"

namespace iqpoly::relcheck {

inline constexpr int kReportSchemaVersion = 1;

struct CheckConfig {
  /// Per-variable mode window |deg| <= window; relations in three formal
  /// variables use three_var_window instead.
  int mode_window = 2;
  int three_var_window = 1;
  /// Spanning vectors use monomials with every |exponent| <= degree_bound.
  int degree_bound = 3;
  /// 0 keeps every spanning vector; otherwise a seeded sample per component.
  int max_vectors_per_component = 0;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// A single-component vector from the spanning set of some v.
struct TestVector {
  /// "0,2,0:1" names the second spanning vector of (0,2,0).
  std::string id;
  Composition v;
  LaurentPoly f;
};

std::vector<TestVector> test_vectors(const Representation& rep, const CheckConfig& cfg);
/// Resolves an id of the form "v:index" against the spanning set.
TestVector find_vector(const Representation& rep, const std::string& id, int degree_bound);

/// Outcome of one identity at one multi-degree over all test vectors.  Only
/// the first failing vector is materialized; later failures are counted.
struct CheckReport {
  std::string relation;
  std::string part;
  std::string variant;
  int i = 0;
  int j = 0;
  Degrees mode;
  int vectors = 0;
  int failures = 0;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  std::string first_failure;
  std::string error;
  nlohmann::json witness_lhs;
  nlohmann::json witness_rhs;

  bool pass() const { return failures == 0 && error.empty(); }
};

nlohmann::json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

/// All multi-degrees with every |degree| <= window.
std::vector<Degrees> mode_grid(const std::vector<FormalVar>& vars, int window);

/// Checks lhs = rhs mode-wise on the given vectors.
std::vector<CheckReport> check_spec(const Representation& rep, const RelationSpec& spec,
                                    const std::vector<TestVector>& vectors, int window);

/// check_spec over a whole catalogue, fanned out over cfg.workers threads;
/// the result order is the catalogue order regardless of scheduling.
std::vector<CheckReport> check_relations(const Representation& rep, const std::vector<RelationSpec>& specs,
                                         const CheckConfig& cfg);

/// Lemma on K Theta products for c-odd, i = n.  Part "lemma" compares the
/// delta-supported left side with the closed-form right side; part
/// "cross-path" compares that right side with the extracted right side of
/// R_BB_taum1 evaluated through the operators.
std::vector<CheckReport> check_theta_lemma(const Representation& rep, const CheckConfig& cfg);

/// The theta_1 vanishing identities in three independent variables.
std::vector<CheckReport> check_theta1_identities(int d = 3);

/// Outcome of one expansion choice for the simplified iSerre relation.
struct ExpansionProbe {
  SimplifiedExpansion expansion;
  std::string status;  // "pass", "fail" or "unbounded"
  int failing_modes = 0;
};
std::vector<ExpansionProbe> probe_iserre_expansions(const Representation& rep, int i, const CheckConfig& cfg);

}  // namespace iqpoly::relcheck
