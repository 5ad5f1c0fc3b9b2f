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

#include <optional>
#include <string>
#include <vector>

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/relcheck/term_expr.hpp"

namespace iqpoly::relcheck {

enum class RelationId {
  kR_KK,
  kR_KB,
  kR_TT,
  kR_BT,
  kR_BB_tau0,
  kR_BB_offdiag,
  kR_BB_comm,
  kR_Serre,
  kR_BB_taum1,
  kR_iSerre,
  kR_iSerre_simplified,
  kA_BnBn,
  kA_SerreN,
};

const std::vector<RelationId>& all_relation_ids();
std::string relation_name(RelationId id);
/// Accepts the names printed by relation_name, e.g. "R_iSerre".
RelationId parse_relation(const std::string& s);

/// Expansion regions for the two denominators (v^2 w2 - w1) and (v w1 - z)
/// of the simplified iSerre relation, chosen separately for its two terms.
/// true expands in powers of w1/w2 (resp. z/w1), false in w2/w1 (resp.
/// w1/z).
struct SimplifiedExpansion {
  bool theta_tau_w1_over_w2 = true;
  bool theta_tau_z_over_w1 = true;
  bool theta_i_w1_over_w2 = false;
  bool theta_i_z_over_w1 = false;
  std::string label() const;
  static std::vector<SimplifiedExpansion> all();
};

/// One identity lhs = rhs between generating functions.
struct RelationSpec {
  RelationId id = RelationId::kR_KK;
  /// Distinguishes the identities bundled under one id, e.g. "K.Theta".
  std::string part;
  int i = 0;
  int j = 0;
  TermSum lhs;
  TermSum rhs;
  std::vector<FormalVar> vars;

  std::string name() const;
};

/// Side conditions on the Cartan data, with i, j in 1..N-1.
bool applicable(RelationId id, const Variant& var, int i, int j);

/// Every applicable instance of the selected relations, in catalogue order
/// (id, then i, then j, then part).  An empty filter selects all ids.
std::vector<RelationSpec> catalogue(const Variant& var, const std::vector<RelationId>& filter = {});

/// The instances of one id at (i, j); empty when inapplicable.
std::vector<RelationSpec> build_relation(RelationId id, const Variant& var, int i, int j);

/// The simplified iSerre relation at i under explicit expansion regions.
RelationSpec build_iserre_simplified(const Variant& var, int i, const SimplifiedExpansion& e);

}  // namespace iqpoly::relcheck
