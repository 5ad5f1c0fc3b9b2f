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

#include "iqpoly/relcheck/catalogue.hpp"

#include <algorithm>
#include <set>

#include "iqpoly/errors.hpp"

namespace iqpoly::relcheck {

namespace {

constexpr FormalVar kZ = FormalVar::kZ;
constexpr FormalVar kW = FormalVar::kW;
constexpr FormalVar kW1 = FormalVar::kW1;
constexpr FormalVar kW2 = FormalVar::kW2;

QScalar v(int k) { return QScalar::q_pow(k); }

// u^a for one variable, optionally scaled.
TermSum x(FormalVar u, int a = 1, const QScalar& c = QScalar(1)) { return monomial(mono(u, a), c); }
TermSum xx(FormalVar u, int a, FormalVar t, int b, const QScalar& c = QScalar(1)) {
  return monomial(mono(u, a) + mono(t, b), c);
}
TermSum one() { return scalar(QScalar(1)); }

// [X, Y]_c = XY - c YX.
TermSum qbracket(const TermSum& X, const TermSum& Y, const QScalar& c) { return X * Y - c * (Y * X); }

TermSum serre(int i, int j) {
  const TermSum Bi1 = B(i, kW1), Bi2 = B(i, kW2), Bj = B(j, kZ);
  return sym_w1w2(Bi1 * Bi2 * Bj - QScalar::q_int(2) * (Bi1 * Bj * Bi2) + Bj * Bi1 * Bi2);
}

RelationSpec make(RelationId id, int i, int j, TermSum lhs, TermSum rhs, std::string part = "") {
  RelationSpec s;
  s.id = id;
  s.part = std::move(part);
  s.i = i;
  s.j = j;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  std::set<FormalVar> vs;
  for (auto u : s.lhs.variables()) vs.insert(u);
  for (auto u : s.rhs.variables()) vs.insert(u);
  s.vars.assign(vs.begin(), vs.end());
  return s;
}

TermSum iserre_rhs(const Variant& var, int i) {
  const int ti = var.tau(i);
  const QScalar C = v(var.N());
  const QScalar two = QScalar::q_int(2);
  const TermSum D = delta(C, mono(kW2) + mono(kZ));
  const TermSum t1 = D * (one() - xx(kW2, -1, kZ, 1, v(1))) * geometric(v(-2), mono(kW1) + mono(kW2, -1)) *
                     B(i, kW1) * Theta(ti, kZ) * K(i);
  const TermSum t2 = D * (one() - xx(kW2, -1, kZ, 1, v(1))) * geometric(v(2), mono(kW1) + mono(kW2, -1)) *
                     Theta(ti, kZ) * K(i) * B(i, kW1);
  const TermSum t3 = D * (xx(kW1, -1, kZ, 1) - xx(kW1, -1, kW2, 1, v(1))) *
                     geometric(v(2), mono(kW1, -1) + mono(kW2)) * B(i, kW1) * Theta(i, kW2) * K(ti);
  const TermSum t4 = D * (xx(kW1, -1, kW2, 1, v(1)) - xx(kW1, -1, kZ, 1)) *
                     geometric(v(-2), mono(kW1, -1) + mono(kW2)) * Theta(i, kW2) * K(ti) * B(i, kW1);
  return (-v(-1) * two) * sym_w1w2(t1) + two * sym_w1w2(t2) + (v(1) * two) * sym_w1w2(t3) +
         (v(-2) * two) * sym_w1w2(t4);
}

// 1 / ((v^2 w2 - w1)(v w1 - z)) in the requested regions.
TermSum simplified_denominator(bool w1_over_w2, bool z_over_w1) {
  const TermSum a = w1_over_w2 ? x(kW2, -1, v(-2)) * geometric(v(-2), mono(kW1) + mono(kW2, -1))
                               : x(kW1, -1, QScalar(-1)) * geometric(v(2), mono(kW2) + mono(kW1, -1));
  const TermSum b = z_over_w1 ? x(kW1, -1, v(-1)) * geometric(v(-1), mono(kZ) + mono(kW1, -1))
                              : x(kZ, -1, QScalar(-1)) * geometric(v(1), mono(kW1) + mono(kZ, -1));
  return a * b;
}

TermSum iserre_simplified_rhs(const Variant& var, int i, const SimplifiedExpansion& e) {
  const int ti = var.tau(i);
  const QScalar C = v(var.N());
  const QScalar two = QScalar::q_int(2);
  const TermSum D = delta(C, mono(kW2) + mono(kZ));
  const TermSum s1 = D * ((QScalar(1) - v(2)) * (x(kW2) - x(kZ, 1, v(1)))) * x(kW1) *
                     simplified_denominator(e.theta_tau_w1_over_w2, e.theta_tau_z_over_w1) * B(i, kW1) *
                     Theta(ti, kZ) * K(i);
  const TermSum s2 = D * ((v(2) - QScalar(1)) * (x(kW2, 1, v(1)) - x(kZ))) * x(kW1) *
                     simplified_denominator(e.theta_i_w1_over_w2, e.theta_i_z_over_w1) * B(i, kW1) *
                     Theta(i, kW2) * K(ti);
  return two * sym_w1w2(s1) + two * sym_w1w2(s2);
}

TermSum iserre_lhs(const Variant& var, int i) { return (v(1) - v(-1)) * serre(i, var.tau(i)); }

}  // namespace

const std::vector<RelationId>& all_relation_ids() {
  static const std::vector<RelationId> ids = {
      RelationId::kR_KK,       RelationId::kR_KB,        RelationId::kR_TT,
      RelationId::kR_BT,       RelationId::kR_BB_tau0,   RelationId::kR_BB_offdiag,
      RelationId::kR_BB_comm,  RelationId::kR_Serre,     RelationId::kR_BB_taum1,
      RelationId::kR_iSerre,   RelationId::kR_iSerre_simplified, RelationId::kA_BnBn,
      RelationId::kA_SerreN,
  };
  return ids;
}

std::string relation_name(RelationId id) {
  switch (id) {
    case RelationId::kR_KK: return "R_KK";
    case RelationId::kR_KB: return "R_KB";
    case RelationId::kR_TT: return "R_TT";
    case RelationId::kR_BT: return "R_BT";
    case RelationId::kR_BB_tau0: return "R_BB_tau0";
    case RelationId::kR_BB_offdiag: return "R_BB_offdiag";
    case RelationId::kR_BB_comm: return "R_BB_comm";
    case RelationId::kR_Serre: return "R_Serre";
    case RelationId::kR_BB_taum1: return "R_BB_taum1";
    case RelationId::kR_iSerre: return "R_iSerre";
    case RelationId::kR_iSerre_simplified: return "R_iSerre_simplified";
    case RelationId::kA_BnBn: return "A_BnBn";
    case RelationId::kA_SerreN: return "A_SerreN";
  }
  return "?";
}

RelationId parse_relation(const std::string& s) {
  for (auto id : all_relation_ids())
    if (relation_name(id) == s) return id;
  throw InvalidArgument("unknown relation id '" + s + "'");
}

std::string SimplifiedExpansion::label() const {
  auto side = [](bool a, bool b) {
    return std::string(a ? "w1/w2" : "w2/w1") + "," + (b ? "z/w1" : "w1/z");
  };
  return "Theta_tau:" + side(theta_tau_w1_over_w2, theta_tau_z_over_w1) +
         " Theta_i:" + side(theta_i_w1_over_w2, theta_i_z_over_w1);
}

std::vector<SimplifiedExpansion> SimplifiedExpansion::all() {
  std::vector<SimplifiedExpansion> out;
  for (int mask = 0; mask < 16; ++mask)
    out.push_back({(mask & 8) == 0, (mask & 4) == 0, (mask & 2) != 0, (mask & 1) != 0});
  return out;
}

std::string RelationSpec::name() const {
  std::string s = relation_name(id);
  if (!part.empty()) s += "[" + part + "]";
  return s + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool applicable(RelationId id, const Variant& var, int i, int j) {
  const int top = var.N() - 1;
  if (i < 1 || i > top || j < 1 || j > top) return false;
  const int ti = var.tau(i);
  const int cij = var.cartan(i, j);
  const int cit = var.cartan(i, ti);
  const bool d_even = var.kind == VariantKind::kDEven;
  switch (id) {
    case RelationId::kR_KK:
    case RelationId::kR_KB:
    case RelationId::kR_TT:
    case RelationId::kR_BT: return true;
    case RelationId::kR_BB_tau0: return j == ti && cit == 0;
    case RelationId::kR_BB_offdiag: return j != ti;
    case RelationId::kR_BB_comm: return cij == 0 && j != ti;
    case RelationId::kR_Serre: return cij == -1 && j != ti && ti != i;
    case RelationId::kR_BB_taum1:
    case RelationId::kR_iSerre:
    case RelationId::kR_iSerre_simplified: return j == ti && cit == -1;
    case RelationId::kA_BnBn: return d_even && i == var.n && j == var.n;
    case RelationId::kA_SerreN: return d_even && i == var.n && (j == var.n - 1 || j == var.n + 1);
  }
  return false;
}

RelationSpec build_iserre_simplified(const Variant& var, int i, const SimplifiedExpansion& e) {
  if (!applicable(RelationId::kR_iSerre_simplified, var, i, var.tau(i)))
    throw InvalidArgument("simplified iSerre needs c_{i,tau i} = -1");
  return make(RelationId::kR_iSerre_simplified, i, var.tau(i), iserre_lhs(var, i), iserre_simplified_rhs(var, i, e));
}

std::vector<RelationSpec> build_relation(RelationId id, const Variant& var, int i, int j) {
  std::vector<RelationSpec> out;
  if (!applicable(id, var, i, j)) return out;
  const int ti = var.tau(i);
  const QScalar C = v(var.N());
  const QScalar gap = v(1) - v(-1);
  const int cij = var.cartan(i, j);
  const int ctj = var.cartan(ti, j);
  switch (id) {
    case RelationId::kR_KK:
      out.push_back(make(id, i, j, K(i) * K(j), K(j) * K(i), "K.K"));
      out.push_back(make(id, i, j, K(i) * Theta(j, kW), Theta(j, kW) * K(i), "K.Theta"));
      if (i == j) out.push_back(make(id, i, j, K(i) * Kinv(i), one(), "K.Kinv"));
      break;
    case RelationId::kR_KB:
      out.push_back(make(id, i, j, K(i) * B(j, kZ), v(ctj - cij) * (B(j, kZ) * K(i))));
      break;
    case RelationId::kR_TT:
      out.push_back(make(id, i, j, Theta(i, kZ) * Theta(j, kW), Theta(j, kW) * Theta(i, kZ)));
      break;
    case RelationId::kR_BT: {
      const TermSum ratio = (one() - xx(kZ, 1, kW, -1, v(cij))) * (one() - xx(kZ, 1, kW, 1, v(-ctj) * C)) *
                            geometric(v(-cij), mono(kZ) + mono(kW, -1)) * geometric(v(ctj) * C, mono(kZ) + mono(kW));
      out.push_back(make(id, i, j, B(j, kW) * Theta(i, kZ), ratio * Theta(i, kZ) * B(j, kW)));
      break;
    }
    case RelationId::kR_BB_tau0:
      out.push_back(make(id, i, j, B(i, kZ) * B(ti, kW) - B(ti, kW) * B(i, kZ),
                         gap.inverse() * (delta(C, mono(kZ) + mono(kW)) *
                                          (K(ti) * Theta(i, kZ) - K(i) * Theta(ti, kW)))));
      break;
    case RelationId::kR_BB_offdiag:
      out.push_back(make(id, i, j,
                         (x(kZ, 1, v(cij)) - x(kW)) * B(i, kZ) * B(j, kW) +
                             (x(kW, 1, v(cij)) - x(kZ)) * B(j, kW) * B(i, kZ),
                         TermSum()));
      break;
    case RelationId::kR_BB_comm:
      out.push_back(make(id, i, j, B(i, kW) * B(j, kZ), B(j, kZ) * B(i, kW)));
      break;
    case RelationId::kR_Serre:
      out.push_back(make(id, i, j, serre(i, j), TermSum()));
      break;
    case RelationId::kR_BB_taum1: {
      const TermSum lhs = (x(kZ, 1, v(-1)) - x(kW)) * B(i, kZ) * B(ti, kW) +
                          (x(kW, 1, v(-1)) - x(kZ)) * B(ti, kW) * B(i, kZ);
      const TermSum rhs = (QScalar(1) - v(2)).inverse() *
                          (delta(C, mono(kZ) + mono(kW)) * ((x(kZ) - x(kW, 1, v(1))) * K(i) * Theta(ti, kW) +
                                                            (x(kW) - x(kZ, 1, v(1))) * K(ti) * Theta(i, kZ)));
      out.push_back(make(id, i, j, lhs, rhs));
      break;
    }
    case RelationId::kR_iSerre:
      out.push_back(make(id, i, j, iserre_lhs(var, i), iserre_rhs(var, i)));
      break;
    case RelationId::kR_iSerre_simplified:
      out.push_back(build_iserre_simplified(var, i, {}));
      // The two right-hand sides must agree on their own.
      out.push_back(make(id, i, j, iserre_rhs(var, i), iserre_simplified_rhs(var, i, {}), "forms"));
      break;
    case RelationId::kA_BnBn: {
      const TermSum lhs = (x(kZ, 1, v(2)) - x(kW)) * B(i, kZ) * B(i, kW) +
                          (x(kW, 1, v(2)) - x(kZ)) * B(i, kW) * B(i, kZ);
      const TermSum rhs = gap.inverse() * (delta(C, mono(kZ) + mono(kW)) * K(i) *
                                           ((x(kZ) - x(kW, 1, v(-2))) * Theta(i, kW) +
                                            (x(kW) - x(kZ, 1, v(-2))) * Theta(i, kZ)));
      out.push_back(make(id, i, j, lhs, rhs));
      break;
    }
    case RelationId::kA_SerreN: {
      const TermSum g = geometric(v(2), mono(kW2) + mono(kW1, -1));
      const TermSum inner = QScalar::q_int(2) * (xx(kZ, 1, kW1, -1) * g * qbracket(Theta(i, kW2), B(j, kZ), v(-2))) +
                            (one() + xx(kW2, 1, kW1, -1)) * g * qbracket(B(j, kZ), Theta(i, kW2), v(-2));
      const TermSum rhs = (-gap.inverse()) * (K(i) * delta(C, mono(kW1) + mono(kW2)) * sym_w1w2(inner));
      out.push_back(make(id, i, j, serre(i, j), rhs));
      break;
    }
  }
  return out;
}

std::vector<RelationSpec> catalogue(const Variant& var, const std::vector<RelationId>& filter) {
  const std::vector<RelationId>& ids = filter.empty() ? all_relation_ids() : filter;
  std::vector<RelationId> ordered;
  for (auto id : all_relation_ids())
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) ordered.push_back(id);
  std::vector<RelationSpec> out;
  for (auto id : ordered)
    for (int i = 1; i < var.N(); ++i)
      for (int j = 1; j < var.N(); ++j)
        for (auto& s : build_relation(id, var, i, j)) out.push_back(std::move(s));
  return out;
}

}  // namespace iqpoly::relcheck
