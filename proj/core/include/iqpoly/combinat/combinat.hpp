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

#include <string>
#include <utility>
#include <vector>

#include "iqpoly/exactring/qscalar.hpp"
#include "iqpoly/exactring/weyl.hpp"

namespace iqpoly {

enum class VariantKind { kCOdd, kDEven };

/// The two families handled by the library.  C_ODD has N = 2n+1 steps and a
/// mirror-fixed middle block; D_EVEN has N = 2n and none.
struct Variant {
  VariantKind kind = VariantKind::kCOdd;
  int n = 1;
  int d = 1;

  /// Validating constructor; throws InvalidArgument for n < 1 or d < 1.
  static Variant make(VariantKind kind, int n, int d);
  /// Parses "c-odd" / "d-even".
  static VariantKind parse_kind(const std::string& s);

  int N() const { return kind == VariantKind::kCOdd ? 2 * n + 1 : 2 * n; }
  /// tau i = N - i on 1..N-1, extended by tau 0 = 0.
  int tau(int i) const { return i == 0 ? 0 : N() - i; }
  /// The central scalar C = q^N.
  QScalar central() const { return QScalar::q_pow(N()); }
  /// Affine Cartan matrix of the N-cycle (nodes 0..N-1, taken mod N).
  int cartan(int i, int j) const;

  std::string kind_name() const { return kind == VariantKind::kCOdd ? "c-odd" : "d-even"; }
  std::string to_string() const;

  bool operator==(const Variant& o) const { return kind == o.kind && n == o.n && d == o.d; }
};

/// v_1..v_N, stored 0-based.
using Composition = std::vector<int>;
/// Blocks I_1..I_N, each an ascending list of indices in 1..2d.
using BlockPartition = std::vector<std::vector<int>>;

bool is_valid(const Variant& var, const Composition& v);
/// Centrally symmetric compositions of 2d, in lexicographic order.
std::vector<Composition> enum_compositions(const Variant& var);
/// Partial sum v_1 + ... + v_i (i in 0..N).
int partial_sum(const Composition& v, int i);
/// The source composition v - e_i + e_{i+1} + e_{tau i} - e_{tau i+1}
/// (entries may go negative; check with is_valid).
Composition b_source(const Variant& var, const Composition& v, int i);
/// Inverse of b_source.
Composition b_target(const Variant& var, const Composition& src, int i);
std::string to_string(const Composition& v);
/// Parses "0,2,0".
Composition parse_composition(const std::string& s);

BlockPartition blocks(const Variant& var, const Composition& v);
/// r in I_s iff 2d+1-r in I_{N+1-s}, and the blocks partition 1..2d.
bool has_mirror_property(const Variant& var, const BlockPartition& I);
/// Moves r from its block I_s to I_{s+1} and r' from I_{N+1-s} to I_{N-s}.
BlockPartition tau_plus(const Variant& var, const BlockPartition& I, int r);
/// The indices of I block by block; slot k of a polynomial on [v'] reads
/// the k-th entry.
std::vector<int> listing(const BlockPartition& I);

/// Dense N x N matrix, 1-based accessors.
class OrbitMatrix {
 public:
  OrbitMatrix() = default;
  explicit OrbitMatrix(int N) : N_(N), a_(static_cast<std::size_t>(N * N), 0) {}
  OrbitMatrix(int N, std::vector<int> row_major);

  int N() const { return N_; }
  int at(int i, int j) const { return a_[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
  int& at(int i, int j) { return a_[static_cast<std::size_t>((i - 1) * N_ + (j - 1))]; }
  const std::vector<int>& entries() const { return a_; }
  int total() const;
  Composition ro() const;
  Composition co() const;

  bool operator==(const OrbitMatrix& o) const { return N_ == o.N_ && a_ == o.a_; }
  bool operator<(const OrbitMatrix& o) const { return a_ < o.a_; }
  std::string to_string() const;

 private:
  int N_ = 0;
  std::vector<int> a_;
};

bool is_valid(const Variant& var, const OrbitMatrix& A);
OrbitMatrix diag(const Composition& v);
/// diag(v) + a (E_{ij} + E_{tau i + 1, tau j + 1}).
OrbitMatrix e_theta(const Variant& var, int i, int j, const Composition& v, int a);
/// Closure order on a margin class; D_EVEN also compares the parity of the
/// upper-left n x n block sum.
bool leq(const Variant& var, const OrbitMatrix& A, const OrbitMatrix& B);
/// All of Xi_{N,d}(ro, co), lexicographic in row-major reading.
std::vector<OrbitMatrix> enum_margin_class(const Variant& var, const Composition& ro, const Composition& co);
/// Cover relations (index pairs into the class) of leq.
std::vector<std::pair<int, int>> hasse(const Variant& var, const std::vector<OrbitMatrix>& cls);

/// W_[v]: symmetric groups on blocks 1..n, plus for C_ODD the
/// hyperoctahedral group on [1 + vbar_n, d].
ParabolicSpec parabolic(const Variant& var, const Composition& v);
/// W_[A] for the row-major refinement of [ro(A)] by the entries of A.
ParabolicSpec parabolic(const Variant& var, const OrbitMatrix& A);

}  // namespace iqpoly
