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

#include "iqpoly/combinat/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "iqpoly/errors.hpp"

namespace iqpoly {

Variant Variant::make(VariantKind kind, int n, int d) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (d < 1) throw InvalidArgument("d must be at least 1");
  if (d > kMaxVars) throw InvalidArgument("d exceeds the supported number of variables");
  return Variant{kind, n, d};
}

VariantKind Variant::parse_kind(const std::string& s) {
  if (s == "c-odd" || s == "C_ODD") return VariantKind::kCOdd;
  if (s == "d-even" || s == "D_EVEN") return VariantKind::kDEven;
  throw InvalidArgument("unknown variant '" + s + "' (expected c-odd or d-even)");
}

int Variant::cartan(int i, int j) const {
  const int n_nodes = N();
  const int a = ((i % n_nodes) + n_nodes) % n_nodes;
  const int b = ((j % n_nodes) + n_nodes) % n_nodes;
  if (a == b) return 2;
  int adj = 0;
  if ((a + 1) % n_nodes == b) ++adj;
  if ((b + 1) % n_nodes == a) ++adj;
  return -adj;  // -2 only for the 2-cycle
}

std::string Variant::to_string() const {
  return kind_name() + " n=" + std::to_string(n) + " d=" + std::to_string(d);
}

bool is_valid(const Variant& var, const Composition& v) {
  const int N = var.N();
  if (static_cast<int>(v.size()) != N) return false;
  int sum = 0;
  for (int i = 0; i < N; ++i) {
    if (v[i] < 0 || v[i] != v[N - 1 - i]) return false;
    sum += v[i];
  }
  return sum == 2 * var.d;
}

std::vector<Composition> enum_compositions(const Variant& var) {
  // Choose the first half freely; the mirror fixes the rest.
  const int N = var.N(), half = N / 2;
  const bool odd = N % 2 == 1;
  std::vector<Composition> out;
  Composition v(N, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == half) {
      if (odd) {
        v[half] = 2 * remaining;
        out.push_back(v);
      } else if (remaining == 0) {
        out.push_back(v);
      }
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      v[pos] = v[N - 1 - pos] = x;
      rec(pos + 1, remaining - x);
    }
    v[pos] = v[N - 1 - pos] = 0;
  };
  rec(0, var.d);
  std::sort(out.begin(), out.end());
  return out;
}

int partial_sum(const Composition& v, int i) {
  return std::accumulate(v.begin(), v.begin() + i, 0);
}

Composition b_source(const Variant& var, const Composition& v, int i) {
  const int ti = var.tau(i);
  Composition s = v;
  s[i - 1] -= 1;
  s[i] += 1;
  s[ti - 1] += 1;
  s[ti] -= 1;
  return s;
}

Composition b_target(const Variant& var, const Composition& src, int i) {
  const int ti = var.tau(i);
  Composition v = src;
  v[i - 1] += 1;
  v[i] -= 1;
  v[ti - 1] -= 1;
  v[ti] += 1;
  return v;
}

std::string to_string(const Composition& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

Composition parse_composition(const std::string& s) {
  Composition v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidArgument("bad composition entry '" + item + "'");
    }
  }
  return v;
}

BlockPartition blocks(const Variant& var, const Composition& v) {
  if (!is_valid(var, v)) throw InvalidArgument("invalid composition (" + to_string(v) + ") for " + var.to_string());
  BlockPartition I(v.size());
  int next = 1;
  for (std::size_t s = 0; s < v.size(); ++s)
    for (int k = 0; k < v[s]; ++k) I[s].push_back(next++);
  return I;
}

bool has_mirror_property(const Variant& var, const BlockPartition& I) {
  const int N = var.N(), d = var.d;
  if (static_cast<int>(I.size()) != N) return false;
  std::vector<int> where(2 * d + 1, -1);
  for (int s = 0; s < N; ++s)
    for (int r : I[s]) {
      if (r < 1 || r > 2 * d || where[r] != -1) return false;
      where[r] = s;
    }
  for (int r = 1; r <= 2 * d; ++r) {
    if (where[r] < 0) return false;
    if (where[2 * d + 1 - r] != N - 1 - where[r]) return false;
  }
  return true;
}

BlockPartition tau_plus(const Variant& var, const BlockPartition& I, int r) {
  const int N = var.N(), d = var.d;
  int s = -1;
  for (int k = 0; k < N && s < 0; ++k)
    if (std::find(I[k].begin(), I[k].end(), r) != I[k].end()) s = k;
  if (s < 0) throw InvalidArgument("index " + std::to_string(r) + " not found in the block partition");
  if (s == N - 1) throw InvalidArgument("index " + std::to_string(r) + " lies in the last block");
  const int rp = 2 * d + 1 - r;
  const int sm = N - 1 - s;  // block holding r' (0-based)
  BlockPartition J = I;
  auto move = [&](int x, int from, int to) {
    auto& src = J[from];
    auto it = std::find(src.begin(), src.end(), x);
    if (it == src.end()) throw InvalidArgument("mirror index missing from its block");
    src.erase(it);
    J[to].insert(std::upper_bound(J[to].begin(), J[to].end(), x), x);
  };
  move(r, s, s + 1);
  move(rp, sm, sm - 1);
  return J;
}

std::vector<int> listing(const BlockPartition& I) {
  std::vector<int> out;
  for (const auto& b : I) out.insert(out.end(), b.begin(), b.end());
  return out;
}

OrbitMatrix::OrbitMatrix(int N, std::vector<int> row_major) : N_(N), a_(std::move(row_major)) {
  if (static_cast<int>(a_.size()) != N * N) throw DimensionMismatch("matrix entry count differs from N*N");
}

int OrbitMatrix::total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

Composition OrbitMatrix::ro() const {
  Composition r(N_, 0);
  for (int i = 1; i <= N_; ++i)
    for (int j = 1; j <= N_; ++j) r[i - 1] += at(i, j);
  return r;
}

Composition OrbitMatrix::co() const {
  Composition c(N_, 0);
  for (int i = 1; i <= N_; ++i)
    for (int j = 1; j <= N_; ++j) c[j - 1] += at(i, j);
  return c;
}

std::string OrbitMatrix::to_string() const {
  std::string s = "[";
  for (int i = 1; i <= N_; ++i) {
    s += (i > 1 ? ",[" : "[");
    for (int j = 1; j <= N_; ++j) s += (j > 1 ? "," : "") + std::to_string(at(i, j));
    s += "]";
  }
  return s + "]";
}

bool is_valid(const Variant& var, const OrbitMatrix& A) {
  const int N = var.N();
  if (A.N() != N) return false;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (A.at(i, j) < 0 || A.at(i, j) != A.at(N + 1 - i, N + 1 - j)) return false;
  return A.total() == 2 * var.d;
}

OrbitMatrix diag(const Composition& v) {
  const int N = static_cast<int>(v.size());
  OrbitMatrix A(N);
  for (int i = 1; i <= N; ++i) A.at(i, i) = v[i - 1];
  return A;
}

OrbitMatrix e_theta(const Variant& var, int i, int j, const Composition& v, int a) {
  const int N = var.N();
  if (i < 1 || i > N || j < 1 || j > N) throw InvalidArgument("e_theta index out of range");
  if (static_cast<int>(v.size()) != N) throw DimensionMismatch("composition length differs from N");
  OrbitMatrix A = diag(v);
  A.at(i, j) += a;
  A.at(var.tau(i) + 1, var.tau(j) + 1) += a;
  return A;
}

namespace {

int upper_left_sum(const OrbitMatrix& A, int n) {
  int s = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) s += A.at(i, j);
  return s;
}

}  // namespace

bool leq(const Variant& var, const OrbitMatrix& A, const OrbitMatrix& B) {
  const int N = var.N();
  if (A.ro() != B.ro() || A.co() != B.co()) return false;
  // Corner sums of the upper-right region r <= i, s >= j for i < j,
  // accumulated row by row.
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      int sa = 0, sb = 0;
      for (int r = 1; r <= i; ++r)
        for (int s = j; s <= N; ++s) {
          sa += A.at(r, s);
          sb += B.at(r, s);
        }
      if (sa > sb) return false;
    }
  }
  if (var.kind == VariantKind::kDEven && (upper_left_sum(A, var.n) - upper_left_sum(B, var.n)) % 2 != 0) return false;
  return true;
}

std::vector<OrbitMatrix> enum_margin_class(const Variant& var, const Composition& ro, const Composition& co) {
  const int N = var.N();
  if (!is_valid(var, ro) || !is_valid(var, co)) throw InvalidArgument("margins must be valid compositions");
  // Free positions are those not after their mirror in row-major order;
  // the centre of an odd matrix is its own mirror.
  std::vector<std::pair<int, int>> free;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      const int k = (i - 1) * N + (j - 1), km = (N - i) * N + (N - j);
      if (k <= km) free.emplace_back(i, j);
    }
  std::vector<OrbitMatrix> out;
  OrbitMatrix A(N);
  Composition rsum(N, 0), csum(N, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == free.size()) {
      if (rsum == ro && csum == co) out.push_back(A);
      return;
    }
    const auto [i, j] = free[pos];
    const int im = N + 1 - i, jm = N + 1 - j;
    const bool self = i == im && j == jm;
    for (int x = 0;; ++x) {
      rsum[i - 1] += x;
      csum[j - 1] += x;
      if (!self) {
        rsum[im - 1] += x;
        csum[jm - 1] += x;
      }
      const bool over = rsum[i - 1] > ro[i - 1] || csum[j - 1] > co[j - 1] || rsum[im - 1] > ro[im - 1] ||
                        csum[jm - 1] > co[jm - 1];
      if (!over) {
        A.at(i, j) = x;
        A.at(im, jm) = x;
        rec(pos + 1);
      }
      rsum[i - 1] -= x;
      csum[j - 1] -= x;
      if (!self) {
        rsum[im - 1] -= x;
        csum[jm - 1] -= x;
      }
      if (over) break;
    }
    A.at(i, j) = 0;
    A.at(im, jm) = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> hasse(const Variant& var, const std::vector<OrbitMatrix>& cls) {
  const int m = static_cast<int>(cls.size());
  std::vector<std::vector<bool>> lt(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) lt[a][b] = a != b && leq(var, cls[a], cls[b]);
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!lt[a][b]) continue;
      bool between = false;
      for (int c = 0; c < m && !between; ++c) between = lt[a][c] && lt[c][b];
      if (!between) covers.emplace_back(a, b);
    }
  return covers;
}

namespace {

// Builds the parabolic subgroup from consecutive intervals of 1..2d.
ParabolicSpec parabolic_from_lengths(int d, const std::vector<int>& lengths) {
  ParabolicSpec P{d, {}, {}};
  int lo = 1;
  for (int len : lengths) {
    if (len == 0) continue;
    const int hi = lo + len - 1;
    if (hi <= d) {
      if (len >= 2) {
        std::vector<int> b(len);
        std::iota(b.begin(), b.end(), lo);
        P.sym_blocks.push_back(std::move(b));
      }
    } else if (lo <= d) {
      if (lo + hi != 2 * d + 1) throw InvalidArgument("interval straddles the centre without being mirror-fixed");
      for (int k = lo; k <= d; ++k) P.hyper_block.push_back(k);
    }
    lo = hi + 1;
  }
  return P;
}

}  // namespace

ParabolicSpec parabolic(const Variant& var, const Composition& v) {
  if (!is_valid(var, v)) throw InvalidArgument("invalid composition (" + to_string(v) + ")");
  return parabolic_from_lengths(var.d, v);
}

ParabolicSpec parabolic(const Variant& var, const OrbitMatrix& A) {
  if (!is_valid(var, A)) throw InvalidArgument("invalid orbit matrix " + A.to_string());
  return parabolic_from_lengths(var.d, A.entries());
}

}  // namespace iqpoly
