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

#include "iqpoly/exactring/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "iqpoly/errors.hpp"

namespace iqpoly {

namespace {

int mirror(int d, int k) { return 2 * d + 1 - k; }

bool in_block(const std::vector<int>& block, int k) {
  return std::find(block.begin(), block.end(), k) != block.end();
}

}  // namespace

WeylElement::WeylElement(int d) : perm_(d), signs_(d, 1) {
  for (int k = 0; k < d; ++k) perm_[k] = k + 1;
}

WeylElement::WeylElement(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
  const int d = dim();
  if (static_cast<int>(signs_.size()) != d) throw DimensionMismatch("sign vector length differs from permutation");
  std::vector<bool> seen(d + 1, false);
  for (int k = 0; k < d; ++k) {
    if (perm_[k] < 1 || perm_[k] > d || seen[perm_[k]]) throw InvalidArgument("not a permutation of 1..d");
    seen[perm_[k]] = true;
    if (signs_[k] != 1 && signs_[k] != -1) throw InvalidArgument("signs must be +1 or -1");
  }
}

WeylElement WeylElement::from_images(int d, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != d) throw DimensionMismatch("image list length differs from rank");
  std::vector<int> perm(d), signs(d);
  for (int k = 0; k < d; ++k) {
    const int img = images[k];
    if (img < 1 || img > 2 * d) throw InvalidArgument("image outside 1..2d");
    if (img <= d) {
      perm[k] = img;
      signs[k] = 1;
    } else {
      perm[k] = mirror(d, img);
      signs[k] = -1;
    }
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::transposition(int d, int a, int b) {
  if (a < 1 || a > 2 * d || b < 1 || b > 2 * d) throw InvalidArgument("transposition index outside 1..2d");
  std::vector<int> images(d);
  const int ap = mirror(d, a), bp = mirror(d, b);
  for (int k = 1; k <= d; ++k) {
    int img = k;
    if (a != b) {
      if (k == a) img = b;
      else if (k == b) img = a;
      else if (k == ap) img = bp;
      else if (k == bp) img = ap;
    }
    images[k - 1] = img;
  }
  return from_images(d, images);
}

WeylElement WeylElement::iota(int d, int m) {
  if (m < 1 || m > d) throw InvalidArgument("iota index outside 1..d");
  WeylElement w(d);
  w.signs_[m - 1] = -1;
  return w;
}

int WeylElement::image(int k) const {
  const int d = dim();
  if (k < 1 || k > 2 * d) throw InvalidArgument("index outside 1..2d");
  if (k <= d) return signs_[k - 1] > 0 ? perm_[k - 1] : mirror(d, perm_[k - 1]);
  return mirror(d, image(mirror(d, k)));
}

std::vector<int> WeylElement::images() const {
  std::vector<int> out(dim());
  for (int k = 1; k <= dim(); ++k) out[k - 1] = image(k);
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("Weyl elements of different rank");
  std::vector<int> images(dim());
  for (int k = 1; k <= dim(); ++k) images[k - 1] = image(o.image(k));
  return from_images(dim(), images);
}

WeylElement WeylElement::inverse() const {
  const int d = dim();
  std::vector<int> images(d);
  for (int k = 1; k <= d; ++k) {
    const int j = image(k);
    if (j <= d) images[j - 1] = k;
    else images[mirror(d, j) - 1] = mirror(d, k);
  }
  return from_images(d, images);
}

bool WeylElement::is_identity() const {
  for (int k = 0; k < dim(); ++k)
    if (perm_[k] != k + 1 || signs_[k] != 1) return false;
  return true;
}

int WeylElement::length() const {
  // Window notation w(i) = sign * perm; length = inv(w) - sum of negative entries.
  const int d = dim();
  int len = 0;
  for (int i = 0; i < d; ++i) {
    const int wi = signs_[i] * perm_[i];
    if (wi < 0) len -= wi;
    for (int j = i + 1; j < d; ++j)
      if (wi > signs_[j] * perm_[j]) ++len;
  }
  return len;
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (perm_ != o.perm_) return perm_ < o.perm_;
  return signs_ < o.signs_;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < dim(); ++k) {
    if (k) os << ",";
    os << signs_[k] * perm_[k];
  }
  os << "]";
  return os.str();
}

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f) {
  if (f.is_zero()) return f;
  if (w.dim() != f.dim())
    throw DimensionMismatch("Weyl element of rank " + std::to_string(w.dim()) + " acting on dimension " +
                            std::to_string(f.dim()));
  if (w.is_identity()) return f;
  return substitute_slots(f, w.images());
}

std::vector<WeylElement> ParabolicSpec::generators() const {
  std::vector<WeylElement> gens;
  auto add_adjacent = [&](std::vector<int> block) {
    std::sort(block.begin(), block.end());
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      gens.push_back(WeylElement::transposition(d, block[k], block[k + 1]));
  };
  for (const auto& b : sym_blocks) add_adjacent(b);
  if (!hyper_block.empty()) {
    add_adjacent(hyper_block);
    gens.push_back(WeylElement::iota(d, *std::min_element(hyper_block.begin(), hyper_block.end())));
  }
  return gens;
}

std::vector<WeylElement> ParabolicSpec::elements() const {
  std::vector<std::vector<int>> partial{std::vector<int>(d)};
  for (int k = 1; k <= d; ++k) partial[0][k - 1] = k;
  auto extend_perm = [&](const std::vector<int>& block, bool signed_block) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> next;
    std::vector<int> p = sorted;
    do {
      const int nsign = signed_block ? (1 << sorted.size()) : 1;
      for (int mask = 0; mask < nsign; ++mask) {
        for (const auto& base : partial) {
          std::vector<int> img = base;
          for (std::size_t k = 0; k < sorted.size(); ++k)
            img[sorted[k] - 1] = (mask >> k) & 1 ? mirror(d, p[k]) : p[k];
          next.push_back(std::move(img));
        }
      }
    } while (std::next_permutation(p.begin(), p.end()));
    partial = std::move(next);
  };
  for (const auto& b : sym_blocks) extend_perm(b, false);
  if (!hyper_block.empty()) extend_perm(hyper_block, true);
  std::vector<WeylElement> out;
  out.reserve(partial.size());
  for (const auto& img : partial) out.push_back(WeylElement::from_images(d, img));
  return out;
}

std::size_t ParabolicSpec::order() const {
  auto fact = [](std::size_t n) {
    std::size_t r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= k;
    return r;
  };
  std::size_t r = 1;
  for (const auto& b : sym_blocks) r *= fact(b.size());
  r *= fact(hyper_block.size()) << hyper_block.size();
  return r;
}

bool ParabolicSpec::contains(const WeylElement& w) const {
  if (w.dim() != d) return false;
  for (int k = 1; k <= d; ++k) {
    const int img = w.image(k);
    bool placed = false;
    for (const auto& b : sym_blocks) {
      if (!in_block(b, k)) continue;
      if (!in_block(b, img)) return false;
      placed = true;
    }
    if (in_block(hyper_block, k)) {
      if (!in_block(hyper_block, img) && !in_block(hyper_block, mirror(d, img))) return false;
      placed = true;
    }
    if (!placed && img != k) return false;
  }
  return true;
}

bool ParabolicSpec::contains(const ParabolicSpec& sub) const {
  if (sub.d != d) return false;
  for (const auto& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool ParabolicSpec::is_invariant(const LaurentPoly& f) const {
  for (const auto& g : generators())
    if (weyl_act(g, f) != f) return false;
  return true;
}

void ParabolicSpec::validate() const {
  std::set<int> seen;
  auto take = [&](int k) {
    if (k < 1 || k > d) throw InvalidArgument("parabolic block index outside 1..d");
    if (!seen.insert(k).second) throw InvalidArgument("parabolic blocks overlap");
  };
  for (const auto& b : sym_blocks)
    for (int k : b) take(k);
  for (int k : hyper_block) take(k);
}

std::string ParabolicSpec::to_string() const {
  std::ostringstream os;
  os << "S{";
  for (std::size_t i = 0; i < sym_blocks.size(); ++i) {
    if (i) os << "|";
    for (std::size_t k = 0; k < sym_blocks[i].size(); ++k) os << (k ? "," : "") << sym_blocks[i][k];
  }
  os << "} B{";
  for (std::size_t k = 0; k < hyper_block.size(); ++k) os << (k ? "," : "") << hyper_block[k];
  os << "}";
  return os.str();
}

std::vector<WeylElement> coset_representatives(const ParabolicSpec& w2, const ParabolicSpec& w1) {
  w2.validate();
  w1.validate();
  if (!w2.contains(w1)) throw InvalidArgument("subgroup " + w1.to_string() + " is not contained in " + w2.to_string());
  std::vector<WeylElement> all = w2.elements();
  std::stable_sort(all.begin(), all.end(), [](const WeylElement& a, const WeylElement& b) {
    const int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
  });
  std::vector<WeylElement> reps;
  std::vector<WeylElement> rep_inverses;
  const std::size_t expected = w2.order() / w1.order();
  for (const auto& g : all) {
    bool covered = false;
    for (const auto& ri : rep_inverses) {
      if (w1.contains(ri * g)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    reps.push_back(g);
    rep_inverses.push_back(g.inverse());
    if (reps.size() == expected) break;
  }
  return reps;
}

LaurentPoly coset_symmetrize(const ParabolicSpec& w2, const ParabolicSpec& w1, const LaurentPoly& f) {
  if (f.dim() != 0 && f.dim() != w2.d) throw DimensionMismatch("polynomial dimension differs from Weyl rank");
  const auto reps = coset_representatives(w2, w1);
  if (!w1.is_invariant(f)) throw InvarianceError("input is not invariant under " + w1.to_string());
  LaurentPoly sum(w2.d);
  for (const auto& g : reps) sum += weyl_act(g, f);
  return sum;
}

}  // namespace iqpoly
