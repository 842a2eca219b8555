// Copyright 2026 The Authors.
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

#include "tuttehopf/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace tuttehopf {

namespace {

constexpr int kRankTableCap = 26;

std::vector<GroundSubset> sorted_unique(std::vector<GroundSubset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int u, int v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    parent[u] = v;
    return true;
  }
  std::vector<int> parent;
};

int forest_rank(const GraphicBackend& g, GroundSubset a) {
  UnionFind uf(g.vertices);
  int r = 0;
  for (int e : a.elements()) {
    if (uf.unite(g.edges[e].first, g.edges[e].second)) ++r;
  }
  return r;
}

// Depth-first enumeration of spanning forests: each edge is either taken
// (when it joins two components) or skipped (when enough edges remain to
// still reach full rank).
void enumerate_forests(const GraphicBackend& g, int target, std::size_t edge,
                       std::vector<int>& parent_snapshot, std::uint64_t chosen,
                       int chosen_count, std::vector<GroundSubset>& out) {
  if (chosen_count == target) {
    out.emplace_back(chosen);
    return;
  }
  if (edge == g.edges.size()) return;
  if (static_cast<int>(g.edges.size() - edge) < target - chosen_count) return;

  UnionFind uf(g.vertices);
  uf.parent = parent_snapshot;
  const auto [u, v] = g.edges[edge];
  if (uf.find(u) != uf.find(v)) {
    std::vector<int> saved = parent_snapshot;
    uf.unite(u, v);
    parent_snapshot = uf.parent;
    enumerate_forests(g, target, edge + 1, parent_snapshot,
                      chosen | GroundSubset::bit(static_cast<int>(edge)),
                      chosen_count + 1, out);
    parent_snapshot = std::move(saved);
  }
  enumerate_forests(g, target, edge + 1, parent_snapshot, chosen, chosen_count,
                    out);
}

void k_subsets(int n, int k, int start, std::uint64_t acc,
               std::vector<GroundSubset>& out) {
  if (k == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int e = start; e <= n - k; ++e) {
    k_subsets(n, k - 1, e + 1, acc | GroundSubset::bit(e), out);
  }
}

}  // namespace

void require_cap(std::size_t size, int cap, const char* operation) {
  if (size > static_cast<std::size_t>(cap)) {
    throw SizeCapError(std::string(operation) + ": ground set of size " +
                       std::to_string(size) + " exceeds the cap of " +
                       std::to_string(cap));
  }
}

GroundSubset GroundSubset::of(std::initializer_list<int> elements) {
  return of(std::vector<int>(elements));
}

GroundSubset GroundSubset::of(const std::vector<int>& elements) {
  std::uint64_t m = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw MatroidError("element label " + std::to_string(e) +
                         " outside 0..62");
    }
    m |= bit(e);
  }
  return GroundSubset(m);
}

GroundSubset GroundSubset::range(int n) {
  return GroundSubset(n >= 64 ? ~std::uint64_t{0} : bit(n) - 1);
}

std::vector<int> GroundSubset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string to_string(GroundSubset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Loop: return "loop";
    case ElementKind::Coloop: return "coloop";
    case ElementKind::Nonseparating: return "nonseparating";
  }
  return "?";
}

Matroid Matroid::from_trusted_bases(GroundSubset ground,
                                    std::vector<GroundSubset> bases,
                                    Backend backend) {
  Matroid m;
  m.ground_ = ground;
  m.bases_ = sorted_unique(std::move(bases));
  m.backend_ = std::move(backend);
  return m;
}

Matroid Matroid::from_bases(int n, const std::vector<GroundSubset>& bases) {
  if (n < 0 || n > kMaxGroundSize) {
    throw MatroidError("ground set size " + std::to_string(n) +
                       " outside 0..63");
  }
  return from_bases(GroundSubset::range(n), bases);
}

Matroid Matroid::from_bases(GroundSubset ground,
                            const std::vector<GroundSubset>& bases) {
  if (ground.contains(63)) throw MatroidError("element label 63 not allowed");
  if (bases.empty()) {
    throw MatroidError(
        "(I1) violated: the basis family is empty, so there are no "
        "independent sets");
  }
  for (GroundSubset b : bases) {
    if (!b.subset_of(ground)) {
      throw MatroidError("basis " + to_string(b) +
                         " is not contained in the ground set " +
                         to_string(ground));
    }
  }
  std::vector<GroundSubset> family = sorted_unique(bases);
  for (GroundSubset b : family) {
    if (b.size() != family.front().size()) {
      throw MatroidError("bases of unequal cardinality: " +
                         to_string(family.front()) + " and " + to_string(b));
    }
  }
  std::unordered_set<std::uint64_t> lookup;
  for (GroundSubset b : family) lookup.insert(b.mask());
  for (GroundSubset b1 : family) {
    for (GroundSubset b2 : family) {
      for (int e : (b1 - b2).elements()) {
        bool found = false;
        for (int f : (b2 - b1).elements()) {
          if (lookup.count(b1.without(e).with(f).mask())) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw MatroidError("basis-exchange violated: B1=" + to_string(b1) +
                             ", B2=" + to_string(b2) + ", e=" +
                             std::to_string(e) +
                             " has no replacement in B2 - B1");
        }
      }
    }
  }
  return from_trusted_bases(ground, std::move(family));
}

Matroid Matroid::uniform(int rank, int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw MatroidError("uniform matroid size " + std::to_string(n) +
                       " outside 0..63");
  }
  if (rank < 0 || rank > n) {
    throw MatroidError("uniform matroid U(" + std::to_string(rank) + "," +
                       std::to_string(n) + ") needs 0 <= r <= n");
  }
  std::vector<GroundSubset> bases;
  k_subsets(n, rank, 0, 0, bases);
  return from_trusted_bases(GroundSubset::range(n), std::move(bases),
                            UniformBackend{rank, n});
}

Matroid Matroid::graphic(int vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 0) throw MatroidError("negative vertex count");
  if (edges.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw MatroidError("graph has " + std::to_string(edges.size()) +
                       " edges; at most 63 are supported");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw MatroidError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has an endpoint outside 0.." +
                         std::to_string(vertices - 1));
    }
  }
  GraphicBackend g{vertices, edges};
  const int n = static_cast<int>(edges.size());
  const int target = forest_rank(g, GroundSubset::range(n));
  std::vector<GroundSubset> bases;
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  enumerate_forests(g, target, 0, parent, 0, 0, bases);
  return from_trusted_bases(GroundSubset::range(n), std::move(bases),
                            std::move(g));
}

Matroid Matroid::empty() {
  return from_trusted_bases(GroundSubset(), {GroundSubset()},
                            UniformBackend{0, 0});
}

int Matroid::rank(GroundSubset a) const {
  int r = 0;
  for (GroundSubset b : bases_) r = std::max(r, (b & a).size());
  return r;
}

bool Matroid::is_independent(GroundSubset a) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [a](GroundSubset b) { return a.subset_of(b); });
}

ElementKind Matroid::element_kind(int e) const {
  std::size_t containing = 0;
  for (GroundSubset b : bases_) containing += b.contains(e) ? 1 : 0;
  if (containing == 0) return ElementKind::Loop;
  if (containing == bases_.size()) return ElementKind::Coloop;
  return ElementKind::Nonseparating;
}

std::uint64_t Matroid::compress(GroundSubset a) const {
  std::uint64_t index = 0;
  int i = 0;
  for (std::uint64_t g = ground_.mask(); g != 0; g &= g - 1, ++i) {
    if (a.contains(std::countr_zero(g))) index |= std::uint64_t{1} << i;
  }
  return index;
}

GroundSubset Matroid::expand(std::uint64_t index) const {
  std::uint64_t mask = 0;
  for (std::uint64_t g = ground_.mask(); g != 0 && index != 0;
       g &= g - 1, index >>= 1) {
    if (index & 1u) mask |= g & (~g + 1);
  }
  return GroundSubset(mask);
}

// Independent sets are the subsets of bases, propagated downward from the
// basis family; rank then follows from r(A) = max_e r(A - e) on dependent A.
std::vector<std::uint8_t> Matroid::rank_table() const {
  const int n = size();
  require_cap(n, kRankTableCap, "rank_table");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> independent(total, 0);
  for (GroundSubset b : bases_) independent[compress(b)] = 1;
  for (std::size_t a = total; a-- > 0;) {
    if (independent[a]) continue;
    for (int i = 0; i < n; ++i) {
      const std::size_t sup = a | (std::size_t{1} << i);
      if (sup != a && independent[sup]) {
        independent[a] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> rank(total, 0);
  for (std::size_t a = 1; a < total; ++a) {
    if (independent[a]) {
      rank[a] = static_cast<std::uint8_t>(std::popcount(a));
      continue;
    }
    std::uint8_t r = 0;
    for (std::size_t rest = a; rest != 0; rest &= rest - 1) {
      r = std::max(r, rank[a & ~(rest & (~rest + 1))]);
    }
    rank[a] = r;
  }
  return rank;
}

std::size_t Matroid::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(ground_.mask());
  for (GroundSubset b : bases_) {
    h ^= std::hash<std::uint64_t>{}(b.mask()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

bool operator<(const Matroid& l, const Matroid& r) {
  if (l.ground_ != r.ground_) return l.ground_ < r.ground_;
  return l.bases_ < r.bases_;
}

std::string to_string(const Matroid& m) {
  std::string out = to_string(m.ground()) + ":{";
  bool first = true;
  for (GroundSubset b : m.bases()) {
    if (!first) out += ',';
    out += to_string(b);
    first = false;
  }
  return out + "}";
}

Matroid restrict(const Matroid& m, GroundSubset t) {
  if (!t.subset_of(m.ground())) {
    throw MatroidError("restriction set " + to_string(t) +
                       " not inside the ground set");
  }
  const int rt = m.rank(t);
  std::vector<GroundSubset> bases;
  for (GroundSubset b : m.bases()) {
    if ((b & t).size() == rt) bases.push_back(b & t);
  }
  return Matroid::from_trusted_bases(t, std::move(bases));
}

Matroid delete_elements(const Matroid& m, GroundSubset t) {
  if (!t.subset_of(m.ground())) {
    throw MatroidError("deletion set " + to_string(t) +
                       " not inside the ground set");
  }
  return restrict(m, m.ground() - t);
}

Matroid contract(const Matroid& m, GroundSubset t) {
  if (!t.subset_of(m.ground())) {
    throw MatroidError("contraction set " + to_string(t) +
                       " not inside the ground set");
  }
  const int rt = m.rank(t);
  std::vector<GroundSubset> bases;
  for (GroundSubset b : m.bases()) {
    if ((b & t).size() == rt) bases.push_back(b - t);
  }
  return Matroid::from_trusted_bases(m.ground() - t, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<GroundSubset> bases;
  bases.reserve(m.bases().size());
  for (GroundSubset b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::from_trusted_bases(m.ground(), std::move(bases));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int n1 = m1.size();
  const int n2 = m2.size();
  if (n1 + n2 > kMaxGroundSize) {
    throw MatroidError("direct sum would have " + std::to_string(n1 + n2) +
                       " elements; at most 63 are supported");
  }
  std::vector<GroundSubset> bases;
  bases.reserve(m1.bases().size() * m2.bases().size());
  for (GroundSubset b1 : m1.bases()) {
    const std::uint64_t c1 = m1.compress(b1);
    for (GroundSubset b2 : m2.bases()) {
      bases.emplace_back(c1 | (m2.compress(b2) << n1));
    }
  }
  return Matroid::from_trusted_bases(GroundSubset::range(n1 + n2),
                                     std::move(bases));
}

std::vector<GroundSubset> circuits(const Matroid& m) {
  require_cap(m.size(), kCircuitsCap, "circuits");
  const auto rank = m.rank_table();
  std::vector<GroundSubset> out;
  for (std::size_t a = 1; a < rank.size(); ++a) {
    const int size = std::popcount(a);
    if (rank[a] != size - 1) continue;
    bool minimal = true;
    for (std::size_t rest = a; rest != 0; rest &= rest - 1) {
      const std::size_t sub = a & ~(rest & (~rest + 1));
      if (rank[sub] != size - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m.expand(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_independent(const Matroid& m) {
  const auto rank = m.rank_table();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < rank.size(); ++a) {
    if (rank[a] == std::popcount(a)) ++count;
  }
  return count;
}

std::uint64_t count_spanning(const Matroid& m) {
  const auto rank = m.rank_table();
  std::uint64_t count = 0;
  for (std::uint8_t r : rank) {
    if (r == m.rank()) ++count;
  }
  return count;
}

int backend_rank(const Matroid& m, GroundSubset a) {
  return std::visit(
      [&](const auto& backend) -> int {
        using T = std::decay_t<decltype(backend)>;
        if constexpr (std::is_same_v<T, UniformBackend>) {
          return std::min(a.size(), backend.rank);
        } else if constexpr (std::is_same_v<T, GraphicBackend>) {
          return forest_rank(backend, a);
        } else {
          return m.rank(a);
        }
      },
      m.backend());
}

}  // namespace tuttehopf
