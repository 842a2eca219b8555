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

#ifndef TUTTEHOPF_MATROID_HPP_
#define TUTTEHOPF_MATROID_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tuttehopf {

inline constexpr int kMaxGroundSize = 63;

// Thrown for inputs that do not describe a matroid (or violate a size cap).
class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an operation is asked to work above its documented size cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws SizeCapError when size > cap.
void require_cap(std::size_t size, int cap, const char* operation);

// A set of element labels, one bit per label (labels 0..62).
class GroundSubset {
 public:
  constexpr GroundSubset() = default;
  constexpr explicit GroundSubset(std::uint64_t mask) : mask_(mask) {}
  static GroundSubset of(std::initializer_list<int> elements);
  static GroundSubset of(const std::vector<int>& elements);
  static GroundSubset range(int n);  // {0, ..., n-1}
  static GroundSubset singleton(int e) { return GroundSubset(bit(e)); }

  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int e) const { return (mask_ >> e) & 1u; }
  bool subset_of(GroundSubset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<int> elements() const;

  GroundSubset operator|(GroundSubset o) const { return GroundSubset(mask_ | o.mask_); }
  GroundSubset operator&(GroundSubset o) const { return GroundSubset(mask_ & o.mask_); }
  GroundSubset operator-(GroundSubset o) const { return GroundSubset(mask_ & ~o.mask_); }
  GroundSubset with(int e) const { return GroundSubset(mask_ | bit(e)); }
  GroundSubset without(int e) const { return GroundSubset(mask_ & ~bit(e)); }

  friend auto operator<=>(const GroundSubset&, const GroundSubset&) = default;

  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

 private:
  std::uint64_t mask_ = 0;
};

std::string to_string(GroundSubset s);  // "{0,2,5}"

enum class ElementKind { Loop, Coloop, Nonseparating };

const char* to_string(ElementKind k);

struct ExplicitBackend {
  friend bool operator==(const ExplicitBackend&, const ExplicitBackend&) = default;
};
struct UniformBackend {
  int rank = 0;
  int size = 0;
  friend bool operator==(const UniformBackend&, const UniformBackend&) = default;
};
struct GraphicBackend {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphicBackend&, const GraphicBackend&) = default;
};
using Backend = std::variant<ExplicitBackend, UniformBackend, GraphicBackend>;

// A matroid on a labeled ground set, held as its basis family. Minors keep
// the labels of the parent, so (M|A)|B = M|B and (M/A)/B = M/(A u B) hold as
// equalities of values. Two matroids compare equal iff they have the same
// ground set and the same bases; the backend tag records only how the value
// was constructed.
class Matroid {
 public:
  // Validates basis equicardinality and the exchange axiom.
  static Matroid from_bases(int n, const std::vector<GroundSubset>& bases);
  // Same, on an arbitrary label set.
  static Matroid from_bases(GroundSubset ground,
                            const std::vector<GroundSubset>& bases);
  static Matroid uniform(int rank, int n);
  // Cycle matroid of a multigraph. Self-loops become matroid loops.
  static Matroid graphic(int vertices,
                         const std::vector<std::pair<int, int>>& edges);
  static Matroid empty();

  GroundSubset ground() const { return ground_; }
  int size() const { return ground_.size(); }
  std::vector<int> labels() const { return ground_.elements(); }
  // Sorted ascending by mask.
  const std::vector<GroundSubset>& bases() const { return bases_; }
  const Backend& backend() const { return backend_; }

  int rank() const { return bases_.front().size(); }
  int nullity() const { return size() - rank(); }
  // Largest |B n A| over bases B. A must be a subset of the ground set.
  int rank(GroundSubset a) const;
  int nullity(GroundSubset a) const { return a.size() - rank(a); }
  bool is_independent(GroundSubset a) const;
  ElementKind element_kind(int e) const;

  // Rank of every subset of the ground set, indexed by compressed mask (bit i
  // of the index stands for the i-th smallest label). Requires size() <= 26.
  std::vector<std::uint8_t> rank_table() const;
  // Maps between label masks and compressed indices.
  std::uint64_t compress(GroundSubset a) const;
  GroundSubset expand(std::uint64_t index) const;

  std::size_t hash() const;

  friend bool operator==(const Matroid& l, const Matroid& r) {
    return l.ground_ == r.ground_ && l.bases_ == r.bases_;
  }
  // Orders by ground set, then basis family.
  friend bool operator<(const Matroid& l, const Matroid& r);

  // Trusted constructor for already-valid basis families; sorts and dedupes.
  static Matroid from_trusted_bases(GroundSubset ground,
                                    std::vector<GroundSubset> bases,
                                    Backend backend = ExplicitBackend{});

 private:
  Matroid() = default;

  GroundSubset ground_;
  std::vector<GroundSubset> bases_;
  Backend backend_;
};

struct MatroidHash {
  std::size_t operator()(const Matroid& m) const { return m.hash(); }
};

// Compact description: "{labels}:{bases}", e.g. "{0,1}:{{0},{1}}".
std::string to_string(const Matroid& m);

Matroid restrict(const Matroid& m, GroundSubset t);
Matroid delete_elements(const Matroid& m, GroundSubset t);
// Bases of M/T are the sets X disjoint from T with |X| = r(M) - r(T) and
// r(X u T) = r(M); these are exactly B - T for the bases B meeting T in r(T)
// elements.
Matroid contract(const Matroid& m, GroundSubset t);
Matroid dual(const Matroid& m);
// Relabels M1 onto 0..n1-1 and M2 onto n1..n1+n2-1.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

inline constexpr int kCircuitsCap = 20;
std::vector<GroundSubset> circuits(const Matroid& m);

// Number of independent sets, spanning sets.
std::uint64_t count_independent(const Matroid& m);
std::uint64_t count_spanning(const Matroid& m);

// Rank computed from the construction backend instead of the basis family
// (min(|A|, r) for uniform, forest size for graphic). For explicit matroids
// this is rank(a).
int backend_rank(const Matroid& m, GroundSubset a);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_MATROID_HPP_
