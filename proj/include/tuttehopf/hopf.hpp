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

// The matroid Hopf algebra (restriction/contraction coproduct), realized on
// labeled matroids, and the convolution algebra of maps from it into
// Q[x, y, a, b, s].
//
// Maps are held extensionally: a Character is an evaluation function plus a
// kind tag. Convolution builds a new evaluation function over the coproduct
// sum_{A subset E} M|A (x) M/A. The kind tag is a promise, not a proof; the
// laws it promises are checked by sampling (see satisfies_kind_law).

#ifndef TUTTEHOPF_HOPF_HPP_
#define TUTTEHOPF_HOPF_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tuttehopf/matroid.hpp"
#include "tuttehopf/poly.hpp"

namespace tuttehopf {

inline constexpr int kCoproductCap = 14;
inline constexpr int kExpStarCap = 20;
inline constexpr int kExpStarKFoldCap = 10;
inline constexpr int kAlphaCap = 14;
inline constexpr int kBetaCap = 20;
inline constexpr int kFlowCap = 12;
inline constexpr int kFourFactorCap = 10;
inline constexpr int kPhiCap = 12;

enum class CharacterKind {
  kCharacter,      // multiplicative on direct sums, 1 on the empty matroid
  kInfinitesimal,  // epsilon-derivation, 0 on the empty matroid
  kLinear,         // no structural promise
};

const char* to_string(CharacterKind k);

class Character {
 public:
  using Eval = std::function<MultiPoly(const Matroid&)>;

  struct Options {
    // The map vanishes on every matroid whose ground set is not a singleton.
    bool singleton_supported = false;
    // Cache values per exact matroid (ground labels and bases).
    bool memoize = false;
  };

  Character(CharacterKind kind, Eval eval);
  Character(CharacterKind kind, Eval eval, Options options);

  MultiPoly operator()(const Matroid& m) const;

  CharacterKind kind() const;
  bool singleton_supported() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// The counit: 1 on the empty matroid, 0 otherwise.
MultiPoly counit(const Matroid& m);
Character counit_character();

// 1 on the single-element matroid whose element is a loop (resp. coloop), 0
// everywhere else. Decided by the basis family, not by labels.
Character delta_loop();
Character delta_coloop();

// Pointwise linear combinations. The kind survives only when all inputs
// share it and, for characters, the combination is trivially a character.
Character scale(const MultiPoly& coefficient, const Character& f);
Character operator+(const Character& f, const Character& g);
Character operator-(const Character& f, const Character& g);

// coloop_weight * delta_coloop + loop_weight * delta_loop.
Character loop_coloop_combination(const MultiPoly& coloop_weight,
                                  const MultiPoly& loop_weight);

// (f * g)(M) = sum_{A subset E} f(M|A) g(M/A). Memoized. Sums only over the
// subsets where a singleton-supported factor can be nonzero.
Character convolve(const Character& f, const Character& g);
// [f, g] = f * g - g * f.
Character commutator(const Character& f, const Character& g);

// exp_*(d) = sum_k d^{*k} / k!. For d supported on single-element matroids
// only the k = |E| term survives, and
//   d^{*k}(M) = sum_{e in E} d(M|{e}) d^{*(k-1)}(M/{e}),
// which is evaluated over the 2^|E| contractions of M.
// Throws std::invalid_argument unless d is infinitesimal and
// singleton-supported.
Character exp_star(const Character& d);

// Reference exp_* through repeated full convolutions, truncated at k = |E|.
// Works for any infinitesimal d. Exponential in a much worse way; meant for
// |E| <= kExpStarKFoldCap.
Character exp_star_kfold(const Character& d);

// alpha = exp_*(s(delta_coloop + (y-1) delta_loop))
//         * exp_*(s((x-1) delta_coloop + delta_loop)).
Character alpha_character();
MultiPoly alpha(const Matroid& m);

// beta(M) = s^{|E|} Q_M(x, y, a, b).
Character beta_character();
MultiPoly beta(const Matroid& m);

// The two sides of a flow equation evaluated on one matroid.
struct FlowSides {
  MultiPoly lhs;  // d/ds of the character
  MultiPoly rhs;  // the convolution expression
};

// d alpha/ds = x alpha*dc + y dl*alpha + [dc, alpha] - [dl, alpha].
FlowSides flow_alpha_sides(const Matroid& m);
bool verify_flow_alpha(const Matroid& m);

// d beta/ds = x beta*dc + y dl*beta + b [dc, beta] - a [dl, beta].
FlowSides flow_beta_sides(const Matroid& m);
bool verify_flow_beta(const Matroid& m);

// exp_*(s(dc + (y-1) dl)) * exp_*(s(-dc + dl)) * exp_*(s(dc - dl))
//   * exp_*(s((x-1) dc + dl)), evaluated on m.
MultiPoly four_factor_product(const Matroid& m);
bool verify_four_factor(const Matroid& m);

// One term of a tensor expression.
struct TensorTerm {
  MultiPoly coefficient;
  Matroid left;
  Matroid right;
};

// Finite formal sum of coefficient * (left (x) right). Always canonical:
// equal (left, right) pairs are merged, zero coefficients dropped, and terms
// ordered by (left ground, left bases, right ground, right bases).
class TensorSum {
 public:
  void add(const MultiPoly& coefficient, const Matroid& left,
           const Matroid& right);
  TensorSum scaled(const MultiPoly& coefficient) const;

  std::vector<TensorTerm> terms() const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const TensorSum& l, const TensorSum& r);

 private:
  struct PairLess {
    bool operator()(const std::pair<Matroid, Matroid>& l,
                    const std::pair<Matroid, Matroid>& r) const;
  };
  std::map<std::pair<Matroid, Matroid>, MultiPoly, PairLess> terms_;
};

// One line per term: "<coefficient> | <left> | <right>".
std::string to_string(const TensorSum& t);

// Delta(M) = sum_{A subset E} M|A (x) M/A.
TensorSum coproduct(const Matroid& m);

struct WeightedMatroid {
  MultiPoly coefficient;
  Matroid matroid;
};

// phi_{a,b}(M) = a^{r(M)} b^{n(M)} M.
WeightedMatroid phi(const Matroid& m);

// Delta(phi(M)) == (phi (x) phi)(Delta(M)).
bool verify_phi_morphism(const Matroid& m);

// Sample checks of the laws a kind tag promises, on a pair of matroids:
// f(M1 + M2) == f(M1) f(M2) and f(empty) == 1 for characters;
// f(M1 + M2) == f(M1) e(M2) + e(M1) f(M2) and f(empty) == 0 for
// infinitesimal characters. Always true for kLinear.
bool satisfies_kind_law(const Character& f, const Matroid& m1,
                        const Matroid& m2);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_HOPF_HPP_
