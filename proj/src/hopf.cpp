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

#include "tuttehopf/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "tuttehopf/tutte.hpp"

namespace tuttehopf {

struct Character::State {
  CharacterKind kind;
  Eval eval;
  Options options;
  std::mutex mutex;
  std::unordered_map<Matroid, MultiPoly, MatroidHash> cache;
};

namespace {

bool is_single_loop(const Matroid& m) {
  return m.size() == 1 && m.rank() == 0;
}

bool is_single_coloop(const Matroid& m) {
  return m.size() == 1 && m.rank() == 1;
}

Matroid single_element(int e, bool coloop) {
  const GroundSubset g = GroundSubset::singleton(e);
  return Matroid::from_trusted_bases(g, {coloop ? g : GroundSubset()});
}

mpq_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return mpq_class(f);
}

CharacterKind combined_kind(CharacterKind l, CharacterKind r) {
  if (l == CharacterKind::kInfinitesimal && r == CharacterKind::kInfinitesimal) {
    return CharacterKind::kInfinitesimal;
  }
  return CharacterKind::kLinear;
}

}  // namespace

const char* to_string(CharacterKind k) {
  switch (k) {
    case CharacterKind::kCharacter: return "character";
    case CharacterKind::kInfinitesimal: return "infinitesimal";
    case CharacterKind::kLinear: return "linear";
  }
  return "?";
}

Character::Character(CharacterKind kind, Eval eval)
    : Character(kind, std::move(eval), Options{}) {}

Character::Character(CharacterKind kind, Eval eval, Options options)
    : state_(std::make_shared<State>()) {
  state_->kind = kind;
  state_->eval = std::move(eval);
  state_->options = options;
}

CharacterKind Character::kind() const { return state_->kind; }

bool Character::singleton_supported() const {
  return state_->options.singleton_supported;
}

MultiPoly Character::operator()(const Matroid& m) const {
  if (state_->options.singleton_supported && m.size() != 1) return MultiPoly();
  if (!state_->options.memoize) return state_->eval(m);
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    if (auto it = state_->cache.find(m); it != state_->cache.end()) {
      return it->second;
    }
  }
  MultiPoly value = state_->eval(m);
  std::lock_guard<std::mutex> lock(state_->mutex);
  state_->cache.emplace(m, value);
  return value;
}

MultiPoly counit(const Matroid& m) {
  return m.size() == 0 ? MultiPoly(1) : MultiPoly();
}

Character counit_character() {
  return Character(CharacterKind::kCharacter, counit);
}

Character delta_loop() {
  return Character(
      CharacterKind::kInfinitesimal,
      [](const Matroid& m) {
        return is_single_loop(m) ? MultiPoly(1) : MultiPoly();
      },
      {.singleton_supported = true});
}

Character delta_coloop() {
  return Character(
      CharacterKind::kInfinitesimal,
      [](const Matroid& m) {
        return is_single_coloop(m) ? MultiPoly(1) : MultiPoly();
      },
      {.singleton_supported = true});
}

Character scale(const MultiPoly& coefficient, const Character& f) {
  CharacterKind kind = f.kind();
  if (kind == CharacterKind::kCharacter && !(coefficient == MultiPoly(1))) {
    kind = CharacterKind::kLinear;
  }
  return Character(
      kind, [coefficient, f](const Matroid& m) { return coefficient * f(m); },
      {.singleton_supported = f.singleton_supported()});
}

Character operator+(const Character& f, const Character& g) {
  return Character(
      combined_kind(f.kind(), g.kind()),
      [f, g](const Matroid& m) { return f(m) + g(m); },
      {.singleton_supported =
           f.singleton_supported() && g.singleton_supported()});
}

Character operator-(const Character& f, const Character& g) {
  return f + scale(MultiPoly(-1), g);
}

Character loop_coloop_combination(const MultiPoly& coloop_weight,
                                  const MultiPoly& loop_weight) {
  return scale(coloop_weight, delta_coloop()) +
         scale(loop_weight, delta_loop());
}

Character convolve(const Character& f, const Character& g) {
  const CharacterKind kind = (f.kind() == CharacterKind::kCharacter &&
                              g.kind() == CharacterKind::kCharacter)
                                 ? CharacterKind::kCharacter
                                 : CharacterKind::kLinear;
  auto eval = [f, g](const Matroid& m) {
    require_cap(m.size(), kCoproductCap, "convolve");
    const int n = m.size();
    const std::uint64_t subsets = std::uint64_t{1} << n;
    MultiPoly sum;
    for (std::uint64_t index = 0; index < subsets; ++index) {
      const int left_size = std::popcount(index);
      if (f.singleton_supported() && left_size != 1) continue;
      if (g.singleton_supported() && n - left_size != 1) continue;
      const GroundSubset a = m.expand(index);
      MultiPoly left = f(restrict(m, a));
      if (left.is_zero()) continue;
      sum += left * g(contract(m, a));
    }
    return sum;
  };
  return Character(kind, std::move(eval), {.memoize = true});
}

Character commutator(const Character& f, const Character& g) {
  return convolve(f, g) - convolve(g, f);
}

Character exp_star(const Character& d) {
  if (d.kind() != CharacterKind::kInfinitesimal) {
    throw std::invalid_argument("exp_star needs an infinitesimal character");
  }
  if (!d.singleton_supported()) {
    throw std::invalid_argument(
        "exp_star needs a map supported on single-element matroids; use "
        "exp_star_kfold otherwise");
  }
  // d on single-element matroids, keyed by (label, is coloop).
  struct SingletonValues {
    std::mutex mu;
    std::map<std::pair<int, bool>, MultiPoly> values;
  };
  auto cache = std::make_shared<SingletonValues>();
  auto on_single = [d, cache](int e, bool coloop) {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto [it, inserted] = cache->values.try_emplace({e, coloop});
    if (inserted) it->second = d(single_element(e, coloop));
    return it->second;
  };
  auto eval = [on_single](const Matroid& m) {
    require_cap(m.size(), kExpStarCap, "exp_star");
    const int n = m.size();
    if (n == 0) return MultiPoly(1);
    const auto labels = m.labels();
    // d on the single-element minors {e} as a loop / as a coloop, as indices
    // into the list of distinct values.
    std::vector<MultiPoly> weights;
    auto weight_id = [&weights](const MultiPoly& w) {
      const auto it = std::find(weights.begin(), weights.end(), w);
      if (it != weights.end()) return static_cast<int>(it - weights.begin());
      weights.push_back(w);
      return static_cast<int>(weights.size()) - 1;
    };
    std::vector<int> on_loop;
    std::vector<int> on_coloop;
    for (int e : labels) {
      on_loop.push_back(weight_id(on_single(e, false)));
      on_coloop.push_back(weight_id(on_single(e, true)));
    }
    const auto rank = m.rank_table();
    // chain[A] = d^{*(n-|A|)}(M/A), filled from the full set downward.
    // (M/A)|{e} is a coloop exactly when r(A + e) > r(A). Successors sharing
    // a weight are summed before multiplying.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<MultiPoly> chain(full + 1);
    chain[full] = MultiPoly(1);
    std::vector<MultiPoly> buckets(weights.size());
    for (std::size_t a = full; a-- > 0;) {
      for (auto& b : buckets) b = MultiPoly();
      for (int i = 0; i < n; ++i) {
        const std::size_t with = a | (std::size_t{1} << i);
        if (with == a || chain[with].is_zero()) continue;
        buckets[rank[with] > rank[a] ? on_coloop[i] : on_loop[i]] +=
            chain[with];
      }
      MultiPoly sum;
      for (std::size_t w = 0; w < weights.size(); ++w) {
        if (!buckets[w].is_zero() && !weights[w].is_zero()) {
          sum += weights[w] * buckets[w];
        }
      }
      chain[a] = std::move(sum);
    }
    return chain[0] * MultiPoly(mpq_class(1 / factorial(n)));
  };
  return Character(CharacterKind::kCharacter, std::move(eval),
                   {.memoize = true});
}

Character exp_star_kfold(const Character& d) {
  if (d.kind() != CharacterKind::kInfinitesimal) {
    throw std::invalid_argument(
        "exp_star_kfold needs an infinitesimal character");
  }
  // powers[k] = d^{*k}; grown lazily since different matroids need
  // different depths.
  auto powers = std::make_shared<std::vector<Character>>(
      std::vector<Character>{counit_character()});
  auto mutex = std::make_shared<std::mutex>();
  auto eval = [d, powers, mutex](const Matroid& m) {
    require_cap(m.size(), kExpStarKFoldCap, "exp_star_kfold");
    MultiPoly sum;
    for (int k = 0; k <= m.size(); ++k) {
      Character power = [&] {
        std::lock_guard<std::mutex> lock(*mutex);
        while (static_cast<int>(powers->size()) <= k) {
          powers->push_back(convolve(d, powers->back()));
        }
        return (*powers)[k];
      }();
      sum += power(m) * MultiPoly(mpq_class(1 / factorial(k)));
    }
    return sum;
  };
  return Character(CharacterKind::kCharacter, std::move(eval),
                   {.memoize = true});
}

Character alpha_character() {
  using namespace vars;
  const Character left =
      exp_star(scale(s(), loop_coloop_combination(1, y() - 1)));
  const Character right =
      exp_star(scale(s(), loop_coloop_combination(x() - 1, 1)));
  return convolve(left, right);
}

MultiPoly alpha(const Matroid& m) {
  require_cap(m.size(), kAlphaCap, "alpha");
  return alpha_character()(m);
}

Character beta_character() {
  return Character(
      CharacterKind::kCharacter,
      [](const Matroid& m) {
        require_cap(m.size(), kBetaCap, "beta");
        return MultiPoly::variable(Var::s, m.size()) * q_universal(m);
      },
      {.memoize = true});
}

MultiPoly beta(const Matroid& m) { return beta_character()(m); }

namespace {

// x F*dc + y dl*F + c_coloop [dc, F] - c_loop [dl, F], evaluated on m.
MultiPoly flow_rhs(const Character& f, const MultiPoly& coloop_bracket,
                   const MultiPoly& loop_bracket, const Matroid& m) {
  const Character dc = delta_coloop();
  const Character dl = delta_loop();
  return vars::x() * convolve(f, dc)(m) + vars::y() * convolve(dl, f)(m) +
         coloop_bracket * commutator(dc, f)(m) -
         loop_bracket * commutator(dl, f)(m);
}

}  // namespace

FlowSides flow_alpha_sides(const Matroid& m) {
  require_cap(m.size(), kFlowCap, "verify_flow_alpha");
  const Character a = alpha_character();
  return {deriv_s(a(m)), flow_rhs(a, 1, 1, m)};
}

bool verify_flow_alpha(const Matroid& m) {
  const FlowSides sides = flow_alpha_sides(m);
  return sides.lhs == sides.rhs;
}

FlowSides flow_beta_sides(const Matroid& m) {
  require_cap(m.size(), kFlowCap, "verify_flow_beta");
  const Character b = beta_character();
  return {deriv_s(b(m)), flow_rhs(b, vars::b(), vars::a(), m)};
}

bool verify_flow_beta(const Matroid& m) {
  const FlowSides sides = flow_beta_sides(m);
  return sides.lhs == sides.rhs;
}

MultiPoly four_factor_product(const Matroid& m) {
  require_cap(m.size(), kFourFactorCap, "verify_four_factor");
  using namespace vars;
  const Character e1 =
      exp_star(scale(s(), loop_coloop_combination(1, y() - 1)));
  const Character e2 = exp_star(scale(s(), loop_coloop_combination(-1, 1)));
  const Character e3 = exp_star(scale(s(), loop_coloop_combination(1, -1)));
  const Character e4 =
      exp_star(scale(s(), loop_coloop_combination(x() - 1, 1)));
  return convolve(convolve(convolve(e1, e2), e3), e4)(m);
}

bool verify_four_factor(const Matroid& m) {
  return four_factor_product(m) == alpha(m);
}

bool TensorSum::PairLess::operator()(const std::pair<Matroid, Matroid>& l,
                                     const std::pair<Matroid, Matroid>& r) const {
  if (l.first < r.first) return true;
  if (r.first < l.first) return false;
  return l.second < r.second;
}

void TensorSum::add(const MultiPoly& coefficient, const Matroid& left,
                    const Matroid& right) {
  if (coefficient.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorSum TensorSum::scaled(const MultiPoly& coefficient) const {
  TensorSum out;
  for (const auto& [key, c] : terms_) {
    out.add(coefficient * c, key.first, key.second);
  }
  return out;
}

std::vector<TensorTerm> TensorSum::terms() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    out.push_back(TensorTerm{c, key.first, key.second});
  }
  return out;
}

bool operator==(const TensorSum& l, const TensorSum& r) {
  if (l.terms_.size() != r.terms_.size()) return false;
  auto i = l.terms_.begin();
  auto j = r.terms_.begin();
  for (; i != l.terms_.end(); ++i, ++j) {
    if (!(i->first.first == j->first.first) ||
        !(i->first.second == j->first.second) || !(i->second == j->second)) {
      return false;
    }
  }
  return true;
}

std::string to_string(const TensorSum& t) {
  std::string out;
  for (const TensorTerm& term : t.terms()) {
    out += term.coefficient.to_string() + " | " + to_string(term.left) +
           " | " + to_string(term.right) + "\n";
  }
  return out;
}

TensorSum coproduct(const Matroid& m) {
  require_cap(m.size(), kCoproductCap, "coproduct");
  TensorSum out;
  const std::uint64_t subsets = std::uint64_t{1} << m.size();
  for (std::uint64_t index = 0; index < subsets; ++index) {
    const GroundSubset a = m.expand(index);
    out.add(1, restrict(m, a), contract(m, a));
  }
  return out;
}

WeightedMatroid phi(const Matroid& m) {
  return {MultiPoly::variable(Var::a, m.rank()) *
              MultiPoly::variable(Var::b, m.nullity()),
          m};
}

bool verify_phi_morphism(const Matroid& m) {
  require_cap(m.size(), kPhiCap, "verify_phi_morphism");
  const WeightedMatroid image = phi(m);
  const TensorSum delta = coproduct(m);
  const TensorSum lhs = delta.scaled(image.coefficient);
  TensorSum rhs;
  for (const TensorTerm& term : delta.terms()) {
    const WeightedMatroid l = phi(term.left);
    const WeightedMatroid r = phi(term.right);
    rhs.add(term.coefficient * l.coefficient * r.coefficient, l.matroid,
            r.matroid);
  }
  return lhs == rhs;
}

bool satisfies_kind_law(const Character& f, const Matroid& m1,
                        const Matroid& m2) {
  const Matroid sum = direct_sum(m1, m2);
  const Matroid nothing = Matroid::empty();
  switch (f.kind()) {
    case CharacterKind::kCharacter:
      return f(nothing) == MultiPoly(1) && f(sum) == f(m1) * f(m2);
    case CharacterKind::kInfinitesimal:
      return f(nothing).is_zero() &&
             f(sum) == f(m1) * counit(m2) + counit(m1) * f(m2);
    case CharacterKind::kLinear:
      return true;
  }
  return false;
}

}  // namespace tuttehopf
