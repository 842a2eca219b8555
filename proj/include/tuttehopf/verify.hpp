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

#ifndef TUTTEHOPF_VERIFY_HPP_
#define TUTTEHOPF_VERIFY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tuttehopf/corpus.hpp"
#include "tuttehopf/matroid.hpp"

namespace tuttehopf {

// Whole-matroid identity checks. Each returns true iff the identity holds
// exactly on the given case.
namespace checks {

// 0 <= r(A) <= |A|, monotonicity, submodularity, over all subsets.
bool rank_axioms(const Matroid& m);
// Basis family rank agrees with the uniform/graphic construction.
bool backend_agreement(const Matroid& m);
// Bases are equicardinal and satisfy exchange.
bool basis_exchange(const Matroid& m);
// M|T == M \ (E - T) for all T.
bool restrict_is_delete_complement(const Matroid& m);
// M/e == M\e for every coloop e.
bool coloop_contract_is_delete(const Matroid& m);
// r_{M/T}(X) == r(X u T) - r(T) for all T and X subset E - T.
bool contraction_rank(const Matroid& m);
// r(M|T) + r(M/T) == r(M) and the same for nullity, all T.
bool rank_additivity(const Matroid& m);
// (M*)* == M.
bool dual_involution(const Matroid& m);
// M/T == (M* \ T)* for all T.
bool contract_is_dual_delete_dual(const Matroid& m);
// Loops are exactly the elements forming single-element circuits.
bool loops_are_singleton_circuits(const Matroid& m);

// tutte_rank_sum == q_universal|a=b=1 == recipe_closed_form|a=b=1.
bool tutte_cross_algorithm(const Matroid& m);
// q_universal == recipe_closed_form.
bool recipe_theorem(const Matroid& m);
// recipe_closed_form agrees with a^{n} b^{r} T(x/b, y/a) at rational points.
bool recipe_rational_substitution(const Matroid& m);
// q_universal under seeded random element choice == default choice.
bool selection_rule_independence(const Matroid& m);
// T(1,1) bases, T(2,2) = 2^|E|, T(2,1) independent sets, T(1,2) spanning.
bool tutte_evaluations(const Matroid& m);
// T(M1 + M2) == T(M1) T(M2).
bool tutte_multiplicative(const Matroid& m1, const Matroid& m2);

// exp_*(a dc + b dl)(M) == a^{r(M)} b^{n(M)}.
bool exp_star_rank_nullity(const Matroid& m);
// Singleton-chain exp_* == k-fold convolution exp_* for a few infinitesimals.
bool exp_star_routes_agree(const Matroid& m);
// alpha(M) == s^{|E|} T_M(x, y).
bool alpha_is_scaled_tutte(const Matroid& m);
// alpha(M)(x <-> y) == alpha(M*).
bool alpha_duality(const Matroid& m);
// e * f == f == f * e for a sample character f.
bool counit_is_unit(const Matroid& m);
// (f * g) * h == f * (g * h) on sample maps.
bool convolution_associative(const Matroid& m);
// Kind laws of delta_loop, delta_coloop, exp_*, alpha, beta and a
// convolution of characters on the pair (m1, m2).
bool character_laws(const Matroid& m1, const Matroid& m2);
// The a = b = 1 specialization of the beta flow sides equals the alpha
// flow sides.
bool beta_flow_specializes(const Matroid& m);

}  // namespace checks

enum class Suite { kAxioms, kTutte, kHopf, kFlow, kAll };

std::optional<Suite> parse_suite(std::string_view name);

struct IdentityResult {
  std::string identity;
  std::string suite;
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // cases above the identity's size cap
  std::vector<std::string> failures;  // "case: reason"
};

struct VerifyReport {
  int max_n = 0;
  std::size_t cases = 0;
  std::vector<IdentityResult> results;
  bool ok() const;
};

// Runs every identity of the suite over build_corpus(max_n) plus `extra`.
// Each identity only looks at cases within its own size cap.
VerifyReport run_verify(Suite suite, int max_n,
                        const std::vector<CorpusCase>& extra = {});

std::string format_report(const VerifyReport& report);
std::string format_report_json(const VerifyReport& report);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_VERIFY_HPP_
