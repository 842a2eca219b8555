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

#include "tuttehopf/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>

#include <json.hpp>

#include "tuttehopf/hopf.hpp"
#include "tuttehopf/tutte.hpp"

namespace tuttehopf {

namespace checks {

namespace {

constexpr int kExhaustiveCap = 20;

const Assignment kUnitWeights{{Var::a, 1}, {Var::b, 1}};

std::uint64_t subset_count(const Matroid& m) {
  return std::uint64_t{1} << m.size();
}

}  // namespace

bool rank_axioms(const Matroid& m) {
  require_cap(m.size(), kExhaustiveCap, "rank_axioms");
  const auto rank = m.rank_table();
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t a = 0; a < total; ++a) {
    if (rank[a] > std::popcount(a)) return false;
    if (rank[a] != m.rank(m.expand(a))) return false;
    for (int i = 0; i < m.size(); ++i) {
      const std::uint64_t with = a | (std::uint64_t{1} << i);
      if (rank[with] < rank[a] || rank[with] > rank[a] + 1) return false;
    }
  }
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = a; b < total; ++b) {
      if (rank[a | b] + rank[a & b] > rank[a] + rank[b]) return false;
    }
  }
  return true;
}

bool backend_agreement(const Matroid& m) {
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t a = 0; a < total; ++a) {
    const GroundSubset s = m.expand(a);
    if (backend_rank(m, s) != m.rank(s)) return false;
  }
  return true;
}

bool basis_exchange(const Matroid& m) {
  try {
    return Matroid::from_bases(m.ground(), m.bases()) == m;
  } catch (const MatroidError&) {
    return false;
  }
}

bool restrict_is_delete_complement(const Matroid& m) {
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    const GroundSubset s = m.expand(t);
    if (!(restrict(m, s) == delete_elements(m, m.ground() - s))) return false;
  }
  return true;
}

bool coloop_contract_is_delete(const Matroid& m) {
  for (int e : m.labels()) {
    if (m.element_kind(e) != ElementKind::Coloop) continue;
    const GroundSubset single = GroundSubset::singleton(e);
    if (!(contract(m, single) == delete_elements(m, single))) return false;
  }
  return true;
}

bool contraction_rank(const Matroid& m) {
  require_cap(m.size(), kExhaustiveCap, "contraction_rank");
  const auto rank = m.rank_table();
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    const Matroid minor = contract(m, m.expand(t));
    const std::uint64_t rest = (total - 1) & ~t;
    // All X subset of rest, including the empty set.
    for (std::uint64_t x = rest;; x = (x - 1) & rest) {
      if (minor.rank(m.expand(x)) != rank[x | t] - rank[t]) return false;
      if (x == 0) break;
    }
  }
  return true;
}

bool rank_additivity(const Matroid& m) {
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    const GroundSubset s = m.expand(t);
    const Matroid r = restrict(m, s);
    const Matroid c = contract(m, s);
    if (r.rank() + c.rank() != m.rank()) return false;
    if (r.nullity() + c.nullity() != m.nullity()) return false;
  }
  return true;
}

bool dual_involution(const Matroid& m) { return dual(dual(m)) == m; }

bool contract_is_dual_delete_dual(const Matroid& m) {
  const Matroid d = dual(m);
  const std::uint64_t total = subset_count(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    const GroundSubset s = m.expand(t);
    if (!(contract(m, s) == dual(delete_elements(d, s)))) return false;
  }
  return true;
}

bool loops_are_singleton_circuits(const Matroid& m) {
  const auto cs = circuits(m);
  for (int e : m.labels()) {
    const bool singleton_circuit =
        std::find(cs.begin(), cs.end(), GroundSubset::singleton(e)) != cs.end();
    if (singleton_circuit != (m.element_kind(e) == ElementKind::Loop)) {
      return false;
    }
  }
  return true;
}

bool tutte_cross_algorithm(const Matroid& m) {
  const MultiPoly t = tutte_rank_sum(m);
  return eval(q_universal(m), kUnitWeights) == t &&
         eval(recipe_closed_form(m), kUnitWeights) == t;
}

bool recipe_theorem(const Matroid& m) {
  return q_universal(m) == recipe_closed_form(m);
}

bool recipe_rational_substitution(const Matroid& m) {
  const MultiPoly t = tutte_rank_sum(m);
  const MultiPoly closed = recipe_closed_form(m);
  const std::vector<std::array<mpq_class, 4>> points = {
      {mpq_class(2, 3), mpq_class(5, 7), mpq_class(3, 2), mpq_class(-4, 5)},
      {mpq_class(-1), mpq_class(3), mpq_class(1, 3), mpq_class(7, 2)},
      {mpq_class(11, 4), mpq_class(-2, 9), mpq_class(-5), mpq_class(2)},
  };
  for (const auto& [x, y, a, b] : points) {
    mpq_class x_over_b = x / b;
    mpq_class y_over_a = y / a;
    mpq_class scale = 1;
    for (int i = 0; i < m.nullity(); ++i) scale *= a;
    for (int i = 0; i < m.rank(); ++i) scale *= b;
    const MultiPoly substituted =
        MultiPoly(scale) *
        eval(t, {{Var::x, x_over_b}, {Var::y, y_over_a}});
    const MultiPoly direct =
        eval(closed, {{Var::x, x}, {Var::y, y}, {Var::a, a}, {Var::b, b}});
    if (!(substituted == direct)) return false;
  }
  return true;
}

bool selection_rule_independence(const Matroid& m) {
  const MultiPoly reference = q_universal(m);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    if (!(q_universal(m, seeded_random_selector(seed)) == reference)) {
      return false;
    }
  }
  return true;
}

bool tutte_evaluations(const Matroid& m) {
  const MultiPoly t = tutte_rank_sum(m);
  auto at = [&](long x, long y) {
    return eval(t, {{Var::x, x}, {Var::y, y}});
  };
  auto count = [](std::uint64_t c) {
    return MultiPoly(mpq_class(static_cast<unsigned long>(c)));
  };
  return at(1, 1) == count(m.bases().size()) &&
         at(2, 2) == count(subset_count(m)) &&
         at(2, 1) == count(count_independent(m)) &&
         at(1, 2) == count(count_spanning(m));
}

bool tutte_multiplicative(const Matroid& m1, const Matroid& m2) {
  return tutte_rank_sum(direct_sum(m1, m2)) ==
         tutte_rank_sum(m1) * tutte_rank_sum(m2);
}

bool exp_star_rank_nullity(const Matroid& m) {
  const Character e =
      exp_star(loop_coloop_combination(vars::a(), vars::b()));
  return e(m) == MultiPoly::variable(Var::a, m.rank()) *
                     MultiPoly::variable(Var::b, m.nullity());
}

bool exp_star_routes_agree(const Matroid& m) {
  using namespace vars;
  const std::vector<Character> infinitesimals = {
      loop_coloop_combination(a(), b()),
      scale(s(), loop_coloop_combination(1, y() - 1)),
      loop_coloop_combination(-2, 1),
  };
  for (const Character& d : infinitesimals) {
    if (!(exp_star(d)(m) == exp_star_kfold(d)(m))) return false;
  }
  return true;
}

bool alpha_is_scaled_tutte(const Matroid& m) {
  return alpha(m) == MultiPoly::variable(Var::s, m.size()) * tutte_rank_sum(m);
}

bool alpha_duality(const Matroid& m) {
  return swap_vars(alpha(m), Var::x, Var::y) == alpha(dual(m));
}

bool counit_is_unit(const Matroid& m) {
  const Character f = alpha_character();
  const Character e = counit_character();
  const MultiPoly value = f(m);
  return convolve(e, f)(m) == value && convolve(f, e)(m) == value;
}

bool convolution_associative(const Matroid& m) {
  using namespace vars;
  const Character f = exp_star(loop_coloop_combination(a(), b()));
  const Character g = delta_loop() + scale(x(), delta_coloop());
  const Character h = beta_character();
  return convolve(convolve(f, g), h)(m) == convolve(f, convolve(g, h))(m);
}

bool character_laws(const Matroid& m1, const Matroid& m2) {
  using namespace vars;
  const Character exp_ab = exp_star(loop_coloop_combination(a(), b()));
  const std::vector<Character> maps = {
      delta_loop(),
      delta_coloop(),
      loop_coloop_combination(x() - 1, s()),
      exp_ab,
      alpha_character(),
      beta_character(),
      convolve(exp_ab, beta_character()),
  };
  for (const Character& f : maps) {
    if (!satisfies_kind_law(f, m1, m2)) return false;
  }
  return true;
}

bool beta_flow_specializes(const Matroid& m) {
  const FlowSides b = flow_beta_sides(m);
  const FlowSides a = flow_alpha_sides(m);
  return eval(b.lhs, kUnitWeights) == a.lhs &&
         eval(b.rhs, kUnitWeights) == a.rhs;
}

}  // namespace checks

namespace {

struct Identity {
  const char* name;
  Suite suite;
  int cap;
  // Returns nullopt when the identity does not apply to the case.
  std::function<std::optional<bool>(const CorpusCase&)> check;
};

std::function<std::optional<bool>(const CorpusCase&)> on_matroid(
    bool (*f)(const Matroid&)) {
  return [f](const CorpusCase& c) -> std::optional<bool> {
    return f(c.matroid);
  };
}

std::function<std::optional<bool>(const CorpusCase&)> on_parts(
    bool (*f)(const Matroid&, const Matroid&)) {
  return [f](const CorpusCase& c) -> std::optional<bool> {
    if (c.parts.size() != 2) return std::nullopt;
    return f(c.parts[0], c.parts[1]);
  };
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kAxioms: return "axioms";
    case Suite::kTutte: return "tutte";
    case Suite::kHopf: return "hopf";
    case Suite::kFlow: return "flow";
    case Suite::kAll: return "all";
  }
  return "?";
}

std::vector<Identity> identities() {
  using namespace checks;
  return {
      {"rank_axioms", Suite::kAxioms, 10, on_matroid(rank_axioms)},
      {"backend_agreement", Suite::kAxioms, 10, on_matroid(backend_agreement)},
      {"basis_exchange", Suite::kAxioms, 10, on_matroid(basis_exchange)},
      {"restrict_is_delete_complement", Suite::kAxioms, 10,
       on_matroid(restrict_is_delete_complement)},
      {"coloop_contract_is_delete", Suite::kAxioms, 10,
       on_matroid(coloop_contract_is_delete)},
      {"contraction_rank", Suite::kAxioms, 10, on_matroid(contraction_rank)},
      {"rank_additivity", Suite::kAxioms, 10, on_matroid(rank_additivity)},
      {"dual_involution", Suite::kAxioms, 10, on_matroid(dual_involution)},
      {"contract_is_dual_delete_dual", Suite::kAxioms, 10,
       on_matroid(contract_is_dual_delete_dual)},
      {"loops_are_singleton_circuits", Suite::kAxioms, 10,
       on_matroid(loops_are_singleton_circuits)},

      {"tutte_cross_algorithm", Suite::kTutte, 12,
       on_matroid(tutte_cross_algorithm)},
      {"recipe_theorem", Suite::kTutte, 12, on_matroid(recipe_theorem)},
      {"recipe_rational_substitution", Suite::kTutte, 12,
       on_matroid(recipe_rational_substitution)},
      {"selection_rule_independence", Suite::kTutte, 12,
       on_matroid(selection_rule_independence)},
      {"tutte_evaluations", Suite::kTutte, 12, on_matroid(tutte_evaluations)},
      {"tutte_multiplicative", Suite::kTutte, 12,
       on_parts(tutte_multiplicative)},
      {"tutte_duality", Suite::kTutte, 12, on_matroid(check_duality)},
      {"tutte_convolution", Suite::kTutte, 10, on_matroid(check_convolution)},

      {"exp_star_rank_nullity", Suite::kHopf, 10,
       on_matroid(exp_star_rank_nullity)},
      {"exp_star_routes_agree", Suite::kHopf, 6,
       on_matroid(exp_star_routes_agree)},
      {"alpha_is_scaled_tutte", Suite::kHopf, 10,
       on_matroid(alpha_is_scaled_tutte)},
      {"alpha_duality", Suite::kHopf, 10, on_matroid(alpha_duality)},
      {"phi_morphism", Suite::kHopf, 10, on_matroid(verify_phi_morphism)},
      {"four_factor", Suite::kHopf, 10, on_matroid(verify_four_factor)},
      {"counit_is_unit", Suite::kHopf, 8, on_matroid(counit_is_unit)},
      {"convolution_associative", Suite::kHopf, 6,
       on_matroid(convolution_associative)},
      {"character_laws", Suite::kHopf, 8, on_parts(character_laws)},

      {"flow_alpha", Suite::kFlow, 12, on_matroid(verify_flow_alpha)},
      {"flow_beta", Suite::kFlow, 12, on_matroid(verify_flow_beta)},
      {"beta_flow_specializes", Suite::kFlow, 12,
       on_matroid(beta_flow_specializes)},
  };
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kAxioms, Suite::kTutte, Suite::kHopf, Suite::kFlow,
                  Suite::kAll}) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityResult& r) { return r.failed == 0; });
}

VerifyReport run_verify(Suite suite, int max_n,
                        const std::vector<CorpusCase>& extra) {
  std::vector<CorpusCase> cases = build_corpus(max_n);
  cases.insert(cases.end(), extra.begin(), extra.end());
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CorpusCase& l, const CorpusCase& r) {
                     return l.name < r.name;
                   });

  VerifyReport report;
  report.max_n = max_n;
  report.cases = cases.size();
  for (const Identity& id : identities()) {
    if (suite != Suite::kAll && suite != id.suite) continue;
    IdentityResult result;
    result.identity = id.name;
    result.suite = suite_name(id.suite);
    const int cap = std::min(id.cap, max_n);
    for (const CorpusCase& c : cases) {
      if (c.matroid.size() > cap) {
        ++result.skipped;
        continue;
      }
      std::optional<bool> outcome;
      std::string reason = "identity does not hold";
      try {
        outcome = id.check(c);
      } catch (const std::exception& e) {
        outcome = false;
        reason = e.what();
      }
      if (!outcome) {
        ++result.skipped;
      } else if (*outcome) {
        ++result.passed;
      } else {
        ++result.failed;
        result.failures.push_back(c.name + ": " + reason);
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::string out = "corpus: " + std::to_string(report.cases) +
                    " cases, max-n " + std::to_string(report.max_n) + "\n";
  char line[256];
  for (const IdentityResult& r : report.results) {
    std::snprintf(line, sizeof line, "%s  %-7s %-30s passed %5d  failed %3d  skipped %4d\n",
                  r.failed == 0 ? "PASS" : "FAIL", r.suite.c_str(),
                  r.identity.c_str(), r.passed, r.failed, r.skipped);
    out += line;
    for (const std::string& f : r.failures) out += "      " + f + "\n";
  }
  out += report.ok() ? "result: OK\n" : "result: FAILED\n";
  return out;
}

std::string format_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["max_n"] = report.max_n;
  j["cases"] = report.cases;
  j["ok"] = report.ok();
  j["identities"] = nlohmann::json::array();
  for (const IdentityResult& r : report.results) {
    j["identities"].push_back({{"identity", r.identity},
                               {"suite", r.suite},
                               {"passed", r.passed},
                               {"failed", r.failed},
                               {"skipped", r.skipped},
                               {"failures", r.failures}});
  }
  return j.dump(2) + "\n";
}

}  // namespace tuttehopf
