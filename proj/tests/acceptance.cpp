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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Size bounds and time budgets are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "test_support.hpp"
#include "tuttehopf/corpus.hpp"
#include "tuttehopf/hopf.hpp"
#include "tuttehopf/tutte.hpp"
#include "tuttehopf/verify.hpp"

namespace {

using namespace tuttehopf;
using namespace tuttehopf::vars;
using Clock = std::chrono::steady_clock;

constexpr int kTutteMaxN = 12;
constexpr double kTutteBudgetSeconds = 60.0;
constexpr int kAlphaMaxN = 10;
constexpr double kAlphaBudgetSeconds = 120.0;
constexpr int kExpStarMaxN = 10;
constexpr int kKFoldMaxN = 6;
constexpr int kConvolutionMaxN = 10;
constexpr int kDualityMaxN = 12;
constexpr int kAlphaDualityMaxN = 12;
constexpr int kFlowMaxN = 8;
constexpr int kRecipeMaxN = 12;
constexpr int kPhiMaxN = 8;
constexpr int kRankAdditivityMaxN = 10;
constexpr int kMatroidLayerMaxN = 10;
constexpr int kSpotMaxN = 12;
constexpr int kCliVerifyMaxN = 8;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `check` on every corpus case of size <= max_n; returns the number of
// cases checked.
int over_corpus(Outcome& out, int max_n, const char* what,
                const std::function<bool(const Matroid&)>& check) {
  int checked = 0;
  for (const CorpusCase& c : build_corpus(max_n)) {
    ++checked;
    bool ok = false;
    try {
      ok = check(c.matroid);
    } catch (const std::exception& e) {
      out.fail(std::string(what) + " threw on " + c.name + ": " + e.what());
      continue;
    }
    if (!ok) out.fail(std::string(what) + " fails on " + c.name);
  }
  return checked;
}

void within_budget(Outcome& out, Clock::time_point start, double budget) {
  const double t = seconds_since(start);
  if (t >= budget) {
    out.fail("took " + std::to_string(t) + " s, budget " +
             std::to_string(budget) + " s");
  }
}

Outcome criterion_1() {
  Outcome out;
  const auto start = Clock::now();
  const int n = over_corpus(out, kTutteMaxN, "cross-algorithm",
                            checks::tutte_cross_algorithm);
  within_budget(out, start, kTutteBudgetSeconds);
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const auto start = Clock::now();
  const int n = over_corpus(out, kAlphaMaxN, "alpha = s^|E| T",
                            checks::alpha_is_scaled_tutte);
  within_budget(out, start, kAlphaBudgetSeconds);
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_3() {
  Outcome out;
  const int n = over_corpus(out, kExpStarMaxN, "exp_* rank-nullity",
                            checks::exp_star_rank_nullity);
  const int k = over_corpus(out, kKFoldMaxN, "k-fold exp_*",
                            checks::exp_star_routes_agree);
  if (out.ok) {
    out.detail = std::to_string(n) + " cases, " + std::to_string(k) +
                 " k-fold cases";
  }
  return out;
}

Outcome criterion_4() {
  Outcome out;
  const int n = over_corpus(out, kConvolutionMaxN, "convolution identity",
                            check_convolution);
  const auto corpus = build_corpus(kConvolutionMaxN);
  if (std::none_of(corpus.begin(), corpus.end(),
                   [](const CorpusCase& c) { return c.name == "K4"; })) {
    out.fail("K4 missing from corpus");
  }
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_5() {
  Outcome out;
  const int n = over_corpus(out, kDualityMaxN, "Tutte duality", check_duality);
  const int m = over_corpus(out, kAlphaDualityMaxN, "alpha duality",
                            checks::alpha_duality);
  if (out.ok) {
    out.detail = std::to_string(n) + " Tutte cases, " + std::to_string(m) +
                 " alpha cases";
  }
  return out;
}

Outcome criterion_6() {
  Outcome out;
  const int n = over_corpus(out, kFlowMaxN, "flow equations", [](const Matroid& m) {
    return verify_flow_alpha(m) && verify_flow_beta(m);
  });
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_7() {
  Outcome out;
  const int n = over_corpus(out, kRecipeMaxN, "recipe theorem",
                            checks::recipe_theorem);
  over_corpus(out, kRecipeMaxN, "seeded selection rule",
              checks::selection_rule_independence);
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_8() {
  Outcome out;
  const int n = over_corpus(out, kPhiMaxN, "phi morphism", verify_phi_morphism);
  const int m = over_corpus(out, kRankAdditivityMaxN, "rank additivity",
                            checks::rank_additivity);
  if (out.ok) {
    out.detail = std::to_string(n) + " phi cases, " + std::to_string(m) +
                 " additivity cases";
  }
  return out;
}

Outcome criterion_9() {
  Outcome out;
  const int n = over_corpus(out, kMatroidLayerMaxN, "matroid layer",
                            [](const Matroid& m) {
    return checks::rank_axioms(m) &&
           checks::restrict_is_delete_complement(m) &&
           checks::coloop_contract_is_delete(m) &&
           checks::contraction_rank(m) && checks::dual_involution(m) &&
           checks::contract_is_dual_delete_dual(m);
  });
  if (out.ok) out.detail = std::to_string(n) + " cases";
  return out;
}

Outcome criterion_10() {
  Outcome out;
  if (!(tutte_rank_sum(Matroid::uniform(1, 1)) == x())) out.fail("T(U11)");
  if (!(tutte_rank_sum(Matroid::uniform(0, 1)) == y())) out.fail("T(U01)");

  // Subset-sum oracle, independent of the library's rank tables.
  auto uniform_oracle = [](int r, int n) {
    return testing::to_multipoly(testing::brute_force_tutte(
        n, [r](std::uint64_t a) { return std::min(std::popcount(a), r); }));
  };
  const MultiPoly c3 = x() * x() + x() + y();
  const MultiPoly u24 = x() * x() + 2 * x() + 2 * y() + y() * y();
  if (!(uniform_oracle(2, 3) == c3)) out.fail("C3 oracle");
  if (!(uniform_oracle(2, 4) == u24)) out.fail("U24 oracle");
  const std::vector<std::pair<int, int>> triangle = {{0, 1}, {1, 2}, {0, 2}};
  if (!(tutte_rank_sum(Matroid::graphic(3, triangle)) == c3)) out.fail("T(C3)");
  if (!(tutte_rank_sum(Matroid::uniform(2, 4)) == u24)) out.fail("T(U24)");

  const std::vector<std::pair<int, int>> k4 = {{0, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 3}};
  int trees = 0;
  for (std::uint64_t a = 0; a < 64; ++a) {
    if (std::popcount(a) == 3 && testing::graph_rank(4, k4, a) == 3) ++trees;
  }
  if (trees != 16) out.fail("K4 spanning-tree oracle");
  if (!(eval(tutte_rank_sum(Matroid::graphic(4, k4)),
             {{Var::x, 1}, {Var::y, 1}}) == MultiPoly(16))) {
    out.fail("T(K4)(1,1)");
  }

  const int n = over_corpus(out, kSpotMaxN, "T(2,2), T(1,1)",
                            [](const Matroid& m) {
    const MultiPoly t = tutte_rank_sum(m);
    const MultiPoly at22 = eval(t, {{Var::x, 2}, {Var::y, 2}});
    const MultiPoly at11 = eval(t, {{Var::x, 1}, {Var::y, 1}});
    return at22 == MultiPoly(mpq_class(1UL << m.size())) &&
           at11 == MultiPoly(mpq_class(static_cast<unsigned long>(
                       m.bases().size())));
  });
  if (out.ok) out.detail = "fixed values and " + std::to_string(n) + " cases";
  return out;
}

Outcome criterion_11() {
  using testing::run_cli;
  Outcome out;
  const std::string u23 = R"(--matroid '{"kind":"uniform","r":2,"n":3}' )";
  const std::string empty = R"(--matroid '{"kind":"bases","n":0,"bases":[[]]}' )";
  if (run_cli(u23 + "tutte").out != "x^2 + x + y\n") out.fail("golden U23");
  if (run_cli(u23 + "tutte --eval x=1,y=1").out != "3\n") {
    out.fail("golden U23 --eval");
  }
  if (run_cli(empty + "tutte").out != "1\n") out.fail("golden empty");
  const auto verify =
      run_cli("--max-n " + std::to_string(kCliVerifyMaxN) + " verify all");
  if (verify.status != 0) {
    out.fail("verify all exit status " + std::to_string(verify.status));
  }
  if (out.ok) out.detail = "3 goldens, verify all exit 0";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria = {
          {"Tutte cross-algorithm oracle, n <= 12, < 60 s", criterion_1},
          {"alpha = s^|E| T, n <= 10, < 120 s", criterion_2},
          {"exp_* rank-nullity n <= 10, k-fold agreement n <= 6", criterion_3},
          {"convolution identity, n <= 10", criterion_4},
          {"duality of T and alpha, n <= 12", criterion_5},
          {"alpha and beta flow equations, n <= 8", criterion_6},
          {"recipe theorem and seeded selection rule", criterion_7},
          {"phi morphism n <= 8, rank additivity n <= 10", criterion_8},
          {"matroid layer identities, n <= 10", criterion_9},
          {"spot values", criterion_10},
          {"CLI goldens and verify all --max-n 8", criterion_11},
      };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.fail(std::string("threw: ") + e.what());
    }
    if (!out.ok) ++failures;
    std::printf("%s  criterion %2zu  %-55s %7.2f s  %s\n",
                out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(start), out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
