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

// tuttehopf: Tutte polynomials, the universal deletion-contraction
// polynomial and the matroid Hopf algebra from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuttehopf/hopf.hpp"
#include "tuttehopf/spec_io.hpp"
#include "tuttehopf/tutte.hpp"
#include "tuttehopf/verify.hpp"

namespace {

using namespace tuttehopf;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string spec_file;
  std::string matroid_text;
  bool json = false;
  int max_n = 8;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matroid load_matroid(const GlobalOptions& g) {
  if (!g.matroid_text.empty() && !g.spec_file.empty()) {
    throw InputError("give either --spec or --matroid, not both");
  }
  if (!g.matroid_text.empty()) return parse_spec(g.matroid_text);
  if (!g.spec_file.empty()) return parse_spec(read_file(g.spec_file));
  throw InputError("no matroid given; use --spec FILE or --matroid JSON");
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw InputError("not a rational number: \"" + text + "\"");
  }
  q.canonicalize();
  if (q.get_den() == 0) throw InputError("zero denominator: \"" + text + "\"");
  return q;
}

// "x=1,y=1/2" -> {x: 1, y: 1/2}; only x and y are Tutte variables.
Assignment parse_eval(const std::string& text) {
  Assignment point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("--eval expects var=value pairs, got \"" + item + "\"");
    }
    const std::string name = item.substr(0, eq);
    Var v;
    if (name == "x") {
      v = Var::x;
    } else if (name == "y") {
      v = Var::y;
    } else {
      throw InputError("unknown variable in --eval: \"" + name + "\"");
    }
    point[v] = parse_rational(item.substr(eq + 1));
  }
  return point;
}

void emit_polynomial(const GlobalOptions& g, const char* key,
                     const MultiPoly& p) {
  if (g.json) {
    std::cout << json{{key, p.to_string()}}.dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

int cmd_tutte(const GlobalOptions& g, const std::string& eval_text) {
  const Matroid m = load_matroid(g);
  MultiPoly t = tutte_rank_sum(m);
  if (!eval_text.empty()) t = eval(t, parse_eval(eval_text));
  emit_polynomial(g, "tutte", t);
  return kExitOk;
}

int cmd_q(const GlobalOptions& g, bool closed_form, bool check) {
  const Matroid m = load_matroid(g);
  if (check) {
    const bool agree = q_universal(m) == recipe_closed_form(m);
    if (g.json) {
      std::cout << json{{"recipe_check", agree ? "OK" : "MISMATCH"}}.dump()
                << "\n";
    } else {
      std::cout << (agree ? "OK" : "MISMATCH") << "\n";
    }
    return agree ? kExitOk : kExitVerifyFailed;
  }
  emit_polynomial(g, "q", closed_form ? recipe_closed_form(m) : q_universal(m));
  return kExitOk;
}

int cmd_coproduct(const GlobalOptions& g) {
  const TensorSum delta = coproduct(load_matroid(g));
  if (g.json) {
    json terms = json::array();
    for (const TensorTerm& t : delta.terms()) {
      terms.push_back({{"coefficient", t.coefficient.to_string()},
                       {"left", to_json(spec_of(t.left))},
                       {"right", to_json(spec_of(t.right))}});
    }
    std::cout << json{{"terms", terms}}.dump() << "\n";
  } else {
    std::cout << to_string(delta);
  }
  return kExitOk;
}

int emit_matroid(const Matroid& m) {
  std::cout << render_spec(spec_of(m)) << "\n";
  return kExitOk;
}

GroundSubset element_set(const Matroid& m, const std::vector<int>& elements) {
  GroundSubset s;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize || !m.ground().contains(e)) {
      throw InputError("element " + std::to_string(e) +
                       " is not in the ground set " + to_string(m.ground()));
    }
    s = s.with(e);
  }
  return s;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite_name) {
  const auto suite = parse_suite(suite_name);
  if (!suite) {
    throw InputError("unknown suite \"" + suite_name +
                     "\" (expected axioms, tutte, hopf, flow or all)");
  }
  if (g.max_n < 0 || g.max_n > kTutteCap) {
    throw InputError("--max-n must lie in 0.." + std::to_string(kTutteCap));
  }
  std::vector<CorpusCase> extra;
  if (!g.spec_file.empty() || !g.matroid_text.empty()) {
    const std::string name =
        g.spec_file.empty() ? "user:matroid" : "user:" + g.spec_file;
    extra.push_back({name, load_matroid(g), {}});
  }
  const VerifyReport report = run_verify(*suite, g.max_n, extra);
  std::cout << (g.json ? format_report_json(report) : format_report(report));
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials and the matroid Hopf algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--spec", g.spec_file, "Matroid description file (- for stdin)");
  app.add_option("--matroid", g.matroid_text, "Inline matroid description");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--max-n", g.max_n, "Largest ground set in the verify corpus");

  std::string eval_text;
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial T_M(x, y)");
  tutte->add_option("--eval", eval_text, "Evaluate at e.g. x=1,y=1/2");

  bool closed_form = false;
  bool check = false;
  auto* q = app.add_subcommand("q", "Universal polynomial Q_M(x, y, a, b)");
  q->add_flag("--closed-form", closed_form, "Use a^n b^r T(x/b, y/a)");
  q->add_flag("--check", check, "Compare recursion and closed form");

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Sum of M|A (x) M/A");
  auto* dual_cmd = app.add_subcommand("dual", "Dual matroid");

  std::vector<int> elements;
  auto* delete_cmd = app.add_subcommand("delete", "Delete elements");
  delete_cmd->add_option("--elements", elements, "Comma-separated labels")
      ->delimiter(',')
      ->required();
  auto* contract_cmd = app.add_subcommand("contract", "Contract elements");
  contract_cmd->add_option("--elements", elements, "Comma-separated labels")
      ->delimiter(',')
      ->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Check identities on the corpus");
  verify->add_option("suite", suite, "axioms | tutte | hopf | flow | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*tutte) return cmd_tutte(g, eval_text);
    if (*q) return cmd_q(g, closed_form, check);
    if (*coproduct_cmd) return cmd_coproduct(g);
    if (*dual_cmd) return emit_matroid(dual(load_matroid(g)));
    if (*delete_cmd) {
      const Matroid m = load_matroid(g);
      return emit_matroid(delete_elements(m, element_set(m, elements)));
    }
    if (*contract_cmd) {
      const Matroid m = load_matroid(g);
      return emit_matroid(contract(m, element_set(m, elements)));
    }
    if (*verify) return cmd_verify(g, suite);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const MatroidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
