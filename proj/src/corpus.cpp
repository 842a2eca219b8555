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

#include "tuttehopf/corpus.hpp"

#include <algorithm>

namespace tuttehopf {

namespace {

std::string uniform_name(int r, int n) {
  return "U(" + std::to_string(r) + "," + std::to_string(n) + ")";
}

}  // namespace

std::vector<CorpusCase> named_graphs() {
  std::vector<CorpusCase> out;
  out.push_back({"P4", Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}}), {}});
  out.push_back(
      {"C5", Matroid::graphic(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), {}});
  out.push_back({"K4",
                 Matroid::graphic(
                     4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                 {}});
  out.push_back({"bowtie",
                 Matroid::graphic(
                     5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}),
                 {}});
  out.push_back({"multigraph",
                 Matroid::graphic(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}}),
                 {}});
  return out;
}

std::vector<CorpusCase> build_corpus(int max_n) {
  std::vector<CorpusCase> out;
  for (int n = 0; n <= std::min(max_n, kMaxGroundSize); ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({uniform_name(r, n), Matroid::uniform(r, n), {}});
    }
  }

  const std::vector<CorpusCase> graphs = named_graphs();
  for (const CorpusCase& g : graphs) {
    if (g.matroid.size() > max_n) continue;
    out.push_back(g);
    out.push_back({"dual(" + g.name + ")", dual(g.matroid), {}});
  }

  std::vector<CorpusCase> summands;
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= n; ++r) {
      summands.push_back({uniform_name(r, n), Matroid::uniform(r, n), {}});
    }
  }
  summands.insert(summands.end(), graphs.begin(), graphs.end());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    for (std::size_t j = i; j < summands.size(); ++j) {
      const Matroid& m1 = summands[i].matroid;
      const Matroid& m2 = summands[j].matroid;
      if (m1.size() + m2.size() > max_n) continue;
      out.push_back({summands[i].name + "+" + summands[j].name,
                     direct_sum(m1, m2),
                     {m1, m2}});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const CorpusCase& l, const CorpusCase& r) {
              return l.name < r.name;
            });
  return out;
}

}  // namespace tuttehopf
