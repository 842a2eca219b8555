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

#ifndef TUTTEHOPF_CORPUS_HPP_
#define TUTTEHOPF_CORPUS_HPP_

#include <string>
#include <vector>

#include "tuttehopf/matroid.hpp"

namespace tuttehopf {

struct CorpusCase {
  std::string name;
  Matroid matroid;
  // The summands when the case was built as a direct sum; empty otherwise.
  std::vector<Matroid> parts;
};

// Named graphs: P4 (path on four vertices), C5, K4, the bowtie (two
// triangles sharing a vertex), and a multigraph with a self-loop and a
// parallel pair.
std::vector<CorpusCase> named_graphs();

// Every U(r,n) with n <= max_n, the named graphs and their duals, and the
// direct sums of pairs drawn from {U(r,n) : 1 <= n <= 3} and the named
// graphs, keeping only cases with at most max_n elements. Sorted by name.
std::vector<CorpusCase> build_corpus(int max_n);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_CORPUS_HPP_
