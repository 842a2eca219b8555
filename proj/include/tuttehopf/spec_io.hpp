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

// JSON matroid descriptions:
//
//   {"kind": "uniform", "r": 2, "n": 4}
//   {"kind": "graph", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}
//   {"kind": "bases", "n": 2, "bases": [[0],[1]]}
//   {"kind": "bases", "n": 2, "labels": [3,5], "bases": [[3],[5]]}
//   {"kind": "direct_sum", "parts": [<spec>, <spec>, ...]}
//
// "labels" is optional and defaults to 0..n-1; it lets minors, which keep
// their parent's labels, be written back out and read in unchanged.

#ifndef TUTTEHOPF_SPEC_IO_HPP_
#define TUTTEHOPF_SPEC_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tuttehopf/matroid.hpp"

namespace tuttehopf {

struct MatroidSpec;

struct UniformSpec {
  int rank = 0;
  int size = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct GraphSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct BasesSpec {
  int size = 0;
  std::optional<std::vector<int>> labels;
  std::vector<std::vector<int>> bases;
  friend bool operator==(const BasesSpec&, const BasesSpec&) = default;
};

struct DirectSumSpec {
  std::vector<MatroidSpec> parts;
  friend bool operator==(const DirectSumSpec&, const DirectSumSpec&);
};

struct MatroidSpec {
  std::variant<UniformSpec, GraphSpec, BasesSpec, DirectSumSpec> value;
  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

// Malformed input. Syntax errors carry a 1-based line and column.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

MatroidSpec parse_spec_document(std::string_view text);
MatroidSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatroidSpec& spec);
std::string render_spec(const MatroidSpec& spec);

// Builds the matroid; violations of the matroid axioms surface as SpecError
// carrying the MatroidError text.
Matroid build(const MatroidSpec& spec);
Matroid parse_spec(std::string_view text);

// Explicit-bases description of a matroid, with labels when they are not
// 0..n-1.
MatroidSpec spec_of(const Matroid& m);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_SPEC_IO_HPP_
