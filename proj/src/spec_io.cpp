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

#include "tuttehopf/spec_io.hpp"

#include <algorithm>

namespace tuttehopf {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw SpecError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw SpecError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw SpecError(what + " must be an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) {
      throw SpecError(what + " must be an array of integers");
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

bool operator==(const DirectSumSpec& l, const DirectSumSpec& r) {
  return l.parts == r.parts;
}

SpecError::SpecError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + message
                                  : message),
      line_(line),
      column_(column) {}

MatroidSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("a matroid spec must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw SpecError("field \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "uniform") {
    return {UniformSpec{int_field(j, "r"), int_field(j, "n")}};
  }
  if (k == "graph") {
    GraphSpec g{int_field(j, "vertices"), {}};
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw SpecError("\"edges\" must be an array");
    for (const json& e : edges) {
      const auto ends = int_list(e, "each edge");
      if (ends.size() != 2) {
        throw SpecError("each edge must list exactly two endpoints");
      }
      g.edges.emplace_back(ends[0], ends[1]);
    }
    return {std::move(g)};
  }
  if (k == "bases") {
    BasesSpec b;
    b.size = int_field(j, "n");
    if (j.contains("labels")) b.labels = int_list(j["labels"], "\"labels\"");
    const json& bases = field(j, "bases");
    if (!bases.is_array()) throw SpecError("\"bases\" must be an array");
    for (const json& basis : bases) b.bases.push_back(int_list(basis, "each basis"));
    return {std::move(b)};
  }
  if (k == "direct_sum") {
    DirectSumSpec d;
    const json& parts = field(j, "parts");
    if (!parts.is_array()) throw SpecError("\"parts\" must be an array");
    for (const json& p : parts) d.parts.push_back(spec_from_json(p));
    return {std::move(d)};
  }
  throw SpecError("unknown kind \"" + k +
                  "\" (expected uniform, graph, bases or direct_sum)");
}

MatroidSpec parse_spec_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..."
    // prefix; position is reported separately.
    if (auto pos = what.find(": "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw SpecError("syntax error: " + what, line, column);
  }
  return spec_from_json(j);
}

json to_json(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return {{"kind", "uniform"}, {"r", s.rank}, {"n", s.size}};
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          json edges = json::array();
          for (const auto& [u, v] : s.edges) edges.push_back({u, v});
          return {{"kind", "graph"}, {"vertices", s.vertices}, {"edges", edges}};
        } else if constexpr (std::is_same_v<T, BasesSpec>) {
          json out = {{"kind", "bases"}, {"n", s.size}};
          if (s.labels) out["labels"] = *s.labels;
          json bases = json::array();
          for (const auto& b : s.bases) bases.push_back(b);
          out["bases"] = bases;
          return out;
        } else {
          json parts = json::array();
          for (const auto& p : s.parts) parts.push_back(to_json(p));
          return {{"kind", "direct_sum"}, {"parts", parts}};
        }
      },
      spec.value);
}

std::string render_spec(const MatroidSpec& spec) { return to_json(spec).dump(); }

namespace {

Matroid build_unchecked(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> Matroid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return Matroid::uniform(s.rank, s.size);
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          return Matroid::graphic(s.vertices, s.edges);
        } else if constexpr (std::is_same_v<T, BasesSpec>) {
          if (s.size < 0 || s.size > kMaxGroundSize) {
            throw MatroidError("\"n\" must lie in 0..63");
          }
          std::vector<int> labels;
          if (s.labels) {
            labels = *s.labels;
            if (static_cast<int>(labels.size()) != s.size) {
              throw MatroidError("\"labels\" must list exactly n labels");
            }
          } else {
            for (int i = 0; i < s.size; ++i) labels.push_back(i);
          }
          const GroundSubset ground = GroundSubset::of(labels);
          if (ground.size() != s.size) {
            throw MatroidError("\"labels\" contains duplicates");
          }
          std::vector<GroundSubset> bases;
          for (const auto& b : s.bases) {
            for (int e : b) {
              if (e < 0 || e >= kMaxGroundSize || !ground.contains(e)) {
                throw MatroidError("basis element " + std::to_string(e) +
                                   " is not in the ground set " +
                                   to_string(ground));
              }
            }
            bases.push_back(GroundSubset::of(b));
          }
          return Matroid::from_bases(ground, bases);
        } else {
          Matroid m = Matroid::empty();
          for (const auto& p : s.parts) m = direct_sum(m, build_unchecked(p));
          return m;
        }
      },
      spec.value);
}

}  // namespace

Matroid build(const MatroidSpec& spec) {
  try {
    return build_unchecked(spec);
  } catch (const MatroidError& e) {
    throw SpecError(e.what());
  }
}

Matroid parse_spec(std::string_view text) {
  return build(parse_spec_document(text));
}

MatroidSpec spec_of(const Matroid& m) {
  BasesSpec s;
  s.size = m.size();
  const auto labels = m.labels();
  if (m.ground() != GroundSubset::range(m.size())) s.labels = labels;
  for (GroundSubset b : m.bases()) s.bases.push_back(b.elements());
  return {std::move(s)};
}

}  // namespace tuttehopf
