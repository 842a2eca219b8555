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

#include "tuttehopf/tutte.hpp"

#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

namespace tuttehopf {

namespace {

// counts[r][k] = number of subsets A with r(A) = r and n(A) = k.
using RankNullityCounts = std::vector<std::vector<std::uint64_t>>;

RankNullityCounts rank_nullity_counts(const Matroid& m) {
  const auto rank = m.rank_table();
  const int n = m.size();
  RankNullityCounts counts(m.rank() + 1,
                           std::vector<std::uint64_t>(n - m.rank() + 1, 0));
  for (std::size_t a = 0; a < rank.size(); ++a) {
    ++counts[rank[a]][std::popcount(a) - rank[a]];
  }
  return counts;
}

std::vector<MultiPoly> powers(const MultiPoly& p, int max_exponent) {
  std::vector<MultiPoly> out{MultiPoly(1)};
  for (int i = 1; i <= max_exponent; ++i) out.push_back(out.back() * p);
  return out;
}

MultiPoly count_poly(std::uint64_t c) {
  return MultiPoly(mpq_class(static_cast<unsigned long>(c)));
}

class DeletionContraction {
 public:
  explicit DeletionContraction(const ElementSelector& select)
      : select_(select) {}

  MultiPoly evaluate(const Matroid& m) {
    if (m.size() == 0) return MultiPoly(1);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;

    MultiPoly value;
    const std::optional<int> chosen = select_(m);
    if (!chosen) {
      int loops = 0;
      int coloops = 0;
      for (int e : m.labels()) {
        switch (m.element_kind(e)) {
          case ElementKind::Loop: ++loops; break;
          case ElementKind::Coloop: ++coloops; break;
          case ElementKind::Nonseparating:
            throw std::logic_error(
                "element selector stopped with a nonseparating element left");
        }
      }
      value = MultiPoly::variable(Var::x, coloops) *
              MultiPoly::variable(Var::y, loops);
    } else {
      const int e = *chosen;
      const GroundSubset single = GroundSubset::singleton(e);
      switch (m.element_kind(e)) {
        case ElementKind::Coloop:
          value = vars::x() * evaluate(delete_elements(m, single));
          break;
        case ElementKind::Loop:
          value = vars::y() * evaluate(contract(m, single));
          break;
        case ElementKind::Nonseparating:
          value = vars::a() * evaluate(delete_elements(m, single)) +
                  vars::b() * evaluate(contract(m, single));
          break;
      }
    }
    memo_.emplace(m, value);
    return value;
  }

 private:
  const ElementSelector& select_;
  std::unordered_map<Matroid, MultiPoly, MatroidHash> memo_;
};

}  // namespace

MultiPoly tutte_rank_sum(const Matroid& m) {
  require_cap(m.size(), kTutteCap, "tutte_rank_sum");
  const auto counts = rank_nullity_counts(m);
  const int full_rank = m.rank();
  const auto xs = powers(vars::x() - 1, full_rank);
  const auto ys = powers(vars::y() - 1, m.size() - full_rank);
  MultiPoly result;
  for (int r = 0; r <= full_rank; ++r) {
    for (std::size_t k = 0; k < counts[r].size(); ++k) {
      if (counts[r][k] == 0) continue;
      result += count_poly(counts[r][k]) * xs[full_rank - r] * ys[k];
    }
  }
  return result;
}

std::optional<int> smallest_nonseparating(const Matroid& m) {
  for (int e : m.labels()) {
    if (m.element_kind(e) == ElementKind::Nonseparating) return e;
  }
  return std::nullopt;
}

ElementSelector seeded_random_selector(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const Matroid& m) -> std::optional<int> {
    const auto labels = m.labels();
    if (labels.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    return labels[pick(*rng)];
  };
}

MultiPoly q_universal(const Matroid& m) {
  return q_universal(m, smallest_nonseparating);
}

MultiPoly q_universal(const Matroid& m, const ElementSelector& select) {
  require_cap(m.size(), kTutteCap, "q_universal");
  DeletionContraction dc(select);
  return dc.evaluate(m);
}

MultiPoly recipe_closed_form(const Matroid& m) {
  require_cap(m.size(), kTutteCap, "recipe_closed_form");
  const auto counts = rank_nullity_counts(m);
  const int full_rank = m.rank();
  const int full_nullity = m.nullity();
  const auto x_minus_b = powers(vars::x() - vars::b(), full_rank);
  const auto y_minus_a = powers(vars::y() - vars::a(), full_nullity);
  MultiPoly result;
  for (int r = 0; r <= full_rank; ++r) {
    for (int k = 0; k <= full_nullity; ++k) {
      if (counts[r][k] == 0) continue;
      result += count_poly(counts[r][k]) * x_minus_b[full_rank - r] *
                MultiPoly::variable(Var::b, r) * y_minus_a[k] *
                MultiPoly::variable(Var::a, full_nullity - k);
    }
  }
  return result;
}

bool check_duality(const Matroid& m) {
  return swap_vars(tutte_rank_sum(m), Var::x, Var::y) ==
         tutte_rank_sum(dual(m));
}

bool check_convolution(const Matroid& m) {
  require_cap(m.size(), kConvolutionIdentityCap, "check_convolution");
  const Assignment x_zero{{Var::x, 0}};
  const Assignment y_zero{{Var::y, 0}};
  MultiPoly sum;
  const std::uint64_t subsets = std::uint64_t{1} << m.size();
  for (std::uint64_t index = 0; index < subsets; ++index) {
    const GroundSubset a = m.expand(index);
    const MultiPoly left = eval(tutte_rank_sum(restrict(m, a)), x_zero);
    if (left.is_zero()) continue;
    sum += left * eval(tutte_rank_sum(contract(m, a)), y_zero);
  }
  return sum == tutte_rank_sum(m);
}

}  // namespace tuttehopf
