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

#ifndef TUTTEHOPF_TUTTE_HPP_
#define TUTTEHOPF_TUTTE_HPP_

#include <cstdint>
#include <functional>
#include <optional>

#include "tuttehopf/matroid.hpp"
#include "tuttehopf/poly.hpp"

namespace tuttehopf {

inline constexpr int kTutteCap = 20;
inline constexpr int kConvolutionIdentityCap = 14;

// Corank-nullity generating function
//   T_M(x, y) = sum_{A subset E} (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
MultiPoly tutte_rank_sum(const Matroid& m);

// Picks the element the deletion-contraction recursion splits on, or nullopt
// to stop: the matroid is then a direct sum of loops and coloops and its
// value is x^{#coloops} y^{#loops}.
using ElementSelector = std::function<std::optional<int>(const Matroid&)>;

// Smallest-labeled nonseparating element.
std::optional<int> smallest_nonseparating(const Matroid& m);

// Uniformly random element of any kind, drawn from a generator seeded once.
ElementSelector seeded_random_selector(std::uint64_t seed);

// Generalized deletion-contraction invariant Q_M(x, y, a, b):
//   coloop e:         Q(M) = x Q(M\e)
//   loop e:           Q(M) = y Q(M/e)
//   nonseparating e:  Q(M) = a Q(M\e) + b Q(M/e)
// with Q(empty) = 1, memoized on exact minors.
MultiPoly q_universal(const Matroid& m);
MultiPoly q_universal(const Matroid& m, const ElementSelector& select);

// a^{n(M)} b^{r(M)} T_M(x/b, y/a), expanded without denominators as
//   sum_A (x-b)^{r(E)-r(A)} b^{r(A)} (y-a)^{n(A)} a^{n(E)-n(A)}.
MultiPoly recipe_closed_form(const Matroid& m);

// T_M(x, y) == T_{M*}(y, x).
bool check_duality(const Matroid& m);

// T_M(x, y) == sum_A T_{M|A}(0, y) T_{M/A}(x, 0).
bool check_convolution(const Matroid& m);

}  // namespace tuttehopf

#endif  // TUTTEHOPF_TUTTE_HPP_
