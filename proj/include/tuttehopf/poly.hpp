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

#ifndef TUTTEHOPF_POLY_HPP_
#define TUTTEHOPF_POLY_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tuttehopf {

// The five indeterminates of the ring Q[x, y, a, b, s]. The enumerator order
// is the lexicographic priority used by the canonical term ordering.
enum class Var : int { x = 0, y = 1, a = 2, b = 3, s = 4 };

inline constexpr int kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::x, Var::y, Var::a,
                                                       Var::b, Var::s};

char var_name(Var v);

// Exponent vector (ex, ey, ea, eb, es) packed into one word, 12 bits per
// variable with ex in the most significant slot. Integer comparison of the
// packed word is therefore lexicographic comparison on (ex, ey, ea, eb, es).
class Monomial {
 public:
  static constexpr int kBits = 12;
  static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& e);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>(packed_ >> shift(v)) & kMaxExponent;
  }
  std::array<unsigned, kNumVars> exponents() const;
  unsigned total_degree() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t packed() const { return packed_; }

  // Throws std::overflow_error if any exponent would exceed kMaxExponent.
  Monomial operator*(Monomial other) const;
  Monomial without(Var v) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  explicit constexpr Monomial(std::uint64_t packed) : packed_(packed) {}
  static constexpr int shift(Var v) {
    return kBits * (kNumVars - 1 - static_cast<int>(v));
  }

  std::uint64_t packed_ = 0;
};

// Partial assignment of rational values to variables.
using Assignment = std::map<Var, mpq_class>;

// Sparse polynomial with exact rational coefficients. Terms are kept sorted
// by Monomial, highest first, and no stored coefficient is zero, so two
// values are equal iff their term lists are identical.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(runtime/explicit)
  MultiPoly(const mpq_class& constant);  // NOLINT(runtime/explicit)
  static MultiPoly variable(Var v, unsigned exponent = 1);
  static MultiPoly term(const mpq_class& coefficient, Monomial m);
  // Builds the canonical form of an arbitrary (unsorted, possibly repeating)
  // list of terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  mpq_class constant_term() const;
  // Coefficient of the given monomial (zero if absent).
  mpq_class coefficient(Monomial m) const;
  // Largest exponent of v over all terms; 0 for the zero polynomial.
  unsigned degree(Var v) const;
  bool uses(Var v) const { return degree(v) > 0; }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(MultiPoly p);
  friend bool operator==(const MultiPoly& p, const MultiPoly& q);

  // Canonical text: terms highest first, coefficients as reduced fractions,
  // variables inside a monomial in alphabetical order joined by `*`.
  // Examples: `x^2 + x + y`, `a*x + b*y`, `-1/2*s^2*y + 3`.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, unsigned k);

// Substitutes the assigned variables and leaves the rest symbolic.
MultiPoly eval(const MultiPoly& p, const Assignment& point);

// Formal partial derivative.
MultiPoly derivative(const MultiPoly& p, Var v);
inline MultiPoly deriv_s(const MultiPoly& p) { return derivative(p, Var::s); }

// Exchanges the roles of two variables.
MultiPoly swap_vars(const MultiPoly& p, Var u, Var v);

// Shorthands for the generators.
namespace vars {
inline MultiPoly x() { return MultiPoly::variable(Var::x); }
inline MultiPoly y() { return MultiPoly::variable(Var::y); }
inline MultiPoly a() { return MultiPoly::variable(Var::a); }
inline MultiPoly b() { return MultiPoly::variable(Var::b); }
inline MultiPoly s() { return MultiPoly::variable(Var::s); }
}  // namespace vars

}  // namespace tuttehopf

#endif  // TUTTEHOPF_POLY_HPP_
