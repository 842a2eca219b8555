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

#include "tuttehopf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tuttehopf {

namespace {

// Descending monomial order: the canonical storage and printing order.
bool term_before(const MultiPoly::Term& l, const MultiPoly::Term& r) {
  return l.first > r.first;
}

// Alphabetical order used when printing the factors of one monomial.
constexpr std::array<Var, kNumVars> kPrintOrder = {Var::a, Var::b, Var::s,
                                                   Var::x, Var::y};

}  // namespace

char var_name(Var v) {
  switch (v) {
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::a: return 'a';
    case Var::b: return 'b';
    case Var::s: return 's';
  }
  return '?';
}

Monomial Monomial::of(Var v, unsigned exponent) {
  if (exponent > kMaxExponent) throw std::overflow_error("exponent overflow");
  return Monomial(static_cast<std::uint64_t>(exponent) << shift(v));
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& e) {
  Monomial m;
  for (Var v : kAllVars) m = m * of(v, e[static_cast<int>(v)]);
  return m;
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> e{};
  for (Var v : kAllVars) e[static_cast<int>(v)] = exponent(v);
  return e;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Var v : kAllVars) d += exponent(v);
  return d;
}

Monomial Monomial::operator*(Monomial other) const {
  for (Var v : kAllVars) {
    if (exponent(v) + other.exponent(v) > kMaxExponent) {
      throw std::overflow_error("exponent overflow");
    }
  }
  return Monomial(packed_ + other.packed_);
}

Monomial Monomial::without(Var v) const {
  return Monomial(packed_ & ~(static_cast<std::uint64_t>(kMaxExponent)
                              << shift(v)));
}

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.emplace_back(Monomial(), mpq_class(constant));
}

MultiPoly::MultiPoly(const mpq_class& constant) {
  if (sgn(constant) != 0) {
    terms_.emplace_back(Monomial(), constant);
    terms_.back().second.canonicalize();
  }
}

MultiPoly MultiPoly::variable(Var v, unsigned exponent) {
  return term(1, Monomial::of(v, exponent));
}

MultiPoly MultiPoly::term(const mpq_class& coefficient, Monomial m) {
  MultiPoly p;
  if (sgn(coefficient) != 0) {
    p.terms_.emplace_back(m, coefficient);
    p.terms_.back().second.canonicalize();
  }
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  for (auto& t : p.terms_) t.second.canonicalize();
  p.normalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

mpq_class MultiPoly::constant_term() const { return coefficient(Monomial()); }

mpq_class MultiPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term(m, 0),
                             term_before);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

// Sorts, merges equal monomials and drops zeros.
void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
  terms_ = std::move(merged);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  // In place when every monomial of other already occurs here.
  bool covered = other.terms_.size() <= terms_.size();
  auto k = other.terms_.cbegin();
  for (auto i = terms_.cbegin(); covered && k != other.terms_.cend(); ++i) {
    if (i == terms_.cend() || k->first > i->first) {
      covered = false;
    } else if (k->first == i->first) {
      ++k;
    }
  }
  if (covered) {
    bool cancelled = false;
    auto i = terms_.begin();
    for (const auto& [m, c] : other.terms_) {
      while (i->first != m) ++i;
      i->second += c;
      cancelled = cancelled || sgn(i->second) == 0;
    }
    if (cancelled) {
      std::erase_if(terms_, [](const Term& t) { return sgn(t.second) == 0; });
    }
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->first > j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first > i->first) {
      out.push_back(*j++);
    } else {
      mpq_class c = i->second + j->second;
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  return *this += -other;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r;
  if (p.is_zero() || q.is_zero()) return r;
  r.terms_.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      r.terms_.emplace_back(mp * mq, cp * cq);
    }
  }
  r.normalize();
  return r;
}

MultiPoly operator-(MultiPoly p) {
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (p.terms_[i].first != q.terms_[i].first ||
        p.terms_[i].second != q.terms_[i].second) {
      return false;
    }
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class magnitude = abs(c);
    std::string factors;
    for (Var v : kPrintOrder) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(v);
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + '*' + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.to_string();
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result(1);
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly eval(const MultiPoly& p, const Assignment& point) {
  std::vector<MultiPoly::Term> staged;
  for (const auto& [m, c] : p.terms()) {
    mpq_class coeff = c;
    Monomial rest = m;
    for (const auto& [v, value] : point) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      mpq_class factor = 1;
      for (unsigned i = 0; i < e; ++i) factor *= value;
      coeff *= factor;
      rest = rest.without(v);
    }
    staged.emplace_back(rest, std::move(coeff));
  }
  return MultiPoly::from_terms(std::move(staged));
}

MultiPoly derivative(const MultiPoly& p, Var v) {
  std::vector<MultiPoly::Term> staged;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    staged.emplace_back(m.without(v) * Monomial::of(v, e - 1), c * e);
  }
  return MultiPoly::from_terms(std::move(staged));
}

MultiPoly swap_vars(const MultiPoly& p, Var u, Var v) {
  std::vector<MultiPoly::Term> staged;
  for (const auto& [m, c] : p.terms()) {
    auto e = m.exponents();
    std::swap(e[static_cast<int>(u)], e[static_cast<int>(v)]);
    staged.emplace_back(Monomial::from_exponents(e), c);
  }
  return MultiPoly::from_terms(std::move(staged));
}

}  // namespace tuttehopf
