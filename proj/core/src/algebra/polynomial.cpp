// Copyright 2026 The Quip Authors
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

#include "quip/algebra/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quip/common/errors.hpp"

namespace quip {
namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->greater(a, b);
  }
};

using TermMap = std::map<Monomial, Rational, std::greater<>>;

std::vector<Term> drain(TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  return out;
}

}  // namespace

SparsePolynomial SparsePolynomial::from_terms(std::size_t arity,
                                              std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.monomial.arity() != arity) {
      throw DimensionError("term arity " + std::to_string(t.monomial.arity()) +
                           " differs from polynomial arity " + std::to_string(arity));
    }
    if (t.coefficient.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  SparsePolynomial p(arity);
  p.terms_ = drain(acc);
  return p;
}

SparsePolynomial SparsePolynomial::constant(std::size_t arity, const Rational& c) {
  SparsePolynomial p(arity);
  if (!c.is_zero()) p.terms_.push_back({Monomial(arity), c});
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t arity, std::size_t var) {
  SparsePolynomial p(arity);
  p.terms_.push_back({Monomial::variable(arity, var), Rational(1)});
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Monomial& m, const Rational& c) {
  SparsePolynomial p(m.arity());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool SparsePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::uint64_t SparsePolynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Rational(0);
}

std::vector<std::size_t> SparsePolynomial::support() const {
  std::vector<bool> used(arity_, false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (t.monomial[i] != 0) used[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != arity_) throw DimensionError("evaluation point has wrong length");
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < arity_ && !v.is_zero(); ++i) {
      for (Monomial::Exponent e = 0; e < t.monomial[i]; ++e) v *= values[i];
    }
    sum += v;
  }
  return sum;
}

void SparsePolynomial::check_arity(const SparsePolynomial& o) const {
  if (arity_ != o.arity_) {
    throw DimensionError("polynomial arity mismatch: " + std::to_string(arity_) +
                         " vs " + std::to_string(o.arity_));
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  check_arity(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (!c.is_zero()) out.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  return *this += -o;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& o) {
  check_arity(o);
  TermMap acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Rational c = a.coefficient * b.coefficient;
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, c);
      if (!inserted) it->second += c;
    }
  }
  terms_ = drain(acc);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

SparsePolynomial SparsePolynomial::mul_term(const Monomial& m,
                                            const Rational& c) const {
  if (m.arity() != arity_) throw DimensionError("monomial arity mismatch");
  SparsePolynomial r(arity_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the raw lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned exponent) const {
  SparsePolynomial result = constant(arity_, 1);
  SparsePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

SparsePolynomial SparsePolynomial::remap(std::size_t new_arity,
                                         std::span<const std::size_t> map) const {
  if (map.size() != arity_) throw DimensionError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(new_arity);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (map[i] >= new_arity) throw DimensionError("variable map target out of range");
      m[map[i]] += t.monomial[i];
    }
    out.push_back({std::move(m), t.coefficient});
  }
  return from_terms(new_arity, std::move(out));
}

SparsePolynomial SparsePolynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  SparsePolynomial r(*this);
  r *= leading_term(*this, order).coefficient.inverse();
  return r;
}

SparsePolynomial SparsePolynomial::primitive(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  BigInt den = 1;
  BigInt num = 0;
  for (const auto& t : terms_) {
    den = lcm(den, t.coefficient.denominator());
    num = gcd(num, t.coefficient.numerator());
  }
  Rational scale(den, num);
  if (leading_term(*this, order).coefficient.sign() < 0) scale = -scale;
  return *this * scale;
}

std::size_t SparsePolynomial::hash() const {
  std::size_t h = arity_;
  for (const auto& t : terms_) {
    h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= t.coefficient.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

const Term& leading_term(const SparsePolynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw UndefinedLeadingTermError("leading term of the zero polynomial");
  if (f.arity() != order.arity()) {
    throw DimensionError("polynomial arity differs from order arity");
  }
  const auto& terms = f.terms();
  const Term* best = &terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (order.greater(terms[i].monomial, best->monomial)) best = &terms[i];
  }
  return *best;
}

LeadingParts leading_parts(const SparsePolynomial& f, const MonomialOrder& order) {
  const Term& t = leading_term(f, order);
  return {t, t.monomial, t.coefficient};
}

SparsePolynomial s_polynomial(const SparsePolynomial& f,
                              const SparsePolynomial& g,
                              const MonomialOrder& order) {
  const Term& tf = leading_term(f, order);
  const Term& tg = leading_term(g, order);
  const Monomial l = lcm(tf.monomial, tg.monomial);
  return f.mul_term(l / tf.monomial, tf.coefficient.inverse()) -
         g.mul_term(l / tg.monomial, tg.coefficient.inverse());
}

namespace {

Reduction divide(const SparsePolynomial& f,
                 std::span<const SparsePolynomial> divisors,
                 const MonomialOrder& order, bool want_quotients) {
  std::vector<const Term*> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.arity() != f.arity()) throw DimensionError("divisor arity mismatch");
    leads.push_back(&leading_term(g, order));
  }
  if (f.arity() != order.arity()) throw DimensionError("polynomial arity differs from order arity");

  std::map<Monomial, Rational, OrderGreater> p(OrderGreater{&order});
  for (const auto& t : f.terms()) p.emplace(t.monomial, t.coefficient);

  std::vector<Term> remainder;
  std::vector<std::vector<Term>> quotients(want_quotients ? divisors.size() : 0);
  while (!p.empty()) {
    auto head = p.begin();
    std::size_t i = 0;
    while (i < leads.size() && !leads[i]->monomial.divides(head->first)) ++i;
    if (i == leads.size()) {
      remainder.push_back({head->first, std::move(head->second)});
      p.erase(head);
      continue;
    }
    const Monomial q = head->first / leads[i]->monomial;
    const Rational k = head->second / leads[i]->coefficient;
    if (want_quotients) quotients[i].push_back({q, k});
    for (const auto& t : divisors[i].terms()) {
      Monomial m = t.monomial * q;
      Rational delta = k * t.coefficient;
      auto it = p.find(m);
      if (it == p.end()) {
        p.emplace(std::move(m), -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) p.erase(it);
      }
    }
  }

  Reduction out;
  out.remainder = SparsePolynomial::from_terms(f.arity(), std::move(remainder));
  for (auto& q : quotients) {
    out.quotients.push_back(SparsePolynomial::from_terms(f.arity(), std::move(q)));
  }
  return out;
}

}  // namespace

Reduction reduce(const SparsePolynomial& f,
                 std::span<const SparsePolynomial> divisors,
                 const MonomialOrder& order) {
  return divide(f, divisors, order, true);
}

SparsePolynomial normal_form(const SparsePolynomial& f,
                             std::span<const SparsePolynomial> divisors,
                             const MonomialOrder& order) {
  return divide(f, divisors, order, false).remainder;
}

}  // namespace quip
