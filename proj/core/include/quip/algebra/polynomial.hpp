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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quip/algebra/monomial.hpp"
#include "quip/algebra/monomial_order.hpp"
#include "quip/algebra/rational.hpp"

namespace quip {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial over Q in a fixed number of indeterminates.
//
// Terms are kept in canonical storage order (descending raw exponent
// vectors) with no zero coefficients, so structural equality is polynomial
// equality. Term orders are always passed explicitly.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t arity) : arity_(arity) {}

  // Combines like terms and drops zeros. Throws DimensionError if a monomial
  // has a different arity.
  static SparsePolynomial from_terms(std::size_t arity, std::vector<Term> terms);
  static SparsePolynomial constant(std::size_t arity, const Rational& c);
  static SparsePolynomial variable(std::size_t arity, std::size_t var);
  static SparsePolynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t total_degree() const;
  Rational coefficient(const Monomial& m) const;

  // Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  // Precondition: values.size() == arity().
  Rational evaluate(std::span<const Rational> values) const;

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const SparsePolynomial& o);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const SparsePolynomial& b) { return a *= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }
  SparsePolynomial operator-() const;

  // c * m * this.
  SparsePolynomial mul_term(const Monomial& m, const Rational& c) const;

  SparsePolynomial pow(unsigned exponent) const;

  // Same polynomial in `new_arity` >= arity() variables, old variable i
  // becoming variable map[i].
  SparsePolynomial remap(std::size_t new_arity,
                         std::span<const std::size_t> map) const;

  // Divides by the leading coefficient under `order`. Zero stays zero.
  SparsePolynomial monic(const MonomialOrder& order) const;

  // Scales to integer coefficients with gcd 1 and a positive leading
  // coefficient under `order`.
  SparsePolynomial primitive(const MonomialOrder& order) const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  std::size_t hash() const;

 private:
  void check_arity(const SparsePolynomial& o) const;

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

struct LeadingParts {
  Term leading_term;
  Monomial leading_monomial;
  Rational leading_coefficient;
};

// Throws UndefinedLeadingTermError on the zero polynomial.
LeadingParts leading_parts(const SparsePolynomial& f, const MonomialOrder& order);
const Term& leading_term(const SparsePolynomial& f, const MonomialOrder& order);

// (L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g)).
SparsePolynomial s_polynomial(const SparsePolynomial& f,
                              const SparsePolynomial& g,
                              const MonomialOrder& order);

struct Reduction {
  SparsePolynomial remainder;
  std::vector<SparsePolynomial> quotients;
};

// Multivariate division. The largest remaining term is examined first and
// divisors are tried in list order, so quotients are deterministic.
Reduction reduce(const SparsePolynomial& f,
                 std::span<const SparsePolynomial> divisors,
                 const MonomialOrder& order);

// Remainder only; cheaper than reduce() when quotients are not needed.
SparsePolynomial normal_form(const SparsePolynomial& f,
                             std::span<const SparsePolynomial> divisors,
                             const MonomialOrder& order);

}  // namespace quip

template <>
struct std::hash<quip::SparsePolynomial> {
  std::size_t operator()(const quip::SparsePolynomial& p) const { return p.hash(); }
};
