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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace quip {

// Power product x_0^e_0 ... x_{n-1}^e_{n-1} over a fixed number of
// indeterminates. Exponents are stored densely; an index beyond the
// stored arity is never valid, and absent variables carry exponent 0.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}
  explicit Monomial(std::vector<Exponent> exponents)
      : exponents_(std::move(exponents)) {}

  // x_var^power in `arity` variables.
  static Monomial variable(std::size_t arity, std::size_t var,
                           Exponent power = 1);

  std::size_t arity() const { return exponents_.size(); }
  Exponent operator[](std::size_t var) const { return exponents_[var]; }
  Exponent& operator[](std::size_t var) { return exponents_[var]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  std::uint64_t degree() const;
  bool is_one() const;

  // True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  // True when the two monomials share no variable.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; precondition: other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Raw lexicographic comparison of exponent vectors (storage order only).
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

  std::size_t hash() const;

 private:
  std::vector<Exponent> exponents_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace quip

template <>
struct std::hash<quip::Monomial> {
  std::size_t operator()(const quip::Monomial& m) const { return m.hash(); }
};
