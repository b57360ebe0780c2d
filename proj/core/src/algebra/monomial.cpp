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

#include "quip/algebra/monomial.hpp"

#include <algorithm>

#include "quip/common/errors.hpp"

namespace quip {

Monomial Monomial::variable(std::size_t arity, std::size_t var,
                            Exponent power) {
  if (var >= arity) throw DimensionError("variable index out of range");
  Monomial m(arity);
  m.exponents_[var] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exponents_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw DimensionError("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r.exponents_[i] += other.exponents_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (arity() != other.arity()) throw DimensionError("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r.exponents_[i] -= other.exponents_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exponents_) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw DimensionError("monomial arity mismatch");
  Monomial r(a);
  for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

}  // namespace quip
