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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quip/algebra/monomial.hpp"

namespace quip {

// A term order on monomials of a fixed arity.
//
// `precedence` lists variable indices from most to least significant; lex
// compares along it, grevlex looks at its tail. A cost-weighted order compares
// cost . alpha first and falls back to `tie` on equal cost.
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrlex, kGrevlex, kCostWeighted };

  // Lex on zero variables.
  MonomialOrder() = default;

  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder lex(std::vector<std::size_t> precedence);
  static MonomialOrder grlex(std::size_t arity);
  static MonomialOrder grlex(std::vector<std::size_t> precedence);
  static MonomialOrder grevlex(std::size_t arity);
  static MonomialOrder grevlex(std::vector<std::size_t> precedence);
  static MonomialOrder cost_weighted(std::vector<std::int64_t> cost,
                                     MonomialOrder tie);

  // Parses "lex", "grlex" or "grevlex".
  static MonomialOrder from_name(const std::string& name, std::size_t arity);

  Kind kind() const { return kind_; }
  std::size_t arity() const;
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  const std::vector<std::int64_t>& cost() const { return cost_; }
  const MonomialOrder* tie() const { return tie_.get(); }
  std::string name() const;

  // Throws DimensionError when either monomial has the wrong arity.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  // Same as compare() without the arity check.
  std::strong_ordering compare_unchecked(const Monomial& a,
                                         const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare_unchecked(a, b) == std::strong_ordering::greater;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> precedence)
      : kind_(kind), precedence_(std::move(precedence)) {}

  Kind kind_ = Kind::kLex;
  std::vector<std::size_t> precedence_;
  std::vector<std::int64_t> cost_;
  std::shared_ptr<const MonomialOrder> tie_;
};

}  // namespace quip
