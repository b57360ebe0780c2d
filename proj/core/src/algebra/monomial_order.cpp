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

#include "quip/algebra/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "quip/common/errors.hpp"

namespace quip {
namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void check_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) {
      throw ParameterError("variable precedence is not a permutation");
    }
    seen[v] = true;
  }
}

std::strong_ordering three_way(std::uint64_t a, std::uint64_t b) {
  return a < b ? std::strong_ordering::less
         : a > b ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t arity) { return lex(identity(arity)); }
MonomialOrder MonomialOrder::grlex(std::size_t arity) { return grlex(identity(arity)); }
MonomialOrder MonomialOrder::grevlex(std::size_t arity) { return grevlex(identity(arity)); }

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> precedence) {
  check_permutation(precedence);
  return MonomialOrder(Kind::kLex, std::move(precedence));
}

MonomialOrder MonomialOrder::grlex(std::vector<std::size_t> precedence) {
  check_permutation(precedence);
  return MonomialOrder(Kind::kGrlex, std::move(precedence));
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> precedence) {
  check_permutation(precedence);
  return MonomialOrder(Kind::kGrevlex, std::move(precedence));
}

MonomialOrder MonomialOrder::cost_weighted(std::vector<std::int64_t> cost,
                                           MonomialOrder tie) {
  if (cost.size() != tie.arity()) {
    throw DimensionError("cost vector length differs from tie order arity");
  }
  MonomialOrder o(Kind::kCostWeighted, tie.precedence_);
  o.cost_ = std::move(cost);
  o.tie_ = std::make_shared<const MonomialOrder>(std::move(tie));
  return o;
}

MonomialOrder MonomialOrder::from_name(const std::string& name,
                                       std::size_t arity) {
  if (name == "lex") return lex(arity);
  if (name == "grlex") return grlex(arity);
  if (name == "grevlex") return grevlex(arity);
  throw ParameterError("unknown monomial order '" + name + "'");
}

std::size_t MonomialOrder::arity() const {
  return kind_ == Kind::kCostWeighted ? cost_.size() : precedence_.size();
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kLex: return "lex";
    case Kind::kGrlex: return "grlex";
    case Kind::kGrevlex: return "grevlex";
    case Kind::kCostWeighted: return "cost(" + tie_->name() + ")";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  if (a.arity() != arity() || b.arity() != arity()) {
    throw DimensionError("monomial arity " + std::to_string(a.arity()) + "/" +
                         std::to_string(b.arity()) + " differs from order arity " +
                         std::to_string(arity()));
  }
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a,
                                                      const Monomial& b) const {
  switch (kind_) {
    case Kind::kLex:
      for (std::size_t v : precedence_) {
        if (a[v] != b[v]) return three_way(a[v], b[v]);
      }
      return std::strong_ordering::equal;
    case Kind::kGrlex: {
      if (auto c = three_way(a.degree(), b.degree()); c != 0) return c;
      for (std::size_t v : precedence_) {
        if (a[v] != b[v]) return three_way(a[v], b[v]);
      }
      return std::strong_ordering::equal;
    }
    case Kind::kGrevlex: {
      if (auto c = three_way(a.degree(), b.degree()); c != 0) return c;
      for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
        if (a[*it] != b[*it]) return three_way(b[*it], a[*it]);
      }
      return std::strong_ordering::equal;
    }
    case Kind::kCostWeighted: {
      __int128 ca = 0, cb = 0;
      for (std::size_t i = 0; i < cost_.size(); ++i) {
        ca += static_cast<__int128>(cost_[i]) * a[i];
        cb += static_cast<__int128>(cost_[i]) * b[i];
      }
      if (ca != cb) {
        return ca < cb ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return tie_->compare_unchecked(a, b);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace quip
