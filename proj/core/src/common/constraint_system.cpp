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

#include "quip/common/constraint_system.hpp"

#include <algorithm>

#include "quip/common/errors.hpp"

namespace quip {

Objective Objective::make_linear(std::vector<Rational> c) {
  Objective o;
  o.kind = Kind::kLinear;
  o.linear = std::move(c);
  return o;
}

Objective Objective::make_linear(std::span<const std::int64_t> c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (std::int64_t v : c) r.emplace_back(static_cast<long long>(v));
  return make_linear(std::move(r));
}

Objective Objective::make_polynomial(SparsePolynomial p) {
  Objective o;
  o.kind = Kind::kPolynomial;
  o.polynomial = std::move(p);
  return o;
}

SparsePolynomial Objective::as_polynomial(std::size_t arity) const {
  switch (kind) {
    case Kind::kNone:
      return SparsePolynomial(arity);
    case Kind::kLinear: {
      if (linear.size() != arity) throw DimensionError("linear objective length mismatch");
      std::vector<Term> terms;
      for (std::size_t j = 0; j < arity; ++j) {
        terms.push_back({Monomial::variable(arity, j), linear[j]});
      }
      return SparsePolynomial::from_terms(arity, std::move(terms));
    }
    case Kind::kPolynomial:
      if (polynomial.arity() != arity) throw DimensionError("polynomial objective arity mismatch");
      return polynomial;
  }
  return SparsePolynomial(arity);
}

Rational Objective::evaluate(std::span<const std::int64_t> x) const {
  switch (kind) {
    case Kind::kNone:
      return Rational(0);
    case Kind::kLinear: {
      if (linear.size() != x.size()) throw DimensionError("linear objective length mismatch");
      Rational s;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0) s += linear[j] * Rational(static_cast<long long>(x[j]));
      }
      return s;
    }
    case Kind::kPolynomial: {
      std::vector<Rational> v;
      v.reserve(x.size());
      for (std::int64_t e : x) v.emplace_back(static_cast<long long>(e));
      return polynomial.evaluate(v);
    }
  }
  return Rational(0);
}

bool ConstraintSystem::has_inequalities() const {
  return std::find(inequality.begin(), inequality.end(), true) != inequality.end();
}

bool ConstraintSystem::bounded() const {
  return std::all_of(lower.begin(), lower.end(), [](const auto& v) { return v.has_value(); }) &&
         std::all_of(upper.begin(), upper.end(), [](const auto& v) { return v.has_value(); });
}

void ConstraintSystem::normalize() {
  const std::size_t n = A.cols();
  if (lower.empty()) lower.assign(n, std::nullopt);
  if (upper.empty()) upper.assign(n, std::nullopt);
  if (inequality.empty()) inequality.assign(A.rows(), false);
  validate();
}

void ConstraintSystem::validate() const {
  const std::size_t n = A.cols(), m = A.rows();
  if (b.size() != m) {
    throw DimensionError("A has " + std::to_string(m) + " rows but b has " +
                         std::to_string(b.size()) + " entries");
  }
  if (lower.size() != n || upper.size() != n) {
    throw DimensionError("bounds have " + std::to_string(lower.size()) + "/" +
                         std::to_string(upper.size()) + " entries for " + std::to_string(n) +
                         " variables");
  }
  if (inequality.size() != m) {
    throw DimensionError("inequality markers have " + std::to_string(inequality.size()) +
                         " entries for " + std::to_string(m) + " rows");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lower[j] && upper[j] && *lower[j] > *upper[j]) {
      throw ParameterError("lower bound exceeds upper bound for variable " + std::to_string(j));
    }
  }
  if (objective.kind == Objective::Kind::kLinear && objective.linear.size() != n) {
    throw DimensionError("objective has " + std::to_string(objective.linear.size()) +
                         " coefficients for " + std::to_string(n) + " variables");
  }
  if (objective.kind == Objective::Kind::kPolynomial && objective.polynomial.arity() != n) {
    throw DimensionError("objective polynomial arity differs from the variable count");
  }
}

bool ConstraintSystem::within_bounds(std::span<const std::int64_t> x) const {
  if (x.size() != A.cols()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lower[j] && x[j] < *lower[j]) return false;
    if (upper[j] && x[j] > *upper[j]) return false;
  }
  return true;
}

bool ConstraintSystem::is_feasible(std::span<const std::int64_t> x) const {
  if (!within_bounds(x)) return false;
  const IntVector ax = A.apply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if ((i < inequality.size() && inequality[i]) ? ax[i] > b[i] : ax[i] != b[i]) return false;
  }
  return true;
}

ObjectiveOracle ConstraintSystem::oracle() const {
  if (objective.kind == Objective::Kind::kLinear) {
    std::vector<double> c;
    for (const auto& r : objective.linear) c.push_back(r.to_double());
    return [c](std::span<const std::int64_t> x) {
      double s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += c[j] * static_cast<double>(x[j]);
      return s;
    };
  }
  Objective copy = objective;
  return [copy](std::span<const std::int64_t> x) { return copy.evaluate(x).to_double(); };
}

}  // namespace quip
