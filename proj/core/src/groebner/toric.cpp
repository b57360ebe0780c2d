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

#include <algorithm>
#include <string>

#include "quip/common/errors.hpp"
#include "quip/groebner/groebner.hpp"

namespace quip {
namespace {

VariableNames toric_names(std::size_t n, std::size_t m, bool with_t) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("w" + std::to_string(j + 1));
  for (std::size_t i = 0; i < m; ++i) names.push_back("z" + std::to_string(i + 1));
  if (with_t) names.push_back("t");
  return VariableNames::named(std::move(names));
}

std::vector<SparsePolynomial> column_binomials(const IntMatrix& A, std::size_t arity) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<SparsePolynomial> gens;
  for (std::size_t j = 0; j < n; ++j) {
    Monomial lhs(arity), rhs(arity);
    lhs[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const std::int64_t a = A(i, j);
      if (a < 0) lhs[n + i] = static_cast<Monomial::Exponent>(-a);
      if (a > 0) rhs[n + i] = static_cast<Monomial::Exponent>(a);
    }
    gens.push_back(SparsePolynomial::monomial(lhs) - SparsePolynomial::monomial(rhs));
  }
  return gens;
}

}  // namespace

void ToricIP::validate() const {
  if (b.size() != A.rows()) {
    throw DimensionError("b has " + std::to_string(b.size()) + " entries but A has " +
                         std::to_string(A.rows()) + " rows");
  }
  if (c.size() != A.cols()) {
    throw DimensionError("c has " + std::to_string(c.size()) + " entries but A has " +
                         std::to_string(A.cols()) + " columns");
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0) throw ParameterError("cost c[" + std::to_string(j) + "] is negative");
  }
}

Ideal ct_toric_ideal(const ToricIP& ip) {
  ip.validate();
  const std::size_t arity = ip.A.cols() + ip.A.rows();
  return Ideal::make(column_binomials(ip.A, arity),
                     toric_names(ip.A.cols(), ip.A.rows(), false));
}

MonomialOrder ct_order(std::span<const std::int64_t> cost, std::size_t arity) {
  const std::size_t n = cost.size();
  if (n > arity) throw DimensionError("cost vector longer than the variable count");
  std::vector<std::int64_t> eliminate(arity, 0), weighted(arity, 0);
  for (std::size_t k = n; k < arity; ++k) eliminate[k] = 1;
  std::copy(cost.begin(), cost.end(), weighted.begin());
  return MonomialOrder::cost_weighted(
      eliminate, MonomialOrder::cost_weighted(weighted, MonomialOrder::grevlex(arity)));
}

CtSolution ct_solve(const ToricIP& ip, const std::optional<IntVector>& x0,
                    const GroebnerLimits& limits) {
  ip.validate();
  const std::size_t m = ip.A.rows(), n = ip.A.cols();
  const bool with_t = ip.A.has_negative();
  const std::size_t arity = n + m + (with_t ? 1 : 0);

  Monomial start(arity);
  if (x0) {
    if (x0->size() != n) throw DimensionError("x0 has the wrong length");
    if (std::any_of(x0->begin(), x0->end(), [](std::int64_t v) { return v < 0; }) ||
        ip.A.apply(*x0) != ip.b) {
      throw PreconditionError("x0 is not a feasible point");
    }
    for (std::size_t j = 0; j < n; ++j) start[j] = static_cast<Monomial::Exponent>((*x0)[j]);
  } else {
    std::int64_t shift = 0;
    for (std::int64_t v : ip.b) shift = std::max(shift, -v);
    if (shift > 0 && !with_t) {
      throw InfeasibleError("b has a negative entry but A is non-negative", "negative_rhs");
    }
    for (std::size_t i = 0; i < m; ++i) {
      start[n + i] = static_cast<Monomial::Exponent>(ip.b[i] + shift);
    }
    if (with_t) start[n + m] = static_cast<Monomial::Exponent>(shift);
  }

  std::vector<SparsePolynomial> gens = column_binomials(ip.A, arity);
  if (with_t) {
    Monomial all(arity);
    for (std::size_t k = n; k < arity; ++k) all[k] = 1;
    gens.push_back(SparsePolynomial::monomial(all) - SparsePolynomial::constant(arity, 1));
  }
  const Ideal ideal = Ideal::make(std::move(gens), toric_names(n, m, with_t));
  const MonomialOrder order = ct_order(ip.c, arity);
  const GroebnerBasis basis = buchberger(ideal, order, limits);

  const SparsePolynomial nf =
      normal_form(SparsePolynomial::monomial(start), basis.polynomials, order);
  if (nf.size() != 1) throw InvariantError("normal form of a monomial is not a monomial");
  const Monomial& r = nf.terms()[0].monomial;
  for (std::size_t k = n; k < arity; ++k) {
    if (r[k] != 0) {
      throw InfeasibleError("no non-negative integer x satisfies Ax = b", "normal_form_retains_z");
    }
  }
  CtSolution sol;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = r[j];
    sol.objective += ip.c[j] * sol.x[j];
  }
  sol.basis_size = basis.polynomials.size();
  if (ip.A.apply(sol.x) != ip.b) throw InvariantError("ct_solve produced an infeasible point");
  return sol;
}

}  // namespace quip
