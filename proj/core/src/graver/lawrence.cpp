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
#include <limits>

#include "quip/common/errors.hpp"
#include "quip/graver/graver.hpp"

namespace quip {
namespace {

// x^{u+} y^{u-} - x^{u-} y^{u+} in variables x_0..x_{n-1}, y_0..y_{n-1}.
SparsePolynomial lawrence_binomial(const LatticeVector& u) {
  const std::size_t n = u.size();
  Monomial plus(2 * n), minus(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto mag = static_cast<Monomial::Exponent>(u[j] < 0 ? -u[j] : u[j]);
    if (u[j] > 0) {
      plus[j] = mag;
      minus[n + j] = mag;
    } else if (u[j] < 0) {
      minus[j] = mag;
      plus[n + j] = mag;
    }
  }
  return SparsePolynomial::from_terms(2 * n, {{plus, Rational(1)}, {minus, Rational(-1)}});
}

// Divides f by the largest power of x_var dividing every term.
SparsePolynomial divide_out(const SparsePolynomial& f, std::size_t var) {
  Monomial::Exponent common = std::numeric_limits<Monomial::Exponent>::max();
  for (const auto& t : f.terms()) common = std::min(common, t.monomial[var]);
  if (common == 0 || f.is_zero()) return f;
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    m[var] -= common;
    terms.push_back({std::move(m), t.coefficient});
  }
  return SparsePolynomial::from_terms(f.arity(), std::move(terms));
}

}  // namespace

GraverBasis lawrence_graver(const IntMatrix& A, const GroebnerLimits& limits) {
  GraverBasis result;
  result.A = A;
  const std::size_t n = A.cols();
  const auto kernel = integer_kernel_basis(A);
  if (kernel.empty()) return result;

  std::vector<SparsePolynomial> gens;
  for (const auto& u : kernel) gens.push_back(lawrence_binomial(u));
  const auto names = VariableNames::indexed(2 * n);

  // The lattice ideal is the saturation of the basis ideal by every variable.
  // The generators are homogeneous, so saturating by x_k is read off a
  // grevlex basis with x_k smallest.
  for (std::size_t k = 0; k < 2 * n; ++k) {
    std::vector<std::size_t> precedence;
    for (std::size_t v = 0; v < 2 * n; ++v) {
      if (v != k) precedence.push_back(v);
    }
    precedence.push_back(k);
    const auto basis = buchberger(Ideal::make(std::move(gens), names),
                                  MonomialOrder::grevlex(std::move(precedence)), limits);
    gens.clear();
    for (const auto& g : basis.polynomials) gens.push_back(divide_out(g, k));
  }
  const auto basis = buchberger(Ideal::make(std::move(gens), names),
                                MonomialOrder::grevlex(2 * n), limits);

  std::vector<LatticeVector> vectors;
  for (const auto& g : basis.polynomials) {
    if (g.size() != 2) throw InvariantError("toric basis element is not a binomial");
    const auto& a = g.terms()[0].monomial;
    const auto& b = g.terms()[1].monomial;
    LatticeVector u(n);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = static_cast<std::int64_t>(a[j]) - static_cast<std::int64_t>(b[j]);
    }
    vectors.push_back(std::move(u));
  }
  result.elements = minimal_filter(std::move(vectors), true);
  return result;
}

}  // namespace quip
