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
#include <optional>
#include <vector>

#include "quip/algebra/poly_io.hpp"
#include "quip/algebra/polynomial.hpp"
#include "quip/common/graph.hpp"
#include "quip/common/matrix.hpp"

namespace quip {

struct Ideal {
  std::vector<SparsePolynomial> generators;
  VariableNames names;

  // Drops zero generators and exact duplicates, keeping first occurrences.
  // Throws DimensionError if arities disagree.
  static Ideal make(std::vector<SparsePolynomial> generators, VariableNames names);

  std::size_t arity() const { return names.arity; }
};

struct GroebnerBasis {
  std::vector<SparsePolynomial> polynomials;
  MonomialOrder order;
  bool reduced = false;
};

struct GroebnerLimits {
  std::size_t max_pairs = 1'000'000;
  std::uint64_t max_degree = 60;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
};

// Reduced Groebner basis, monic, sorted by descending leading monomial.
// Pairs are taken by smallest lcm degree; the coprime and chain criteria
// discard pairs whose S-polynomial is known to reduce to zero. Throws
// ComputationLimitError when a cap is exceeded.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerLimits& limits = {},
                         GroebnerStats* stats = nullptr);

// True iff the basis is {c} for a nonzero constant c.
bool is_infeasible(const GroebnerBasis& basis);

// Post-hoc audit: every S-polynomial reduces to zero, and, if the reduced
// flag is set, every LC is one and no leading monomial divides a term of
// another element. Pairs are checked on `threads` workers.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis, std::size_t threads = 0);
bool is_reduced(const GroebnerBasis& basis);

// Ideal membership through the normal form.
bool contains(const GroebnerBasis& basis, const SparsePolynomial& f);

// --- Toric integer programs -------------------------------------------------

struct ToricIP {
  IntMatrix A;
  IntVector b;
  IntVector c;

  // Throws DimensionError or ParameterError (negative cost).
  void validate() const;
};

// Generators z^{a_j^-} w_j - z^{a_j^+} in variables (w_1..w_n, z_1..z_m).
Ideal ct_toric_ideal(const ToricIP& ip);

struct CtSolution {
  IntVector x;
  std::int64_t objective = 0;
  std::size_t basis_size = 0;
};

// Minimizes c.x over Ax = b, x >= 0 by normal form against the reduced basis
// of the toric ideal under the cost order with the z block eliminated first.
// When A has negative entries the ideal is saturated with t z_1...z_m - 1.
// Throws InfeasibleError when no solution exists.
CtSolution ct_solve(const ToricIP& ip, const std::optional<IntVector>& x0 = std::nullopt,
                    const GroebnerLimits& limits = {});

// The elimination order used by ct_solve on `arity` variables, of which the
// first n carry the cost and the rest are eliminated.
MonomialOrder ct_order(std::span<const std::int64_t> cost, std::size_t arity);

// --- Binary polynomial programs ---------------------------------------------

struct BptSolution {
  Rational objective;
  std::vector<int> x;
  // True when the optimum came from the exact rational root search.
  bool exact = true;
};

// Minimizes `objective` over x in {0,1}^n subject to every equality
// polynomial vanishing. Variables are x_0..x_{n-1}; the basis is computed
// under lex with an extra variable z = objective placed last. Throws
// InfeasibleError when no binary point satisfies the equalities.
BptSolution bpt_solve(const SparsePolynomial& objective,
                      const std::vector<SparsePolynomial>& equalities, std::size_t n,
                      const GroebnerLimits& limits = {});

// Real roots of a univariate polynomial with rational coefficients
// (coefficients[i] multiplies z^i). Exact rational roots come first and are
// flagged; the remaining roots are approximated to within 2^-40.
struct RealRoot {
  Rational value;
  bool exact = true;
};
std::vector<RealRoot> real_roots(const std::vector<Rational>& coefficients);

// --- Graph coloring ---------------------------------------------------------

// Generators x_i^k - 1 per vertex and sum_{d<k} x_i^d x_j^{k-1-d} per edge.
Ideal coloring_system(const Graph& graph, unsigned k);

// Colorable iff the grevlex basis of coloring_system is not {1}.
bool is_k_colorable(const Graph& graph, unsigned k, const GroebnerLimits& limits = {});

}  // namespace quip
