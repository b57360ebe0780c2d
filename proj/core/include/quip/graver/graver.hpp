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
#include <span>
#include <vector>

#include "quip/common/constraint_system.hpp"
#include "quip/common/matrix.hpp"
#include "quip/groebner/groebner.hpp"

namespace quip {

using LatticeVector = IntVector;

struct GraverBasis {
  std::vector<LatticeVector> elements;  // sorted lexicographically
  IntMatrix A;
  bool partial = false;
};

// u is conformal to v: same orthant and |u_i| <= |v_i| for every i.
// Throws DimensionError on a length mismatch.
bool conformal_leq(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

// Z-basis of {x : Ax = 0} from unimodular column reduction of A, then
// LLL-reduced (delta = 3/4) to keep the entries small.
std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& A);

// Subtracts elements g with g conformal to the remainder until none is.
LatticeVector vector_normal_form(LatticeVector s, std::span<const LatticeVector> G);

struct PottierOptions {
  std::size_t max_elements = 200'000;
  // Skip sums of two vectors in the same closed orthant; such a sum always
  // reduces to zero, so the result is unchanged.
  bool sign_restriction = true;
};

// Completion procedure over F and -F, F = integer_kernel_basis(A). Throws
// ComputationLimitError when the working set exceeds max_elements.
GraverBasis pottier(const IntMatrix& A, const PottierOptions& options = {});

// Graver basis from the reduced grevlex Groebner basis of the toric ideal of
// the Lawrence lifting [[A, 0], [I, I]].
GraverBasis lawrence_graver(const IntMatrix& A, const GroebnerLimits& limits = {});

// Drops zeros and duplicates, optionally adds negatives, and keeps the
// conformally minimal vectors. Output is sorted lexicographically.
std::vector<LatticeVector> minimal_filter(std::vector<LatticeVector> K, bool sign_close = true);

enum class AugmentStrategy { kGreedy, kBisection };

struct AugmentOptions {
  AugmentStrategy strategy = AugmentStrategy::kGreedy;
  std::size_t max_iterations = 1'000'000;
  // Steps larger than this along an unbounded direction are an error.
  std::int64_t max_step = std::int64_t{1} << 40;
};

struct AugmentResult {
  IntVector x;
  std::vector<double> trajectory;  // objective at the start and after each move
  std::size_t iterations = 0;
};

// Moves z0 along directions of G while the oracle strictly decreases.
// Greedy takes the best (direction, step) pair each iteration; bisection
// takes the first improving direction and the step where the discrete slope
// changes sign. Requires an equality system; throws PreconditionError when
// z0 is infeasible.
AugmentResult graver_augment(const ConstraintSystem& ip, const ObjectiveOracle& f,
                             std::span<const LatticeVector> G, IntVector z0,
                             const AugmentOptions& options = {});

}  // namespace quip
