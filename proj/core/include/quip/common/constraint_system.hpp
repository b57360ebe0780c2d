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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quip/algebra/polynomial.hpp"
#include "quip/common/matrix.hpp"

namespace quip {

// Objective of an integer program. Linear objectives carry a coefficient
// vector; polynomial objectives are in the program's variables.
struct Objective {
  enum class Kind { kNone, kLinear, kPolynomial };

  Kind kind = Kind::kNone;
  std::vector<Rational> linear;
  SparsePolynomial polynomial;

  static Objective none() { return {}; }
  static Objective make_linear(std::vector<Rational> c);
  static Objective make_linear(std::span<const std::int64_t> c);
  static Objective make_polynomial(SparsePolynomial p);

  // Objective as a polynomial in `arity` variables (zero for kNone).
  SparsePolynomial as_polynomial(std::size_t arity) const;
  Rational evaluate(std::span<const std::int64_t> x) const;
};

// Pure function of an integer point; used wherever the objective is only
// queried, never encoded.
using ObjectiveOracle = std::function<double(std::span<const std::int64_t>)>;

// Ax (= or <=) b with optional bounds l <= x <= u.
struct ConstraintSystem {
  IntMatrix A;
  IntVector b;
  std::vector<std::optional<std::int64_t>> lower;
  std::vector<std::optional<std::int64_t>> upper;
  std::vector<bool> inequality;  // row i reads a_i x <= b_i when set
  Objective objective;

  std::size_t variable_count() const { return A.cols(); }
  std::size_t row_count() const { return A.rows(); }
  bool has_inequalities() const;
  bool bounded() const;

  // Fills empty lower/upper/inequality vectors with defaults (unbounded,
  // equality) and checks dimensions and l <= u. Throws DimensionError or
  // ParameterError.
  void normalize();
  void validate() const;

  bool within_bounds(std::span<const std::int64_t> x) const;
  bool is_feasible(std::span<const std::int64_t> x) const;

  // Oracle evaluating the objective in double precision.
  ObjectiveOracle oracle() const;
};

}  // namespace quip
