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
#include <span>
#include <string>
#include <vector>

#include "quip/algebra/polynomial.hpp"
#include "quip/common/constraint_system.hpp"
#include "quip/qubo/models.hpp"

namespace quip {

struct EncodingScheme {
  enum class Kind { kBinary, kUnary, kBounded };

  Kind kind = Kind::kBinary;
  std::int64_t mu = 0;  // coefficient cap, bounded only

  static EncodingScheme binary() { return {Kind::kBinary, 0}; }
  static EncodingScheme unary() { return {Kind::kUnary, 0}; }
  static EncodingScheme bounded(std::int64_t mu) { return {Kind::kBounded, mu}; }
  // "binary", "unary" or "bounded" (which then needs mu).
  static EncodingScheme from_name(const std::string& name, std::int64_t mu = 0);
  std::string name() const;
};

// y = lower + sum_j k_j X_j over bits X. sum k = upper - lower.
struct VariableEncoding {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<std::int64_t> k;

  std::size_t width() const { return k.size(); }
  std::int64_t decode(std::span<const std::int8_t> bits) const;
  // Some bit pattern decoding to y; throws ParameterError outside the range.
  std::vector<std::int8_t> encode(std::int64_t y) const;
};

// Throws ParameterError for upper < lower or a bounded scheme with mu < 1.
VariableEncoding make_encoding(std::int64_t lower, std::int64_t upper, const EncodingScheme& scheme);

// Stacked encodings x = L + E X; variable i owns bits [first_bit(i),
// first_bit(i) + width).
class EncodingMap {
 public:
  EncodingMap() = default;
  explicit EncodingMap(std::vector<VariableEncoding> vars);

  std::size_t variable_count() const { return vars_.size(); }
  std::size_t bit_count() const { return bits_; }
  const VariableEncoding& variable(std::size_t i) const { return vars_[i]; }
  std::size_t first_bit(std::size_t i) const { return first_[i]; }

  IntMatrix E() const;
  IntVector L() const;

  // Reads the leading bit_count() bits.
  IntVector decode(std::span<const std::int8_t> bits) const;
  std::vector<std::int8_t> encode(std::span<const std::int64_t> x) const;

 private:
  std::vector<VariableEncoding> vars_;
  std::vector<std::size_t> first_;
  std::size_t bits_ = 0;
};

// Box-bounded system over 0/1 variables with x = L + E X.
struct Binarized {
  ConstraintSystem system;
  EncodingMap encoding;
  // Constant dropped from a linear objective (c^T L); polynomial objectives
  // keep their constant term.
  Rational objective_offset;
};

// Throws UnboundedError when a variable lacks a finite bound.
Binarized binarize(const ConstraintSystem& ip, const EncodingScheme& scheme);

// Replaces every exponent above one by one (x^2 = x on binaries).
SparsePolynomial multilinearize(const SparsePolynomial& f);

// y = x_i x_j.
struct Ancilla {
  std::size_t index = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

// 3y + x_i x_j - 2 y x_i - 2 y x_j: zero iff y = x_i x_j, otherwise >= 1.
SparsePolynomial rosenberg_penalty(std::size_t arity, std::size_t i, std::size_t j, std::size_t y);

struct Quadratization {
  SparsePolynomial objective;  // degree <= 2, ancillas appended as variables
  std::vector<Ancilla> ancillas;
  std::vector<SparsePolynomial> penalties;  // one per ancilla, unweighted
  Rational weight;  // 1 + sum of |non-constant coefficients| of the input

  // objective + weight * sum(penalties).
  SparsePolynomial total() const;
};

// Multilinearizes f, then repeatedly substitutes an ancilla for the pair of
// variables shared by the most terms of degree >= 3, lowest indices first on
// ties, until no such term remains.
Quadratization quadratize(const SparsePolynomial& f);

// Adds a slack s_i in [0, b_i - min a_i x] to every <= row. New columns
// follow the original variables in row order; they carry no cost. Throws
// InfeasibleError when the minimum activity already exceeds b_i and
// UnboundedError when it is unbounded below.
ConstraintSystem inequality_to_equality(const ConstraintSystem& ip);

struct PenaltyWeights {
  Rational rho;     // equality penalty
  Rational lambda;  // inequality penalty (inequalities become slacked equalities)
  Rational delta_hb_max;  // sum max(c_i, 0)
  Rational delta_ha_min;  // min_j max(1, min_sigma 1/2 sum (-1)^sigma A_ij)
  Rational abs_sum_bound;  // sum |c_i| + 1
};

// Weights for a 0/1 system. rho = max(1, sum |c_i| + 1): the objective
// range over binaries is at most sum |c_i| and every infeasible point pays
// at least rho. delta_hb_max / delta_ha_min never exceeds it. Polynomial
// objectives use their multilinear coefficients. Throws PreconditionError
// when the system has no coefficient-bearing objective or is not binary.
PenaltyWeights penalty_bound(const ConstraintSystem& binary_ip);

struct CompiledQubo {
  QuboModel qubo;
  EncodingMap encoding;  // original variables, then slacks
  std::size_t original_variables = 0;
  std::size_t slack_variables = 0;
  std::vector<Ancilla> ancillas;  // indices into the QUBO variables
  PenaltyWeights weights;
  Rational ancilla_weight;
  // Binary equality system over the encoding bits: A' X = b'.
  IntMatrix binary_A;
  IntVector binary_b;
  // Objective in QUBO variables before penalties (quadratized).
  SparsePolynomial objective;

  // Original variables decoded from a QUBO configuration.
  IntVector decode(std::span<const std::int8_t> bits) const;
  // rho |A'X - b'|^2 + ancilla_weight * sum H.
  Rational penalty(std::span<const std::int8_t> bits) const;
  bool feasible(std::span<const std::int8_t> bits) const;
};

// Slack conversion, binarization, quadratization of the objective and
// penalty unconstraining, so that for every QUBO assignment
//   energy = objective(x) + rho |A'X - b'|^2 + ancilla_weight * sum H.
// `weights` overrides penalty_bound. Oracle-only objectives are rejected.
CompiledQubo compile_qubo(const ConstraintSystem& ip, const EncodingScheme& scheme,
                          const std::optional<PenaltyWeights>& weights = std::nullopt);

}  // namespace quip
