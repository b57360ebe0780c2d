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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quip/algebra/rational.hpp"
#include "quip/common/constraint_system.hpp"
#include "quip/common/graph.hpp"

namespace quip {

// One variable assignment: 0/1 bits for QUBO models, -1/+1 spins for Ising.
using Config = std::vector<std::int8_t>;

// Unordered pair (i, j) with i < j.
using PairKey = std::pair<std::size_t, std::size_t>;
using PairMap = std::map<PairKey, Rational>;

// min x^T Q x + offset over x in {0,1}^n. Stored as the diagonal of Q and
// the pair coefficients Q_ij + Q_ji for i < j, so x^T Q x reads
// sum_i Q_ii x_i + sum_{i<j} pair_ij x_i x_j. Zero pair coefficients are
// never stored.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(std::size_t n) : linear_(n) {}

  // Accepts any square matrix; off-diagonal entries are symmetrized.
  static QuboModel from_matrix(const std::vector<std::vector<Rational>>& Q,
                               const Rational& offset = Rational(0));

  std::size_t size() const { return linear_.size(); }
  const std::vector<Rational>& linear() const { return linear_; }
  const PairMap& pairs() const { return pairs_; }
  const Rational& offset() const { return offset_; }

  void add_linear(std::size_t i, const Rational& v);
  // Adds v x_i x_j; i == j folds into the linear term since x_i^2 = x_i.
  void add_pair(std::size_t i, std::size_t j, const Rational& v);
  void add_offset(const Rational& v) { offset_ += v; }

  // Entry of the symmetric matrix Q.
  Rational entry(std::size_t i, std::size_t j) const;
  Rational pair(std::size_t i, std::size_t j) const;

  // Throws DimensionError on a length mismatch and ParameterError on a
  // value other than 0 or 1.
  Rational energy(std::span<const std::int8_t> x) const;

  friend bool operator==(const QuboModel&, const QuboModel&) = default;

 private:
  std::vector<Rational> linear_;
  PairMap pairs_;
  Rational offset_;
};

// min sum_{i<j} J_ij s_i s_j + sum_i h_i s_i + offset over s in {-1,+1}^n.
// This is the minimized function itself; physics sign conventions are
// applied by whoever builds the model.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(std::size_t n) : h_(n) {}

  std::size_t size() const { return h_.size(); }
  const std::vector<Rational>& h() const { return h_; }
  const PairMap& couplings() const { return couplings_; }
  const Rational& offset() const { return offset_; }

  void add_field(std::size_t i, const Rational& v);
  // Throws ParameterError for i == j.
  void add_coupling(std::size_t i, std::size_t j, const Rational& v);
  void add_offset(const Rational& v) { offset_ += v; }
  Rational coupling(std::size_t i, std::size_t j) const;

  // Throws DimensionError on a length mismatch and ParameterError on a
  // value other than -1 or +1.
  Rational energy(std::span<const std::int8_t> s) const;

  friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
  std::vector<Rational> h_;
  PairMap couplings_;
  Rational offset_;
};

// Exact energy-preserving maps under s = 2x - 1.
IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& m);

Config bits_to_spins(std::span<const std::int8_t> x);
Config spins_to_bits(std::span<const std::int8_t> s);

// J = W on every edge, no fields, zero offset. The cut value of a spin
// assignment is (sum W - energy) / 2.
IsingModel maxcut_to_ising(const Graph& graph);
Rational cut_value(const Graph& graph, std::span<const std::int8_t> spins);

// Linearized 0/1 program: variables x_0..x_{n-1}, then one product variable
// per nonzero pair (in pair order), each linked by
//   x_i + x_j - x_ij <= 1,  x_ij - x_i <= 0,  x_ij - x_j <= 0.
// objective(x) + offset equals the QUBO energy whenever the links hold.
struct IlpLinearization {
  ConstraintSystem system;
  std::vector<PairKey> products;
  Rational offset;
};
IlpLinearization qubo_to_ilp(const QuboModel& q);

// Splits spin `variable` into `copies` spins: the original index plus
// copies-1 new spins appended at the end. Incident couplings are dealt to
// the copies round-robin in pair order, the field stays on the original,
// and consecutive chain members are joined by -p. The offset gains
// p*(copies-1) so chain-consistent energies equal the original ones.
// Throws ParameterError for p <= 0 or copies == 0.
IsingModel chain_duplicate(const IsingModel& m, std::size_t variable, std::size_t copies,
                           const Rational& p);
// Chain produced by chain_duplicate on a model with n spins.
std::vector<std::size_t> duplicate_chain(std::size_t n, std::size_t variable, std::size_t copies);

inline constexpr std::size_t kBruteForceMaxVariables = 24;

struct BruteForceOptions {
  double beta = 1.0;
  // Longer argmin lists are cut to the lexicographically smallest entries.
  std::size_t max_argmins = std::size_t{1} << 16;
  std::size_t threads = 0;
};

struct BruteForceResult {
  Rational energy;
  std::vector<Config> argmins;  // lexicographic order
  bool argmins_truncated = false;
  double partition = 0;  // Z(beta) = sum exp(-beta E)
};

// Full enumeration. Energies are scanned in double precision and every
// candidate within rounding distance of the minimum is re-evaluated exactly.
// Throws ComputationLimitError above kBruteForceMaxVariables.
BruteForceResult brute_force(const QuboModel& q, const BruteForceOptions& options = {});
BruteForceResult brute_force(const IsingModel& m, const BruteForceOptions& options = {});

}  // namespace quip
