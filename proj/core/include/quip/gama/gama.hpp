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
#include <string>
#include <vector>

#include "quip/anneal/anneal.hpp"
#include "quip/graver/graver.hpp"
#include "quip/qubo/models.hpp"
#include "quip/reform/reform.hpp"

namespace quip {

// Q_B = E^T Q_I E + diag(2 L^T Q_I E) with Q_I = A^T A and offset L^T Q_I L,
// so energy(X) = |A(L + E X)|^2 exactly.
QuboModel kernel_qubo(const IntMatrix& A, const EncodingMap& encoding);

// Q_B = E^T Q_I E + 2 diag((L^T Q_I - b^T A) E) with offset |A L - b|^2, so
// energy(X) = |A(L + E X) - b|^2 exactly.
QuboModel seed_qubo(const IntMatrix& A, const IntVector& b, const EncodingMap& encoding);

// Box [-2^(w-1), 2^(w-1) - 1] per variable, binary encoded.
EncodingMap symmetric_box_encoding(std::size_t variables, std::size_t width,
                                   const EncodingScheme& scheme = EncodingScheme::binary());

struct ExtractOptions {
  // Samples with |Av|_1 at most this are combined pairwise.
  std::int64_t near_kernel_l1 = 2;
  std::size_t max_pairs = 10'000;
  // Compare with pottier(A) when it finishes within this many elements;
  // 0 skips the comparison and leaves the basis flagged partial.
  std::size_t reference_limit = 20'000;
};

struct ExtractStats {
  std::size_t distinct_samples = 0;
  std::size_t kernel_samples = 0;  // nonzero exact kernel members
  std::size_t near_kernel_samples = 0;
  std::size_t pairs_examined = 0;
  std::size_t combinations_added = 0;
  bool reference_computed = false;
};

// Decodes x = L + E X for every record, keeps nonzero kernel members, adds
// sums and differences of near-kernel vectors that land in the kernel (one
// round), then sign-closes and keeps the conformally minimal vectors.
// `partial` is false only when the result equals pottier(A).
GraverBasis extract_partial_graver(const SampleSet& samples, const EncodingMap& encoding, const IntMatrix& A,
                                   const ExtractOptions& options = {}, ExtractStats* stats = nullptr);

struct GamaConfig {
  EncodingScheme scheme = EncodingScheme::binary();
  std::size_t width = 2;                   // kernel box width, per variable unless overridden
  std::vector<std::size_t> widths;        // optional per-variable kernel widths
  std::size_t kernel_shots = 5000;
  std::size_t seed_shots = 5000;
  std::size_t sweeps = 1000;
  double fraction = 1.0;                   // share of +-g pairs kept for augmentation
  std::size_t max_seeds = 0;               // 0 keeps every feasible seed, else a uniform pick
  std::size_t seed_rounds = 4;             // adaptive re-centering attempts
  AugmentStrategy strategy = AugmentStrategy::kGreedy;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  ExtractOptions extract;

  // ParameterError unless budgets >= 1, 0 < fraction <= 1 and widths >= 1.
  void validate() const;
};

struct SeedRun {
  IntVector start;
  IntVector x;
  std::vector<double> trajectory;
  double objective = 0;
};

struct GamaReport {
  std::size_t basis_size = 0;       // extracted, sign-closed
  std::size_t basis_used = 0;       // after the fraction cut
  bool basis_complete = false;      // equals pottier(A)
  bool basis_checked = false;       // pottier(A) was computed
  ExtractStats extract;
  std::uint64_t fraction_seed = 0;  // stream used for the fraction cut
  std::uint64_t select_seed = 0;    // stream used to pick seeds under max_seeds
  std::size_t seed_rounds = 0;
  std::size_t seeds_attempted = 0;  // annealer shots spent on seeds
  std::size_t seeds_found = 0;      // distinct feasible points
  std::vector<SeedRun> runs;        // ascending initial objective
  IntVector best;
  double best_objective = 0;
  std::size_t best_run = 0;
  std::vector<std::pair<std::string, double>> timings;  // seconds per stage
};

// Kernel QUBO -> anneal -> partial Graver basis; seed QUBO -> anneal ->
// feasible seeds; Graver augmentation from every seed. Inequalities get
// slack variables; `f` sees only the original variables and is never
// encoded. A seed round that finds nothing re-centers the window on the
// lowest-residual sample and doubles its width. Throws NoSeedError when
// every round comes back empty and UnboundedError for missing bounds.
GamaReport gama_solve(const ConstraintSystem& ip, const ObjectiveOracle& f, const GamaConfig& config);

// -mu^T x + sqrt((1 - eps) / eps * sum sigma_i^2 x_i^2).
ObjectiveOracle capital_budgeting_objective(std::vector<double> mu, std::vector<double> sigma, double epsilon);

}  // namespace quip
