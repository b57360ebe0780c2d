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
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quip/qubo/models.hpp"

namespace quip {

// Per-shot random stream. The engine is seeded from (seed, stream) through
// std::seed_seq, so every shot or replica owns an independent, reproducible
// sequence regardless of which thread runs it.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

// Ising model in double precision with adjacency lists, for the samplers.
class SpinSystem {
 public:
  explicit SpinSystem(const IsingModel& model);

  std::size_t size() const { return h_.size(); }
  double field(std::size_t i) const { return h_[i]; }
  double offset() const { return offset_; }
  struct Neighbor {
    std::size_t index;
    double coupling;
  };
  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {adjacency_.data() + start_[i], adjacency_.data() + start_[i + 1]};
  }

  double energy(std::span<const std::int8_t> spins) const;
  // h_i + sum_j J_ij s_j.
  double local_field(std::size_t i, std::span<const std::int8_t> spins) const;

  // Largest single-flip energy change bound max_i 2(|h_i| + sum_j |J_ij|).
  double max_delta_bound() const { return max_delta_; }
  // Smallest nonzero |h_i| or |J_ij| (0 for an empty model).
  double min_coefficient() const { return min_coefficient_; }

 private:
  std::vector<double> h_;
  std::vector<std::size_t> start_;
  std::vector<Neighbor> adjacency_;
  double offset_ = 0;
  double max_delta_ = 0;
  double min_coefficient_ = 0;
};

// Spins with cached local fields and energy.
class SpinState {
 public:
  SpinState(const SpinSystem& system, Config spins);

  const Config& spins() const { return spins_; }
  double energy() const { return energy_; }
  // Energy change of flipping spin i.
  double delta(std::size_t i) const { return -2.0 * spins_[i] * fields_[i]; }
  void flip(std::size_t i);

 private:
  const SpinSystem* system_;
  Config spins_;
  std::vector<double> fields_;
  double energy_;
};

struct SweepStats {
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  std::uint64_t uphill_proposals = 0;
  std::uint64_t uphill_accepted = 0;
};

// One Metropolis sweep: n single-spin flip proposals in a random order.
// Downhill moves are always accepted, uphill ones with probability
// exp(-beta dE). Every 1024th accepted move (counted in `stats`) the cached
// energy is checked against a full evaluation and InvariantError is thrown
// on a relative mismatch above 1e-9.
void mhmc_sweep(const SpinSystem& system, SpinState& state, double beta, Rng& rng, SweepStats& stats);

struct AnnealSchedule {
  enum class Shape { kGeometric, kLinear };

  double beta_min = 0;
  double beta_max = 0;
  std::size_t sweeps = 1000;
  Shape shape = Shape::kGeometric;
  std::size_t replicas = 8;            // parallel tempering only
  std::size_t exchange_interval = 1;  // sweeps between swap attempts

  // Throws ParameterError unless 0 < beta_min < beta_max, sweeps >= 1,
  // replicas >= 1 and exchange_interval >= 1.
  void validate() const;
  // `count` inverse temperatures from beta_min to beta_max in this shape.
  std::vector<double> ladder(std::size_t count) const;

  static Shape shape_from_name(const std::string& name);
  static std::string shape_name(Shape shape);
};

// beta_min = ln 2 / max dE with the worst-case single-flip bound, and
// beta_max = ln 100 / min dE with min dE the smallest nonzero coefficient
// magnitude. A model with no couplings or fields gets the range for dE = 1.
AnnealSchedule default_schedule(const SpinSystem& system, std::size_t sweeps = 1000);

enum class Vartype { kSpin, kBinary };
std::string vartype_name(Vartype v);
Vartype vartype_from_name(const std::string& name);

struct SampleRecord {
  Config config;
  double energy = 0;
  std::uint64_t count = 1;
};

// Aggregated samples, sorted by energy then configuration.
class SampleSet {
 public:
  Vartype vartype = Vartype::kSpin;
  std::size_t variables = 0;
  std::uint64_t seed = 0;
  std::string model_digest;
  std::string sampler;  // "sa", "pt" or a caller-chosen tag
  std::optional<AnnealSchedule> schedule;
  std::optional<double> chain_break_fraction;
  std::vector<SampleRecord> records;

  std::uint64_t total_count() const;
  // Lowest recorded energy; throws PreconditionError when empty.
  double best_energy() const;

  // Merges duplicate configurations, fills energies from `energy` and
  // sorts.
  template <typename EnergyFn>
  void assign(std::vector<Config> shots, EnergyFn&& energy) {
    records = aggregate(std::move(shots));
    for (auto& r : records) r.energy = energy(r.config);
    sort();
  }
  void sort();

  // Throws ValidationError unless counts are positive, configurations have
  // the right length and alphabet, and records are strictly sorted.
  void check_structure() const;
  // Structure plus digest match and energies equal to re-evaluation within
  // 1e-9 relative.
  void verify(const QuboModel& model) const;
  void verify(const IsingModel& model) const;

 private:
  static std::vector<SampleRecord> aggregate(std::vector<Config> shots);
};

// JSON lines: one header object, then one object per record.
void write_samples(std::ostream& out, const SampleSet& samples);
// Parses and checks structure; ParseError on malformed lines.
SampleSet read_samples(std::istream& in);

struct AnnealOptions {
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  // Missing fields of the schedule default from the model.
  std::optional<AnnealSchedule> schedule;
};

// Each shot starts from uniformly random spins and performs one sweep per
// rung of the schedule ladder; the final state is recorded. QUBO inputs are
// annealed in their Ising form and reported as bits with QUBO energies.
SampleSet simulated_anneal(const IsingModel& model, const AnnealOptions& options);
SampleSet simulated_anneal(const QuboModel& model, const AnnealOptions& options);

// Replicas sit on a fixed ladder of schedule.replicas inverse temperatures.
// Each shot runs schedule.sweeps sweeps on every replica, and after every
// exchange_interval sweeps attempts swaps of adjacent replicas in ladder
// order. The coldest replica's final state is recorded. replicas >= 2.
SampleSet parallel_tempering(const IsingModel& model, const AnnealOptions& options);
SampleSet parallel_tempering(const QuboModel& model, const AnnealOptions& options);

// min(1, exp((beta_1 - beta_2)(E_1 - E_2))).
double exchange_probability(double beta_1, double energy_1, double beta_2, double energy_2);

// Fraction p of shots with energy <= target (1e-9 relative slack), and
// TTS = m tau max(1, log(1 - s) / log(1 - p)) for m shots per run, so
// p = 1 gives m tau and p = 0 gives +infinity. ParameterError unless
// 0 < s < 1 and tau > 0.
struct TtsResult {
  double success_probability = 0;
  double tts = 0;
};
TtsResult tts(const SampleSet& samples, double tau, double target_energy, double confidence,
              std::size_t shots_per_run = 1);
// The formula alone.
double tts_formula(double success_probability, double tau, double confidence, std::size_t shots_per_run = 1);

struct ChainBreakReport {
  std::vector<double> break_fraction;  // per chain, weighted by counts
  double any_break_fraction = 0;
  // One variable per chain in chain order, majority vote with ties to +1
  // (bit 1), energies from the logical model.
  SampleSet collapsed;
};

// Chains must be disjoint (ParameterError otherwise) and in range.
ChainBreakReport chain_break_stats(const SampleSet& samples, const std::vector<std::vector<std::size_t>>& chains,
                                   const IsingModel& logical);
ChainBreakReport chain_break_stats(const SampleSet& samples, const std::vector<std::vector<std::size_t>>& chains,
                                   const QuboModel& logical);

}  // namespace quip
