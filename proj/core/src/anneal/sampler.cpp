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
#include <cmath>

#include "quip/anneal/anneal.hpp"
#include "quip/common/errors.hpp"
#include "quip/common/parallel.hpp"
#include "quip/qubo/io.hpp"

namespace quip {
namespace {

constexpr std::uint64_t kAuditInterval = 1024;

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}

Config random_spins(std::size_t n, Rng& rng) {
  Config s(n);
  for (auto& v : s) v = (rng.next() >> 63) != 0 ? 1 : -1;
  return s;
}

AnnealSchedule resolve_schedule(const SpinSystem& system, const AnnealOptions& options) {
  AnnealSchedule s = default_schedule(system);
  if (options.schedule) {
    const AnnealSchedule& given = *options.schedule;
    const double beta_min = s.beta_min, beta_max = s.beta_max;
    s = given;
    if (s.beta_min <= 0) s.beta_min = beta_min;
    if (s.beta_max <= 0) s.beta_max = beta_max;
  }
  s.validate();
  return s;
}

template <typename Shot>
std::vector<Config> run_shots(const AnnealOptions& options, Shot&& shot) {
  std::vector<Config> out(options.shots);
  parallel_for(options.shots, options.threads, [&](std::size_t k) { out[k] = shot(k); });
  return out;
}

std::vector<Config> anneal_spins(const SpinSystem& system, const AnnealSchedule& schedule,
                                 const AnnealOptions& options) {
  const std::vector<double> betas = schedule.ladder(schedule.sweeps);
  return run_shots(options, [&](std::size_t k) {
    Rng rng(options.seed, k);
    SpinState state(system, random_spins(system.size(), rng));
    SweepStats stats;
    for (double beta : betas) mhmc_sweep(system, state, beta, rng, stats);
    return state.spins();
  });
}

std::vector<Config> temper_spins(const SpinSystem& system, const AnnealSchedule& schedule,
                                 const AnnealOptions& options) {
  if (schedule.replicas < 2) throw ParameterError("parallel tempering needs at least 2 replicas");
  const std::vector<double> betas = schedule.ladder(schedule.replicas);
  return run_shots(options, [&](std::size_t k) {
    Rng rng(options.seed, k);
    std::vector<SpinState> replicas;
    replicas.reserve(betas.size());
    for (std::size_t r = 0; r < betas.size(); ++r) replicas.emplace_back(system, random_spins(system.size(), rng));
    SweepStats stats;
    for (std::size_t sweep = 1; sweep <= schedule.sweeps; ++sweep) {
      for (std::size_t r = 0; r < betas.size(); ++r) mhmc_sweep(system, replicas[r], betas[r], rng, stats);
      if (sweep % schedule.exchange_interval != 0) continue;
      for (std::size_t r = 0; r + 1 < betas.size(); ++r) {
        const double p =
            exchange_probability(betas[r], replicas[r].energy(), betas[r + 1], replicas[r + 1].energy());
        if (p >= 1.0 || rng.uniform() < p) std::swap(replicas[r], replicas[r + 1]);
      }
    }
    return replicas.back().spins();
  });
}

SampleSet spin_samples(const IsingModel& model, std::vector<Config> shots, const AnnealOptions& options,
                       const AnnealSchedule& schedule, const char* sampler) {
  SampleSet out;
  out.vartype = Vartype::kSpin;
  out.variables = model.size();
  out.seed = options.seed;
  out.model_digest = model_digest(model);
  out.sampler = sampler;
  out.schedule = schedule;
  out.assign(std::move(shots), [&](const Config& s) { return model.energy(s).to_double(); });
  return out;
}

SampleSet bit_samples(const QuboModel& model, std::vector<Config> shots, const AnnealOptions& options,
                      const AnnealSchedule& schedule, const char* sampler) {
  for (auto& s : shots) s = spins_to_bits(s);
  SampleSet out;
  out.vartype = Vartype::kBinary;
  out.variables = model.size();
  out.seed = options.seed;
  out.model_digest = model_digest(model);
  out.sampler = sampler;
  out.schedule = schedule;
  out.assign(std::move(shots), [&](const Config& x) { return model.energy(x).to_double(); });
  return out;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

SpinSystem::SpinSystem(const IsingModel& model) {
  const std::size_t n = model.size();
  h_.resize(n);
  for (std::size_t i = 0; i < n; ++i) h_[i] = model.h()[i].to_double();
  offset_ = model.offset().to_double();
  std::vector<std::vector<Neighbor>> lists(n);
  for (const auto& [key, j] : model.couplings()) {
    if (j.is_zero()) continue;
    const double v = j.to_double();
    lists[key.first].push_back({key.second, v});
    lists[key.second].push_back({key.first, v});
  }
  start_.push_back(0);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(lists[i].begin(), lists[i].end(),
              [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
    adjacency_.insert(adjacency_.end(), lists[i].begin(), lists[i].end());
    start_.push_back(adjacency_.size());
    double bound = std::abs(h_[i]);
    for (const auto& nb : lists[i]) bound += std::abs(nb.coupling);
    max_delta_ = std::max(max_delta_, 2 * bound);
    auto note = [&](double v) {
      v = std::abs(v);
      if (v > 0 && (min_coefficient_ == 0 || v < min_coefficient_)) min_coefficient_ = v;
    };
    note(h_[i]);
    for (const auto& nb : lists[i]) note(nb.coupling);
  }
}

double SpinSystem::energy(std::span<const std::int8_t> spins) const {
  if (spins.size() != size()) throw DimensionError("spin vector length differs from the model size");
  double e = offset_;
  for (std::size_t i = 0; i < size(); ++i) {
    e += h_[i] * spins[i];
    for (const auto& nb : neighbors(i)) {
      if (nb.index > i) e += nb.coupling * spins[i] * spins[nb.index];
    }
  }
  return e;
}

double SpinSystem::local_field(std::size_t i, std::span<const std::int8_t> spins) const {
  double f = h_[i];
  for (const auto& nb : neighbors(i)) f += nb.coupling * spins[nb.index];
  return f;
}

SpinState::SpinState(const SpinSystem& system, Config spins) : system_(&system), spins_(std::move(spins)) {
  if (spins_.size() != system.size()) throw DimensionError("spin vector length differs from the model size");
  for (auto s : spins_) {
    if (s != 1 && s != -1) throw ParameterError("spins must be +1 or -1");
  }
  fields_.resize(spins_.size());
  for (std::size_t i = 0; i < spins_.size(); ++i) fields_[i] = system.local_field(i, spins_);
  energy_ = system.energy(spins_);
}

void SpinState::flip(std::size_t i) {
  energy_ += delta(i);
  const double twice = -2.0 * spins_[i];
  spins_[i] = static_cast<std::int8_t>(-spins_[i]);
  for (const auto& nb : system_->neighbors(i)) fields_[nb.index] += twice * nb.coupling;
}

void mhmc_sweep(const SpinSystem& system, SpinState& state, double beta, Rng& rng, SweepStats& stats) {
  const std::size_t n = system.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  for (std::size_t i : order) {
    const double d = state.delta(i);
    ++stats.proposals;
    bool accept = d <= 0;
    if (!accept) {
      ++stats.uphill_proposals;
      accept = rng.uniform() < std::exp(-beta * d);
      if (accept) ++stats.uphill_accepted;
    }
    if (!accept) continue;
    state.flip(i);
    if (++stats.accepted % kAuditInterval == 0) {
      const double full = system.energy(state.spins());
      if (std::abs(full - state.energy()) > 1e-9 * std::max(1.0, std::abs(full))) {
        throw InvariantError("incremental energy drifted from full evaluation");
      }
    }
  }
}

void AnnealSchedule::validate() const {
  if (!(beta_min > 0) || !(beta_max > beta_min) || !std::isfinite(beta_max)) {
    throw ParameterError("schedule needs 0 < beta_min < beta_max");
  }
  if (sweeps < 1) throw ParameterError("schedule needs at least one sweep");
  if (replicas < 1) throw ParameterError("schedule needs at least one replica");
  if (exchange_interval < 1) throw ParameterError("exchange interval must be at least 1");
}

std::vector<double> AnnealSchedule::ladder(std::size_t count) const {
  std::vector<double> betas(count);
  if (count == 1) {
    betas[0] = beta_max;
    return betas;
  }
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    betas[k] = shape == Shape::kGeometric ? beta_min * std::pow(beta_max / beta_min, t)
                                          : beta_min + (beta_max - beta_min) * t;
  }
  betas.back() = beta_max;
  return betas;
}

AnnealSchedule::Shape AnnealSchedule::shape_from_name(const std::string& name) {
  if (name == "geometric") return Shape::kGeometric;
  if (name == "linear") return Shape::kLinear;
  throw ParameterError("unknown schedule shape '" + name + "' (expected geometric or linear)");
}

std::string AnnealSchedule::shape_name(Shape shape) {
  return shape == Shape::kGeometric ? "geometric" : "linear";
}

AnnealSchedule default_schedule(const SpinSystem& system, std::size_t sweeps) {
  double max_delta = system.max_delta_bound(), min_delta = system.min_coefficient();
  if (max_delta == 0) max_delta = min_delta = 1;
  AnnealSchedule s;
  s.beta_min = std::log(2.0) / max_delta;
  s.beta_max = std::log(100.0) / min_delta;
  s.sweeps = sweeps;
  return s;
}

double exchange_probability(double beta_1, double energy_1, double beta_2, double energy_2) {
  const double x = (beta_1 - beta_2) * (energy_1 - energy_2);
  return x >= 0 ? 1.0 : std::exp(x);
}

SampleSet simulated_anneal(const IsingModel& model, const AnnealOptions& options) {
  const SpinSystem system(model);
  const AnnealSchedule schedule = resolve_schedule(system, options);
  return spin_samples(model, anneal_spins(system, schedule, options), options, schedule, "sa");
}

SampleSet simulated_anneal(const QuboModel& model, const AnnealOptions& options) {
  const IsingModel ising = qubo_to_ising(model);
  const SpinSystem system(ising);
  const AnnealSchedule schedule = resolve_schedule(system, options);
  return bit_samples(model, anneal_spins(system, schedule, options), options, schedule, "sa");
}

SampleSet parallel_tempering(const IsingModel& model, const AnnealOptions& options) {
  const SpinSystem system(model);
  const AnnealSchedule schedule = resolve_schedule(system, options);
  return spin_samples(model, temper_spins(system, schedule, options), options, schedule, "pt");
}

SampleSet parallel_tempering(const QuboModel& model, const AnnealOptions& options) {
  const IsingModel ising = qubo_to_ising(model);
  const SpinSystem system(ising);
  const AnnealSchedule schedule = resolve_schedule(system, options);
  return bit_samples(model, temper_spins(system, schedule, options), options, schedule, "pt");
}

}  // namespace quip
