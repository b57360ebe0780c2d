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

#include <benchmark/benchmark.h>

#include <random>

#include "quip/anneal/anneal.hpp"
#include "quip/common/graph.hpp"
#include "quip/graver/graver.hpp"
#include "quip/groebner/groebner.hpp"
#include "quip/qubo/models.hpp"

namespace quip {
namespace {

IsingModel random_ising(std::size_t n, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IsingModel m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.add_field(i, Rational(coef(rng)));
    for (std::size_t d = 0; d < degree; ++d) {
      const std::size_t j = pick(rng);
      if (j != i) m.add_coupling(i, j, Rational(coef(rng)));
    }
  }
  return m;
}

QuboModel random_qubo(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  QuboModel q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.add_linear(i, Rational(coef(rng)));
    for (std::size_t j = i + 1; j < n; ++j) q.add_pair(i, j, Rational(coef(rng)));
  }
  return q;
}

void BM_BuchbergerSphere(benchmark::State& state) {
  const auto names = VariableNames::parse_list("x,y,z");
  const Ideal ideal = Ideal::make(parse_polynomial_list("x^2 + y^2 + z^2 - 4\nx^2 + 2*y^2 - 5\nx*z - 1", names), names);
  const MonomialOrder order = state.range(0) == 0 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal, order));
}
BENCHMARK(BM_BuchbergerSphere)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ColoringCycle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph g;
  g.vertex_count = n;
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1});
  for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(g, 3));
}
BENCHMARK(BM_ColoringCycle)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Pottier(benchmark::State& state) {
  const IntMatrix A = state.range(0) == 0 ? IntMatrix{{1, 2, 1}} : IntMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(pottier(A));
}
BENCHMARK(BM_Pottier)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_LawrenceGraver(benchmark::State& state) {
  const IntMatrix A{{1, 2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(lawrence_graver(A));
}
BENCHMARK(BM_LawrenceGraver)->Unit(benchmark::kMicrosecond);

void BM_MhmcSweep(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SpinSystem system(random_ising(n, 4, 1));
  Rng rng(1, 0);
  Config spins(n);
  for (auto& s : spins) s = rng.below(2) ? 1 : -1;
  SpinState spin_state(system, spins);
  SweepStats stats;
  for (auto _ : state) mhmc_sweep(system, spin_state, 1.0, rng, stats);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MhmcSweep)->Arg(64)->Arg(1024)->Arg(16384);

void BM_SimulatedAnneal(benchmark::State& state) {
  const IsingModel m = random_ising(64, 4, 2);
  AnnealOptions options;
  options.shots = static_cast<std::size_t>(state.range(0));
  options.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(simulated_anneal(m, options));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SimulatedAnneal)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const QuboModel q = random_qubo(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(q));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_QuboToIsing(benchmark::State& state) {
  const QuboModel q = random_qubo(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(qubo_to_ising(q));
}
BENCHMARK(BM_QuboToIsing)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace quip

BENCHMARK_MAIN();
