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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "quip/common/errors.hpp"
#include "quip/gama/gama.hpp"
#include "support/gen.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace quip {
namespace {

using testing::Gen;

template <typename Visit>
void for_each_bits(std::size_t n, Visit visit) {
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    Config x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::int8_t>((idx >> i) & 1U);
    visit(x);
  }
}

Rational squared_residual(const IntMatrix& A, const IntVector& x, const IntVector& b) {
  const IntVector ax = A.apply(x);
  Rational s;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    const Rational r(static_cast<long long>(ax[i] - b[i]));
    s += r * r;
  }
  return s;
}

EncodingMap box_encoding(const IntVector& lo, const IntVector& hi) {
  std::vector<VariableEncoding> vars;
  for (std::size_t i = 0; i < lo.size(); ++i) vars.push_back(make_encoding(lo[i], hi[i], EncodingScheme::binary()));
  return EncodingMap(std::move(vars));
}

// Every bit pattern of `encoding`, with exact energies from `q`.
SampleSet all_patterns(const QuboModel& q, const std::function<bool(const Config&)>& keep = nullptr) {
  std::vector<Config> shots;
  for_each_bits(q.size(), [&](const Config& x) {
    if (!keep || keep(x)) shots.push_back(x);
  });
  SampleSet s;
  s.vartype = Vartype::kBinary;
  s.variables = q.size();
  s.sampler = "exhaustive";
  s.assign(std::move(shots), [&](const Config& x) { return q.energy(x).to_double(); });
  return s;
}

double capital_brute_force(const testing::CapitalBudgeting& cb) {
  const ObjectiveOracle f = capital_budgeting_objective(cb.mu, cb.sigma, cb.epsilon);
  double best = std::numeric_limits<double>::infinity();
  testing::for_each_in_box(IntVector(8, 0), IntVector(8, 1), [&](const IntVector& x) {
    if (cb.ip.is_feasible(x)) best = std::min(best, f(x));
  });
  return best;
}

GamaConfig small_budget(std::uint64_t seed) {
  GamaConfig c;
  c.kernel_shots = 1000;
  c.seed_shots = 1000;
  c.sweeps = 200;
  c.seed = seed;
  c.threads = 1;
  return c;
}

TEST(KernelQubo, SingleRowExample) {
  const IntMatrix A{{1, 2, 1}};
  const EncodingMap enc = box_encoding({-1, -1, -1}, {2, 2, 2});
  const QuboModel q = kernel_qubo(A, enc);
  const std::vector<Rational> diag{Rational(-7), Rational(-12), Rational(-12),
                                   Rational(-16), Rational(-7),  Rational(-12)};
  EXPECT_EQ(q.linear(), diag);
  EXPECT_EQ(q.offset(), Rational(16));
  EXPECT_EQ(q.pair(0, 1), Rational(4));
  EXPECT_EQ(q.pair(0, 2), Rational(4));
  EXPECT_EQ(q.pair(2, 3), Rational(16));
  for_each_bits(6, [&](const Config& x) {
    EXPECT_EQ(q.energy(x), squared_residual(A, enc.decode(x), {0}));
  });
}

TEST(KernelQubo, IdentityHasOnlyTheZeroPattern) {
  const EncodingMap enc = symmetric_box_encoding(3, 2);
  const QuboModel q = kernel_qubo(IntMatrix::identity(3), enc);
  std::size_t zeros = 0;
  for_each_bits(6, [&](const Config& x) {
    if (q.energy(x).is_zero()) {
      ++zeros;
      EXPECT_EQ(enc.decode(x), (IntVector{0, 0, 0}));
    }
  });
  EXPECT_EQ(zeros, 1U);
}

TEST(KernelQubo, ZeroEnergyPatternsAreKernelPoints) {
  Gen gen(71);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix A(2, 4);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 4; ++c) A(r, c) = gen.integer(-2, 2);
    }
    const EncodingMap enc = symmetric_box_encoding(4, 2);
    const QuboModel q = kernel_qubo(A, enc);
    std::set<IntVector> from_qubo, from_box;
    for_each_bits(8, [&](const Config& x) {
      EXPECT_GE(q.energy(x), Rational(0));
      if (q.energy(x).is_zero()) from_qubo.insert(enc.decode(x));
    });
    testing::for_each_in_box(IntVector(4, -2), IntVector(4, 1), [&](const IntVector& v) {
      if (A.apply(v) == IntVector{0, 0}) from_box.insert(v);
    });
    EXPECT_EQ(from_qubo, from_box);
  }
}

TEST(KernelQubo, WidthGuards) {
  EXPECT_THROW(symmetric_box_encoding(2, 0), ParameterError);
  EXPECT_THROW(kernel_qubo(IntMatrix{{1, 1}}, symmetric_box_encoding(3, 2)), DimensionError);
  EXPECT_THROW(seed_qubo(IntMatrix{{1, 1}}, {1, 2}, symmetric_box_encoding(2, 2)), DimensionError);
}

TEST(SeedQubo, ZeroRightHandSideIsTheKernelQubo) {
  const IntMatrix A{{1, 2, 1}, {0, 1, 3}};
  const EncodingMap enc = box_encoding({-1, 0, -2}, {2, 3, 1});
  EXPECT_EQ(seed_qubo(A, {0, 0}, enc), kernel_qubo(A, enc));
}

TEST(SeedQubo, EnergyIsTheSquaredResidual) {
  Gen gen(72);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix A(2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) A(r, c) = gen.integer(-3, 3);
    }
    const IntVector b = gen.vector(2, -4, 4);
    IntVector lo = gen.vector(3, -3, 1), hi(3);
    for (std::size_t i = 0; i < 3; ++i) hi[i] = lo[i] + gen.integer(0, 3);
    const EncodingMap enc = box_encoding(lo, hi);
    const QuboModel q = seed_qubo(A, b, enc);
    for_each_bits(enc.bit_count(), [&](const Config& x) {
      EXPECT_EQ(q.energy(x), squared_residual(A, enc.decode(x), b));
    });
  }
}

TEST(SeedQubo, TwoVariableFeasibleDecodes) {
  const IntMatrix A{{1, 1}};
  const EncodingMap enc = box_encoding({0, 0}, {2, 2});
  const QuboModel q = seed_qubo(A, {2}, enc);
  std::set<IntVector> feasible;
  for_each_bits(enc.bit_count(), [&](const Config& x) {
    if (q.energy(x).is_zero()) feasible.insert(enc.decode(x));
  });
  EXPECT_EQ(feasible, (std::set<IntVector>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(SeedQubo, SetPartitionZeroEnergyIsTheFeasibleSet) {
  const ConstraintSystem ip = testing::set_partition_instance();
  const EncodingMap enc = box_encoding(IntVector(11, 0), IntVector(11, 1));
  const QuboModel q = seed_qubo(ip.A, ip.b, enc);
  std::set<IntVector> from_qubo, from_box;
  for_each_bits(11, [&](const Config& x) {
    if (q.energy(x).is_zero()) from_qubo.insert(enc.decode(x));
  });
  testing::for_each_in_box(IntVector(11, 0), IntVector(11, 1), [&](const IntVector& v) {
    if (ip.is_feasible(v)) from_box.insert(v);
  });
  EXPECT_EQ(from_qubo, from_box);
  EXPECT_FALSE(from_qubo.empty());
}

TEST(Extract, AllPatternsGiveTheCompleteBasis) {
  const IntMatrix A{{1, 2, 1}};
  const EncodingMap enc = symmetric_box_encoding(3, 3);
  const QuboModel q = kernel_qubo(A, enc);
  ExtractStats stats;
  const GraverBasis basis = extract_partial_graver(all_patterns(q), enc, A, {}, &stats);
  EXPECT_FALSE(basis.partial);
  EXPECT_EQ(basis.elements, pottier(A).elements);
  EXPECT_EQ(basis.elements.size(), 8U);
  EXPECT_TRUE(stats.reference_computed);
  EXPECT_EQ(stats.distinct_samples, 512U);
}

TEST(Extract, ZeroSamplesGiveAnEmptyPartialBasis) {
  const IntMatrix A{{1, 2, 1}};
  const EncodingMap enc = symmetric_box_encoding(3, 3);
  const QuboModel q = kernel_qubo(A, enc);
  const IntVector zero{0, 0, 0};
  const SampleSet s = all_patterns(q, [&](const Config& x) { return enc.decode(x) == zero; });
  ExtractStats stats;
  const GraverBasis basis = extract_partial_graver(s, enc, A, {}, &stats);
  EXPECT_TRUE(basis.elements.empty());
  EXPECT_TRUE(basis.partial);
  EXPECT_EQ(stats.kernel_samples, 0U);
}

TEST(Extract, MissingOrbitLeavesTheBasisPartial) {
  const IntMatrix A{{1, 2, 1}};
  const EncodingMap enc = symmetric_box_encoding(3, 3);
  const QuboModel q = kernel_qubo(A, enc);
  const IntVector g{1, 0, -1}, minus_g{-1, 0, 1};
  const SampleSet s = all_patterns(q, [&](const Config& x) {
    const IntVector v = enc.decode(x);
    return v != g && v != minus_g;
  });
  ExtractOptions options;
  options.near_kernel_l1 = 0;
  const GraverBasis basis = extract_partial_graver(s, enc, A, options);
  EXPECT_TRUE(basis.partial);
  EXPECT_EQ(std::count(basis.elements.begin(), basis.elements.end(), g), 0);
  // (2, 0, -2) is no longer dominated.
  EXPECT_EQ(std::count(basis.elements.begin(), basis.elements.end(), IntVector{2, 0, -2}), 1);
}

TEST(Extract, NearKernelPairsRecoverAnOrbit) {
  const IntMatrix A{{1, 2, 1}};
  const EncodingMap enc = symmetric_box_encoding(3, 3);
  const QuboModel q = kernel_qubo(A, enc);
  // Only (1,0,0) and (0,0,1): both have residual 1, their difference is g.
  const SampleSet s = all_patterns(q, [&](const Config& x) {
    const IntVector v = enc.decode(x);
    return v == IntVector{1, 0, 0} || v == IntVector{0, 0, 1};
  });
  ExtractStats stats;
  const GraverBasis basis = extract_partial_graver(s, enc, A, {}, &stats);
  EXPECT_EQ(basis.elements, (std::vector<LatticeVector>{{-1, 0, 1}, {1, 0, -1}}));
  EXPECT_EQ(stats.near_kernel_samples, 2U);
  EXPECT_EQ(stats.combinations_added, 1U);
}

TEST(Extract, RejectsSpinSamples) {
  SampleSet s;
  s.vartype = Vartype::kSpin;
  EXPECT_THROW(extract_partial_graver(s, symmetric_box_encoding(1, 2), IntMatrix{{1}}), ParameterError);
}

TEST(GamaConfig, Validation) {
  GamaConfig c;
  EXPECT_NO_THROW(c.validate());
  c.fraction = 0;
  EXPECT_THROW(c.validate(), ParameterError);
  c.fraction = 1.5;
  EXPECT_THROW(c.validate(), ParameterError);
  c = GamaConfig{};
  c.kernel_shots = 0;
  EXPECT_THROW(c.validate(), ParameterError);
  c = GamaConfig{};
  c.widths = {2, 0};
  EXPECT_THROW(c.validate(), ParameterError);
}

TEST(CapitalBudgeting, ObjectiveValues) {
  const auto cb = testing::capital_budgeting_instance();
  const ObjectiveOracle f = capital_budgeting_objective(cb.mu, cb.sigma, cb.epsilon);
  EXPECT_NEAR(f(IntVector{1, 1, 0, 0, 1, 1, 0, 0}), testing::kCapitalBudgetingOptimum, 1e-12);
  EXPECT_NEAR(capital_brute_force(cb), testing::kCapitalBudgetingOptimum, 1e-12);
  EXPECT_THROW(capital_budgeting_objective({1}, {1, 2}, 0.1), DimensionError);
  EXPECT_THROW(capital_budgeting_objective({1}, {1}, 1.0), ParameterError);
}

TEST(GamaSolve, CapitalBudgetingReachesTheOptimum) {
  const auto cb = testing::capital_budgeting_instance();
  const ObjectiveOracle f = capital_budgeting_objective(cb.mu, cb.sigma, cb.epsilon);
  const GamaReport r = gama_solve(cb.ip, f, small_budget(3));
  EXPECT_NEAR(r.best_objective, capital_brute_force(cb), 1e-12);
  EXPECT_EQ(r.best, (IntVector{1, 1, 0, 0, 1, 1, 0, 0}));
  EXPECT_TRUE(cb.ip.is_feasible(r.best));
  EXPECT_EQ(r.basis_used, r.basis_size);
  EXPECT_EQ(r.runs.size(), r.seeds_found);
  for (const auto& run : r.runs) {
    EXPECT_TRUE(cb.ip.is_feasible(run.start));
    EXPECT_TRUE(cb.ip.is_feasible(run.x));
    for (std::size_t k = 1; k < run.trajectory.size(); ++k) EXPECT_LT(run.trajectory[k], run.trajectory[k - 1]);
  }
  std::vector<std::string> stages;
  for (const auto& [name, seconds] : r.timings) {
    stages.push_back(name);
    EXPECT_GE(seconds, 0);
  }
  EXPECT_EQ(stages, (std::vector<std::string>{"kernel_anneal", "extract", "seed_anneal", "augment"}));
}

TEST(GamaSolve, SmallBasisFractionStallsSomeSeeds) {
  const auto cb = testing::capital_budgeting_instance();
  const ObjectiveOracle f = capital_budgeting_objective(cb.mu, cb.sigma, cb.epsilon);
  GamaConfig c = small_budget(4);
  c.fraction = 0.05;
  const GamaReport r = gama_solve(cb.ip, f, c);
  EXPECT_LT(r.basis_used, r.basis_size);
  EXPECT_EQ(r.basis_used % 2, 0U);
  std::size_t stalled = 0;
  for (const auto& run : r.runs) {
    if (run.objective > testing::kCapitalBudgetingOptimum + 1e-9) ++stalled;
  }
  EXPECT_GT(stalled, 0U);
}

TEST(GamaSolve, ConvexSeparableObjectiveConvergesFromEverySeed) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1, 1}};
  ip.b = {6};
  ip.lower.assign(3, 0);
  ip.upper.assign(3, 4);
  const ObjectiveOracle f = [](std::span<const std::int64_t> x) {
    const double t[3] = {0.5, 3.2, 1.9};
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += (x[i] - t[i]) * (x[i] - t[i]);
    return s;
  };
  GamaConfig c = small_budget(5);
  c.width = 3;
  const GamaReport r = gama_solve(ip, f, c);
  ASSERT_TRUE(r.basis_complete);
  double best = std::numeric_limits<double>::infinity();
  testing::for_each_in_box(IntVector(3, 0), IntVector(3, 4), [&](const IntVector& x) {
    if (ip.is_feasible(x)) best = std::min(best, f(x));
  });
  ASSERT_GT(r.runs.size(), 1U);
  for (const auto& run : r.runs) EXPECT_DOUBLE_EQ(run.objective, best);
}

TEST(GamaSolve, InequalitiesUseHiddenSlacks) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1}};
  ip.b = {3};
  ip.inequality = {true};
  ip.lower.assign(2, 0);
  ip.upper.assign(2, 3);
  const ObjectiveOracle f = [](std::span<const std::int64_t> x) {
    EXPECT_EQ(x.size(), 2U);
    return -static_cast<double>(x[0]) - 2.0 * static_cast<double>(x[1]);
  };
  const GamaReport r = gama_solve(ip, f, small_budget(6));
  EXPECT_EQ(r.best, (IntVector{0, 3}));
  EXPECT_DOUBLE_EQ(r.best_objective, -6);
}

TEST(GamaSolve, InfeasibleSystemRaisesNoSeed) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{2, 2}};
  ip.b = {3};
  ip.lower.assign(2, 0);
  ip.upper.assign(2, 3);
  GamaConfig c = small_budget(7);
  c.seed_shots = 50;
  c.seed_rounds = 2;
  try {
    gama_solve(ip, [](std::span<const std::int64_t>) { return 0.0; }, c);
    FAIL() << "expected NoSeedError";
  } catch (const NoSeedError& e) {
    EXPECT_DOUBLE_EQ(e.best_residual(), 1.0);
  }
}

TEST(GamaSolve, MissingBoundsAreRejected) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1}};
  ip.b = {1};
  ip.lower.assign(2, 0);
  ip.upper = {1, std::nullopt};
  EXPECT_THROW(gama_solve(ip, [](std::span<const std::int64_t>) { return 0.0; }, small_budget(1)),
               UnboundedError);
}

TEST(GamaSolve, DeterministicAcrossThreadCounts) {
  const auto cb = testing::capital_budgeting_instance();
  const ObjectiveOracle f = capital_budgeting_objective(cb.mu, cb.sigma, cb.epsilon);
  GamaConfig c = small_budget(8);
  c.fraction = 0.3;
  c.max_seeds = 5;
  const GamaReport a = gama_solve(cb.ip, f, c);
  c.threads = 3;
  const GamaReport b = gama_solve(cb.ip, f, c);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.basis_used, b.basis_used);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  EXPECT_EQ(a.runs.size(), 5U);
  for (std::size_t k = 0; k < a.runs.size(); ++k) {
    EXPECT_EQ(a.runs[k].start, b.runs[k].start);
    EXPECT_EQ(a.runs[k].trajectory, b.runs[k].trajectory);
  }
  EXPECT_EQ(a.fraction_seed, b.fraction_seed);
  EXPECT_NE(a.fraction_seed, gama_solve(cb.ip, f, small_budget(9)).fraction_seed);
}

}  // namespace
}  // namespace quip
