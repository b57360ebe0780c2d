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

#include "quip/common/errors.hpp"
#include "quip/reform/reform.hpp"
#include "support/gen.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace quip {
namespace {

using testing::Gen;

std::vector<std::int64_t> k_of(std::int64_t lo, std::int64_t hi, const EncodingScheme& s) {
  return make_encoding(lo, hi, s).k;
}

template <typename Visit>
void for_each_bits(std::size_t n, Visit visit) {
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    Config x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::int8_t>((idx >> i) & 1U);
    visit(x);
  }
}

Rational eval_bits(const SparsePolynomial& f, std::span<const std::int8_t> bits) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < f.arity(); ++i) v.emplace_back(bits[i]);
  return f.evaluate(v);
}

Rational eval_int(const SparsePolynomial& f, std::span<const std::int64_t> x) {
  std::vector<Rational> v;
  for (auto e : x) v.emplace_back(static_cast<long long>(e));
  return f.evaluate(v);
}

SparsePolynomial random_polynomial(Gen& gen, std::size_t arity, std::size_t terms, unsigned degree) {
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(arity);
    const unsigned d = static_cast<unsigned>(gen.integer(0, degree));
    for (unsigned e = 0; e < d; ++e) m[static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(arity) - 1))] += 1;
    t.push_back({m, Rational(gen.integer(-5, 5))});
  }
  return SparsePolynomial::from_terms(arity, std::move(t));
}

TEST(Encoding, Examples) {
  EXPECT_EQ(k_of(0, 7, EncodingScheme::binary()), (std::vector<std::int64_t>{1, 2, 4}));
  EXPECT_EQ(k_of(0, 8, EncodingScheme::binary()), (std::vector<std::int64_t>{1, 2, 4, 1}));
  EXPECT_EQ(k_of(0, 8, EncodingScheme::bounded(4)), (std::vector<std::int64_t>{1, 2, 4, 1}));
  EXPECT_EQ(k_of(0, 20, EncodingScheme::bounded(4)), (std::vector<std::int64_t>{1, 2, 4, 4, 4, 4, 1}));
  EXPECT_EQ(k_of(0, 3, EncodingScheme::unary()), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(k_of(-1, 2, EncodingScheme::binary()), (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(k_of(4, 4, EncodingScheme::binary()).empty());
  EXPECT_THROW(make_encoding(0, 5, EncodingScheme::bounded(0)), ParameterError);
  EXPECT_THROW(make_encoding(3, 2, EncodingScheme::unary()), ParameterError);
  EXPECT_THROW(EncodingScheme::from_name("gray"), ParameterError);
  EXPECT_EQ(EncodingScheme::from_name("bounded", 3).mu, 3);
}

TEST(Encoding, SoundForEveryScheme) {
  for (std::int64_t lo : {-5, 0, 3}) {
    for (std::int64_t range = 0; range <= 40; ++range) {
      std::vector<EncodingScheme> schemes{EncodingScheme::binary(), EncodingScheme::unary()};
      for (std::int64_t mu = 1; mu <= 9; ++mu) schemes.push_back(EncodingScheme::bounded(mu));
      for (const auto& s : schemes) {
        const auto enc = make_encoding(lo, lo + range, s);
        std::int64_t sum = 0;
        for (auto k : enc.k) {
          EXPECT_GE(k, 1);
          sum += k;
        }
        EXPECT_EQ(sum, range);
        if (s.kind == EncodingScheme::Kind::kBounded) {
          const std::int64_t cap = std::max<std::int64_t>(s.mu, std::int64_t{1} << (63 - __builtin_clzll(s.mu)));
          for (auto k : enc.k) EXPECT_LE(k, cap) << s.mu << " " << range;
        }
        for (std::int64_t y = lo; y <= lo + range; ++y) EXPECT_EQ(enc.decode(enc.encode(y)), y);
        if (enc.width() <= 12) {
          for_each_bits(enc.width(), [&](const Config& x) {
            const auto y = enc.decode(x);
            EXPECT_TRUE(y >= lo && y <= lo + range);
          });
        }
        EXPECT_THROW(enc.encode(lo + range + 1), ParameterError);
      }
    }
  }
}

TEST(Binarize, AlreadyBinaryIsUnchanged) {
  const auto ip = testing::set_partition_instance();
  const auto bin = binarize(ip, EncodingScheme::binary());
  EXPECT_EQ(bin.system.A, ip.A);
  EXPECT_EQ(bin.system.b, ip.b);
  EXPECT_EQ(bin.system.objective.linear, ip.objective.linear);
  EXPECT_TRUE(bin.objective_offset.is_zero());
}

TEST(Binarize, ShiftedRange) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1}};
  ip.b = {0};
  ip.lower = {-1};
  ip.upper = {2};
  const auto bin = binarize(ip, EncodingScheme::binary());
  std::vector<IntVector> feasible;
  for_each_bits(2, [&](const Config& x) {
    IntVector X(x.begin(), x.end());
    if (bin.system.A.apply(X) == bin.system.b) feasible.push_back(bin.encoding.decode(x));
  });
  EXPECT_EQ(feasible, std::vector<IntVector>{IntVector{0}});
}

TEST(Binarize, StackedEncodingMatrices) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 2, 1}};
  ip.b = {0};
  ip.lower.assign(3, -1);
  ip.upper.assign(3, 2);
  const auto bin = binarize(ip, EncodingScheme::binary());
  EXPECT_EQ(bin.encoding.E(), (IntMatrix{{1, 2, 0, 0, 0, 0}, {0, 0, 1, 2, 0, 0}, {0, 0, 0, 0, 1, 2}}));
  EXPECT_EQ(bin.encoding.L(), (IntVector{-1, -1, -1}));
  EXPECT_EQ(bin.system.A, (IntMatrix{{1, 2, 2, 4, 1, 2}}));
  EXPECT_EQ(bin.system.b, (IntVector{4}));
  ip.upper[1] = std::nullopt;
  EXPECT_THROW(binarize(ip, EncodingScheme::binary()), UnboundedError);
}

TEST(Binarize, ObjectivesAreSubstitutedExactly) {
  Gen gen(201);
  for (int trial = 0; trial < 20; ++trial) {
    ConstraintSystem ip;
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    ip.A = IntMatrix(1, n);
    for (std::size_t j = 0; j < n; ++j) ip.A(0, j) = gen.integer(-3, 3);
    ip.b = {gen.integer(-3, 3)};
    for (std::size_t j = 0; j < n; ++j) {
      const auto lo = gen.integer(-3, 2);
      ip.lower.emplace_back(lo);
      ip.upper.emplace_back(lo + gen.integer(0, 4));
    }
    const bool poly = trial % 2 == 0;
    if (poly) {
      ip.objective = Objective::make_polynomial(random_polynomial(gen, n, 5, 3));
    } else {
      ip.objective = Objective::make_linear(gen.vector(n, -4, 4));
    }
    const auto bin = binarize(ip, trial % 3 == 0 ? EncodingScheme::unary() : EncodingScheme::binary());
    const std::size_t bits = bin.encoding.bit_count();
    ASSERT_LE(bits, 14u);
    for_each_bits(bits, [&](const Config& X) {
      const IntVector x = bin.encoding.decode(X);
      const IntVector Xv(X.begin(), X.end());
      EXPECT_EQ(ip.A.apply(x)[0] - ip.b[0], bin.system.A.apply(Xv)[0] - bin.system.b[0]);
      const Rational original = ip.objective.evaluate(x);
      const Rational encoded = bin.system.objective.evaluate(Xv) + bin.objective_offset;
      EXPECT_EQ(original, encoded);
    });
  }
}

TEST(Quadratize, QuadraticIsUnchanged) {
  const SparsePolynomial f =
      SparsePolynomial::variable(3, 0) * SparsePolynomial::variable(3, 1) + SparsePolynomial::variable(3, 2);
  const auto q = quadratize(f);
  EXPECT_TRUE(q.ancillas.empty());
  EXPECT_EQ(q.objective, f);
}

TEST(Quadratize, CubicMonomial) {
  const auto x = [](std::size_t i) { return SparsePolynomial::variable(3, i); };
  const auto q = quadratize(x(0) * x(1) * x(2));
  ASSERT_EQ(q.ancillas.size(), 1u);
  EXPECT_EQ(q.ancillas[0].index, 3u);
  EXPECT_EQ(q.ancillas[0].i, 0u);
  EXPECT_EQ(q.ancillas[0].j, 1u);
  EXPECT_EQ(q.objective, SparsePolynomial::variable(4, 2) * SparsePolynomial::variable(4, 3));
  for_each_bits(4, [&](const Config& v) {
    const bool consistent = v[3] == v[0] * v[1];
    const Rational h = eval_bits(q.penalties[0], v);
    if (consistent) {
      EXPECT_EQ(eval_bits(q.objective, v), Rational(v[0] * v[1] * v[2]));
      EXPECT_TRUE(h.is_zero());
    } else {
      EXPECT_TRUE(h > Rational(0));
    }
  });
}

TEST(Quadratize, RosenbergPenaltyValues) {
  const auto H = rosenberg_penalty(3, 0, 1, 2);
  for_each_bits(3, [&](const Config& v) {
    const Rational h = eval_bits(H, v);
    if (v[2] == v[0] * v[1]) {
      EXPECT_TRUE(h.is_zero());
    } else {
      EXPECT_TRUE(h >= Rational(1));
    }
  });
}

TEST(Quadratize, VerbatimCrossTermBreaksTheEqualityCondition) {
  // 3a + x_i x_j - 2 b x_i - 2 a x_j with a = x_ij and b = x_ji distinct.
  const std::size_t xi = 0, xj = 1, a = 2, b = 3;
  auto mono = [](std::initializer_list<std::size_t> vars) {
    Monomial m(4);
    for (auto v : vars) m[v] = 1;
    return m;
  };
  const auto H = SparsePolynomial::from_terms(
      4, {{mono({a}), 3}, {mono({xi, xj}), 1}, {mono({b, xi}), -2}, {mono({a, xj}), -2}});
  bool violated = false;
  for_each_bits(4, [&](const Config& v) {
    const bool consistent = v[a] == v[xi] * v[xj];
    const Rational h = eval_bits(H, v);
    if (consistent != h.is_zero() || h < Rational(0)) violated = true;
  });
  EXPECT_TRUE(violated);
}

TEST(Quadratize, PreservesMinimum) {
  Gen gen(202);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(3, 6));
    const auto f = random_polynomial(gen, n, static_cast<std::size_t>(gen.integer(2, 7)), 4);
    const auto q = quadratize(f);
    const std::size_t total = q.objective.arity();
    if (total > 14) continue;
    EXPECT_LE(q.objective.total_degree(), 2u);
    for (const auto& t : q.objective.terms()) {
      for (std::size_t v = 0; v < total; ++v) EXPECT_LE(t.monomial[v], 1u);
    }
    Rational best_original, best_consistent, best_total;
    bool first = true, first_total = true;
    const SparsePolynomial full = q.total();
    for_each_bits(total, [&](const Config& v) {
      bool consistent = true;
      for (const auto& a : q.ancillas) consistent = consistent && v[a.index] == v[a.i] * v[a.j];
      const Rational t = eval_bits(full, v);
      if (first_total || t < best_total) best_total = t;
      first_total = false;
      if (!consistent) return;
      const Rational orig = eval_bits(f, v);
      EXPECT_EQ(eval_bits(q.objective, v), orig);
      if (first || orig < best_original) best_original = orig;
      first = false;
    });
    EXPECT_EQ(best_total, best_original);
  }
}

TEST(Slack, Examples) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1}};
  ip.b = {3};
  ip.lower.assign(2, 0);
  ip.upper.assign(2, 1);
  ip.inequality = {true};
  auto eq = inequality_to_equality(ip);
  EXPECT_EQ(eq.A, (IntMatrix{{1, 1, 1}}));
  EXPECT_EQ(eq.upper[2], 3);
  EXPECT_EQ(eq.lower[2], 0);
  EXPECT_FALSE(eq.has_inequalities());

  ip.A = IntMatrix{{8, 2}};
  ip.b = {17};
  ip.upper = {2, 8};
  eq = inequality_to_equality(ip);
  EXPECT_EQ(eq.upper[2], 17);

  ip.inequality = {false};
  EXPECT_EQ(inequality_to_equality(ip).A, ip.A);

  ip.inequality = {true};
  ip.b = {-1};
  EXPECT_THROW(inequality_to_equality(ip), InfeasibleError);
  ip.b = {3};
  ip.lower[0] = std::nullopt;
  EXPECT_THROW(inequality_to_equality(ip), UnboundedError);
}

TEST(Slack, FeasibleSetIsPreserved) {
  Gen gen(203);
  for (int trial = 0; trial < 30; ++trial) {
    ConstraintSystem ip;
    ip.A = IntMatrix(2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) ip.A(r, c) = gen.integer(-2, 3);
    }
    ip.b = gen.vector(2, 0, 6);
    ip.lower.assign(3, 0);
    ip.upper.assign(3, 2);
    ip.inequality = {true, gen.coin()};
    const auto eq = inequality_to_equality(ip);
    std::vector<IntVector> direct, projected;
    testing::for_each_in_box(IntVector(3, 0), IntVector(3, 2), [&](const IntVector& x) {
      if (ip.is_feasible(x)) direct.push_back(x);
    });
    IntVector lo(eq.variable_count(), 0), hi;
    for (const auto& u : eq.upper) hi.push_back(*u);
    testing::for_each_in_box(lo, hi, [&](const IntVector& x) {
      if (eq.is_feasible(x)) projected.emplace_back(x.begin(), x.begin() + 3);
    });
    std::sort(projected.begin(), projected.end());
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(projected, direct);
  }
}

TEST(PenaltyBound, Values) {
  const auto w = penalty_bound(testing::set_partition_instance());
  EXPECT_EQ(w.abs_sum_bound, Rational(48));
  EXPECT_EQ(w.rho, Rational(48));
  EXPECT_EQ(w.delta_hb_max, Rational(47));
  EXPECT_EQ(w.delta_ha_min, Rational(1));

  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1}};
  ip.b = {1};
  ip.lower.assign(2, 0);
  ip.upper.assign(2, 1);
  ip.objective = Objective::make_linear(IntVector{0, 0});
  EXPECT_EQ(penalty_bound(ip).rho, Rational(1));
  ip.objective = Objective::make_linear(IntVector{1, -1});
  EXPECT_EQ(penalty_bound(ip).delta_hb_max, Rational(1));
  EXPECT_EQ(penalty_bound(ip).rho, Rational(3));
  ip.upper[1] = 2;
  EXPECT_THROW(penalty_bound(ip), PreconditionError);
}

TEST(CompileQubo, EnergyIdentity) {
  Gen gen(204);
  for (int trial = 0; trial < 30; ++trial) {
    ConstraintSystem ip;
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    ip.A = IntMatrix(2, n);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < n; ++c) ip.A(r, c) = gen.integer(-2, 2);
    }
    ip.b = gen.vector(2, 0, 3);
    for (std::size_t j = 0; j < n; ++j) {
      ip.lower.emplace_back(gen.integer(-1, 0));
      ip.upper.emplace_back(gen.integer(1, 3));
    }
    ip.inequality = {gen.coin(), true};
    ip.objective = trial % 2 == 0 ? Objective::make_polynomial(random_polynomial(gen, n, 4, 3))
                                  : Objective::make_linear(gen.vector(n, -3, 3));
    CompiledQubo cq;
    try {
      cq = compile_qubo(ip, trial % 3 == 0 ? EncodingScheme::bounded(2) : EncodingScheme::binary());
    } catch (const InfeasibleError&) {
      continue;
    }
    for (int probe = 0; probe < 200; ++probe) {
      Config X(cq.qubo.size());
      for (auto& v : X) v = static_cast<std::int8_t>(gen.integer(0, 1));
      const IntVector x = cq.decode(X);
      ASSERT_EQ(x.size(), n);
      // Objective term: the quadratized objective equals f(x) on consistent ancillas.
      Config consistent = X;
      for (const auto& a : cq.ancillas) consistent[a.index] = consistent[a.i] * consistent[a.j];
      EXPECT_EQ(eval_bits(cq.objective, consistent), ip.objective.evaluate(x));
      EXPECT_EQ(cq.qubo.energy(X), eval_bits(cq.objective, X) + cq.penalty(X));
      EXPECT_EQ(cq.qubo.energy(consistent) - eval_bits(cq.objective, consistent), cq.penalty(consistent));
      if (cq.feasible(X)) EXPECT_TRUE(ip.is_feasible(x));
    }
  }
}

TEST(CompileQubo, SetPartitionMinimizersAreOptimal) {
  const auto ip = testing::set_partition_instance();
  const auto cq = compile_qubo(ip, EncodingScheme::binary());
  EXPECT_EQ(cq.weights.rho, Rational(48));
  EXPECT_EQ(cq.qubo.size(), 11u);
  const auto r = brute_force(cq.qubo);
  EXPECT_EQ(r.energy, Rational(5));
  ASSERT_EQ(r.argmins.size(), 2u);
  for (const auto& X : r.argmins) {
    EXPECT_TRUE(cq.feasible(X));
    EXPECT_EQ(ip.objective.evaluate(cq.decode(X)), Rational(5));
  }
}

TEST(CompileQubo, UnconstrainedLinearIsDiagonal) {
  ConstraintSystem ip;
  ip.A = IntMatrix(0, 2);
  ip.lower = {0, 0};
  ip.upper = {3, 1};
  ip.objective = Objective::make_linear(IntVector{2, -5});
  const auto cq = compile_qubo(ip, EncodingScheme::binary());
  EXPECT_TRUE(cq.qubo.pairs().empty());
  EXPECT_EQ(cq.qubo.linear(), (std::vector<Rational>{2, 4, -5}));
}

TEST(CompileQubo, InfeasibleSystemHasNoZeroPenaltyState) {
  ConstraintSystem ip;
  ip.A = IntMatrix{{1, 1}, {1, 1}};
  ip.b = {1, 2};
  ip.lower.assign(2, 0);
  ip.upper.assign(2, 1);
  ip.objective = Objective::make_linear(IntVector{1, 1});
  const auto cq = compile_qubo(ip, EncodingScheme::binary());
  bool any_zero = false;
  for_each_bits(cq.qubo.size(), [&](const Config& X) { any_zero = any_zero || cq.penalty(X).is_zero(); });
  EXPECT_FALSE(any_zero);
  EXPECT_TRUE(brute_force(cq.qubo).energy > Rational(0));
}

TEST(CompileQubo, ArgminDecodesToIpOptimum) {
  Gen gen(205);
  int checked = 0;
  for (int trial = 0; checked < 25 && trial < 200; ++trial) {
    ConstraintSystem ip;
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    ip.A = IntMatrix(1, n);
    for (std::size_t c = 0; c < n; ++c) ip.A(0, c) = gen.integer(0, 3);
    ip.b = {gen.integer(1, 6)};
    ip.lower.assign(n, 0);
    ip.upper.assign(n, 3);
    const IntVector c = gen.vector(n, -4, 4);
    ip.objective = Objective::make_linear(c);
    const auto opt = testing::brute_force_ip(ip.A, ip.b, c, IntVector(n, 0), IntVector(n, 3));
    if (!opt.argmin) continue;
    const auto cq = compile_qubo(ip, EncodingScheme::binary());
    if (cq.qubo.size() > 12) continue;
    ++checked;
    const auto r = brute_force(cq.qubo);
    for (const auto& X : r.argmins) {
      const IntVector x = cq.decode(X);
      EXPECT_TRUE(ip.is_feasible(x));
      EXPECT_EQ(ip.objective.evaluate(x), Rational(static_cast<long long>(opt.value)));
    }
  }
  EXPECT_EQ(checked, 25);
}

}  // namespace
}  // namespace quip
