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

#include <cmath>
#include <sstream>

#include "quip/common/errors.hpp"
#include "quip/qubo/io.hpp"
#include "quip/qubo/models.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

namespace quip {
namespace {

using testing::Gen;

QuboModel random_qubo(Gen& gen, std::size_t n, double density = 0.6) {
  QuboModel q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.add_linear(i, gen.rational(6));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gen.coin(density)) q.add_pair(i, j, gen.rational(6));
    }
  }
  q.add_offset(gen.rational(6));
  return q;
}

IsingModel random_ising(Gen& gen, std::size_t n, double density = 0.6) {
  IsingModel m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.add_field(i, gen.rational(6));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gen.coin(density)) m.add_coupling(i, j, gen.rational(6));
    }
  }
  m.add_offset(gen.rational(6));
  return m;
}

// Calls visit on every 0/1 configuration of length n.
template <typename Visit>
void for_each_bits(std::size_t n, Visit visit) {
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    Config x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::int8_t>((idx >> i) & 1U);
    visit(x);
  }
}

Graph cycle(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1});
  return g;
}

IsingModel triangle() {
  IsingModel m(3);
  m.add_coupling(0, 1, 1);
  m.add_coupling(1, 2, 1);
  m.add_coupling(0, 2, 1);
  return m;
}

TEST(QuboModel, MatrixSymmetrization) {
  const auto q = QuboModel::from_matrix({{1, 3}, {1, -2}}, Rational(5));
  EXPECT_EQ(q.pair(0, 1), Rational(4));
  EXPECT_EQ(q.entry(0, 1), Rational(2));
  EXPECT_EQ(q.entry(1, 0), Rational(2));
  EXPECT_EQ(q.entry(1, 1), Rational(-2));
  EXPECT_EQ(q.energy(Config{1, 1}), Rational(1 + 4 - 2 + 5));
  EXPECT_THROW(q.energy(Config{1}), DimensionError);
  EXPECT_THROW(q.energy(Config{1, 2}), ParameterError);
  EXPECT_THROW(QuboModel::from_matrix({{1, 2}}), DimensionError);
}

TEST(QuboModel, ZeroPairsAreDropped) {
  QuboModel q(2);
  q.add_pair(0, 1, 3);
  q.add_pair(1, 0, -3);
  EXPECT_TRUE(q.pairs().empty());
  IsingModel m(2);
  EXPECT_THROW(m.add_coupling(1, 1, 1), ParameterError);
  EXPECT_THROW(m.add_field(2, 1), DimensionError);
}

TEST(Conversion, ConstantModel) {
  QuboModel q(3);
  q.add_offset(5);
  const auto m = qubo_to_ising(q);
  EXPECT_TRUE(m.couplings().empty());
  for (const auto& h : m.h()) EXPECT_TRUE(h.is_zero());
  EXPECT_EQ(m.offset(), Rational(5));
  EXPECT_EQ(ising_to_qubo(IsingModel(4)), QuboModel(4));
}

TEST(Conversion, SingleVariable) {
  QuboModel q(1);
  q.add_linear(0, Rational(7, 3));
  const auto m = qubo_to_ising(q);
  EXPECT_EQ(m.h()[0], Rational(7, 6));
  EXPECT_EQ(m.offset(), Rational(7, 6));
}

TEST(Conversion, FerromagneticPair) {
  IsingModel m(2);
  m.add_coupling(0, 1, -1);
  const auto q = ising_to_qubo(m);
  EXPECT_EQ(q.entry(0, 0), Rational(2));
  EXPECT_EQ(q.entry(1, 1), Rational(2));
  EXPECT_EQ(q.pair(0, 1), Rational(-4));
  EXPECT_EQ(q.offset(), Rational(-1));
  for_each_bits(2, [&](const Config& x) { EXPECT_EQ(q.energy(x), m.energy(bits_to_spins(x))); });
}

TEST(Conversion, EnergiesAgreeExhaustively) {
  Gen gen(101);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 9));
    const auto q = random_qubo(gen, n);
    const auto m = qubo_to_ising(q);
    for_each_bits(n, [&](const Config& x) { ASSERT_EQ(q.energy(x), m.energy(bits_to_spins(x))); });
  }
}

TEST(Conversion, RoundTripsAreIdentity) {
  Gen gen(102);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 8));
    const auto m = random_ising(gen, n);
    EXPECT_EQ(qubo_to_ising(ising_to_qubo(m)), m);
    const auto q = random_qubo(gen, n);
    EXPECT_EQ(ising_to_qubo(qubo_to_ising(q)), q);
  }
}

TEST(MaxCut, SingleEdgeAndTriangle) {
  const Graph edge{2, {{0, 1, 1}}};
  const auto r = brute_force(maxcut_to_ising(edge));
  EXPECT_EQ(r.energy, Rational(-1));
  EXPECT_EQ(r.argmins, (std::vector<Config>{{-1, 1}, {1, -1}}));
  EXPECT_EQ(cut_value(edge, r.argmins[0]), Rational(1));

  const Graph tri = cycle(3);
  const auto t = brute_force(maxcut_to_ising(tri));
  EXPECT_EQ(t.argmins.size(), 6u);
  for (const auto& s : t.argmins) EXPECT_EQ(cut_value(tri, s), Rational(2));
  EXPECT_EQ((Rational(3) - t.energy) / Rational(2), Rational(2));
}

TEST(MaxCut, FiveCycle) {
  const auto r = brute_force(maxcut_to_ising(cycle(5)));
  EXPECT_EQ((Rational(5) - r.energy) / Rational(2), Rational(4));
}

TEST(MaxCut, GroundStatesAreMaximumCuts) {
  Gen gen(103);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 10));
    Graph g{n, {}};
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (gen.coin(0.5)) g.edges.push_back({u, v, Rational(gen.integer(1, 5))});
      }
    }
    Rational total, best;
    for (const auto& e : g.edges) total += e.weight;
    std::vector<Config> best_cuts;
    for_each_bits(n, [&](const Config& x) {
      const auto s = bits_to_spins(x);
      const Rational c = cut_value(g, s);
      if (best_cuts.empty() || c > best) {
        best = c;
        best_cuts = {s};
      } else if (c == best) {
        best_cuts.push_back(s);
      }
    });
    std::sort(best_cuts.begin(), best_cuts.end());
    const auto r = brute_force(maxcut_to_ising(g));
    EXPECT_EQ(r.argmins, best_cuts);
    EXPECT_EQ((total - r.energy) / Rational(2), best);
  }
}

TEST(QuboToIlp, Shapes) {
  QuboModel diag(3);
  diag.add_linear(0, 2);
  diag.add_linear(2, -1);
  const auto a = qubo_to_ilp(diag);
  EXPECT_TRUE(a.products.empty());
  EXPECT_EQ(a.system.row_count(), 0u);
  EXPECT_EQ(a.system.objective.linear, (std::vector<Rational>{2, 0, -1}));

  QuboModel one(3);
  one.add_pair(0, 2, 5);
  const auto b = qubo_to_ilp(one);
  ASSERT_EQ(b.products.size(), 1u);
  EXPECT_EQ(b.products[0], (PairKey{0, 2}));
  EXPECT_EQ(b.system.row_count(), 3u);
  EXPECT_EQ(b.system.variable_count(), 4u);
}

TEST(QuboToIlp, OptimumMatchesQubo) {
  Gen gen(104);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_qubo(gen, 4, 0.8);
    const auto ilp = qubo_to_ilp(q);
    const std::size_t total = ilp.system.variable_count();
    bool found = false;
    Rational best;
    for_each_bits(total, [&](const Config& z) {
      IntVector x(z.begin(), z.end());
      if (!ilp.system.is_feasible(x)) return;
      const Rational v = ilp.system.objective.evaluate(x) + ilp.offset;
      EXPECT_EQ(v, q.energy(Config(z.begin(), z.begin() + 4)));
      if (!found || v < best) best = v;
      found = true;
    });
    ASSERT_TRUE(found);
    EXPECT_EQ(best, brute_force(q).energy);
  }
}

TEST(ChainDuplicate, SingleCopyIsIdentity) {
  const auto m = triangle();
  EXPECT_EQ(chain_duplicate(m, 1, 1, Rational(3)), m);
  EXPECT_THROW(chain_duplicate(m, 0, 2, Rational(0)), ParameterError);
  EXPECT_THROW(chain_duplicate(m, 0, 2, Rational(-1)), ParameterError);
  EXPECT_THROW(chain_duplicate(m, 0, 0, Rational(1)), ParameterError);
}

TEST(ChainDuplicate, ConsistentAssignmentsKeepEnergy) {
  Gen gen(105);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 6));
    const auto m = random_ising(gen, n, 0.8);
    const std::size_t var = static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(n) - 1));
    const std::size_t copies = static_cast<std::size_t>(gen.integer(1, 3));
    const auto d = chain_duplicate(m, var, copies, Rational(gen.integer(1, 4)));
    ASSERT_EQ(d.size(), n + copies - 1);
    const auto chain = duplicate_chain(n, var, copies);
    for_each_bits(n, [&](const Config& x) {
      const auto s = bits_to_spins(x);
      Config t(s);
      t.resize(d.size());
      for (auto c : chain) t[c] = s[var];
      EXPECT_EQ(d.energy(t), m.energy(s));
    });
  }
}

TEST(ChainDuplicate, TriangleGroundStates) {
  const auto m = triangle();
  const auto original = brute_force(m);
  const auto strong = brute_force(chain_duplicate(m, 0, 2, Rational(2)));
  EXPECT_EQ(strong.energy, original.energy);
  std::vector<Config> projected;
  for (const auto& s : strong.argmins) {
    if (s[0] == s[3]) projected.push_back(Config(s.begin(), s.begin() + 3));
  }
  std::sort(projected.begin(), projected.end());
  EXPECT_EQ(projected, original.argmins);

  const auto weak = brute_force(chain_duplicate(m, 0, 2, Rational(1, 10)));
  std::size_t broken = 0;
  for (const auto& s : weak.argmins) broken += s[0] != s[3] ? 1 : 0;
  EXPECT_TRUE(broken > 0);
}

TEST(ChainDuplicate, StrongChainsNeverBreakInGroundStates) {
  Gen gen(106);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 7));
    const auto m = random_ising(gen, n, 0.7);
    const std::size_t var = static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(n) - 1));
    Rational incident = m.h()[var].abs();
    for (const auto& [key, J] : m.couplings()) {
      if (key.first == var || key.second == var) incident += J.abs();
    }
    const auto d = chain_duplicate(m, var, 3, incident + Rational(1, 100));
    const auto chain = duplicate_chain(n, var, 3);
    const auto r = brute_force(d);
    for (const auto& s : r.argmins) {
      for (auto c : chain) EXPECT_EQ(s[c], s[var]);
    }
    EXPECT_EQ(r.energy, brute_force(m).energy);
  }
}

TEST(BruteForce, TrivialCases) {
  QuboModel empty(0);
  empty.add_offset(Rational(3, 2));
  const auto r = brute_force(empty);
  EXPECT_EQ(r.energy, Rational(3, 2));
  EXPECT_EQ(r.argmins, std::vector<Config>{Config{}});

  IsingModel ferro(3);
  ferro.add_coupling(0, 1, -1);
  ferro.add_coupling(1, 2, -1);
  ferro.add_coupling(0, 2, -1);
  const auto f = brute_force(ferro);
  EXPECT_EQ(f.energy, Rational(-3));
  EXPECT_EQ(f.argmins, (std::vector<Config>{{-1, -1, -1}, {1, 1, 1}}));

  Gen gen(1);
  BruteForceOptions hot;
  hot.beta = 0;
  EXPECT_DOUBLE_EQ(brute_force(random_ising(gen, 7), hot).partition, 128.0);
  EXPECT_THROW(brute_force(QuboModel(25)), ComputationLimitError);
}

TEST(BruteForce, MatchesNaiveEnumeration) {
  Gen gen(107);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 12));
    auto q = random_qubo(gen, n);
    // Integer coefficients in a small range make ties likely.
    if (trial % 2 == 0) {
      q = QuboModel(n);
      for (std::size_t i = 0; i < n; ++i) {
        q.add_linear(i, Rational(gen.integer(-2, 2)));
        for (std::size_t j = i + 1; j < n; ++j) q.add_pair(i, j, Rational(gen.integer(-1, 1)));
      }
    }
    Rational best;
    std::vector<Config> argmins;
    double z = 0;
    for_each_bits(n, [&](const Config& x) {
      const Rational e = q.energy(x);
      z += std::exp(-0.5 * e.to_double());
      if (argmins.empty() || e < best) {
        best = e;
        argmins = {x};
      } else if (e == best) {
        argmins.push_back(x);
      }
    });
    std::sort(argmins.begin(), argmins.end());
    BruteForceOptions opts;
    opts.beta = 0.5;
    const auto r = brute_force(q, opts);
    EXPECT_EQ(r.energy, best);
    EXPECT_EQ(r.argmins, argmins);
    EXPECT_NEAR(r.partition, z, 1e-9 * z);
  }
}

TEST(BruteForce, ThreadCountDoesNotMatter) {
  Gen gen(108);
  const auto q = random_qubo(gen, 16);
  BruteForceOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = brute_force(q, one), b = brute_force(q, four);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.argmins, b.argmins);
  EXPECT_EQ(a.partition, b.partition);
}

TEST(BruteForce, TruncatesToSmallestArgmins) {
  BruteForceOptions opts;
  opts.max_argmins = 3;
  const auto r = brute_force(QuboModel(10), opts);
  EXPECT_TRUE(r.argmins_truncated);
  ASSERT_EQ(r.argmins.size(), 3u);
  EXPECT_EQ(r.argmins[0], Config(10, 0));
}

TEST(ModelIo, QuboRoundTrip) {
  Gen gen(109);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_qubo(gen, static_cast<std::size_t>(gen.integer(0, 7)));
    const std::string text = to_text(q);
    std::istringstream in(text);
    const auto back = read_qubo(in);
    EXPECT_EQ(back, q);
    EXPECT_EQ(to_text(back), text);
    EXPECT_EQ(model_digest(back), model_digest(q));
  }
}

TEST(ModelIo, IsingRoundTrip) {
  Gen gen(110);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_ising(gen, static_cast<std::size_t>(gen.integer(0, 7)));
    std::istringstream in(to_text(m));
    EXPECT_EQ(read_ising(in), m);
  }
}

TEST(ModelIo, QuboFormat) {
  std::istringstream in("c comment\np qubo 3 3\noffset -1/2\n0 0 1\n0 2 -3\n2 2 0.5\n");
  const auto q = read_qubo(in);
  EXPECT_EQ(q.offset(), Rational(-1, 2));
  EXPECT_EQ(q.pair(0, 2), Rational(-3));
  EXPECT_EQ(q.linear()[2], Rational(1, 2));
  EXPECT_EQ(to_text(q), "p qubo 3 3\noffset -1/2\n0 0 1\n0 2 -3\n2 2 1/2\n");
}

TEST(ModelIo, Rejections) {
  auto qubo_error = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_qubo(in);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(qubo_error("").find("empty"), std::string::npos);
  EXPECT_NE(qubo_error("p qubo 2 2\n0 0 1\n").find("found 1"), std::string::npos);
  EXPECT_NE(qubo_error("p qubo 2 1\n0 0 1 9\n").find("2:7"), std::string::npos);
  EXPECT_NE(qubo_error("p qubo 2 1\n1 0 1\n").find("i <= j"), std::string::npos);
  EXPECT_NE(qubo_error("p qubo 2 1\n0 2 1\n").find("out of range"), std::string::npos);
  EXPECT_NE(qubo_error("p qubo 2 1\n0 1 x\n").find("invalid number"), std::string::npos);
  EXPECT_NE(qubo_error("p ising 2 0\n").find("expected format"), std::string::npos);
  std::istringstream self("p ising 2 1\nJ 1 1 2\n");
  EXPECT_THROW(read_ising(self), ParseError);
}

TEST(ModelIo, Dimacs) {
  std::istringstream in("c petersen fragment\np edge 3 2\ne 1 2\ne 2 3 5/2\n");
  const auto g = read_dimacs(in);
  EXPECT_EQ(g.vertex_count, 3u);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.edges[1], (Edge{1, 2, Rational(5, 2)}));
  std::ostringstream out;
  write_dimacs(out, g);
  EXPECT_EQ(out.str(), "p edge 3 2\ne 1 2\ne 2 3 5/2\n");
  std::istringstream zero("p edge 2 1\ne 0 1\n");
  EXPECT_THROW(read_dimacs(zero), ParseError);
  std::istringstream loop("p edge 2 1\ne 1 1\n");
  EXPECT_THROW(read_dimacs(loop), ParseError);
}

}  // namespace
}  // namespace quip
