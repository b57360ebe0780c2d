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

#include "quip/algebra/poly_io.hpp"
#include "quip/algebra/polynomial.hpp"
#include "quip/common/errors.hpp"
#include "support/gen.hpp"

namespace quip {
namespace {

using testing::Gen;

SparsePolynomial P(std::string_view text, const char* vars = "x,y,z") {
  return parse_polynomial(text, VariableNames::parse_list(vars));
}

// Term-by-term expansion with linear-search combining; shares nothing with
// the library's multiplication.
std::vector<Term> naive_product(const SparsePolynomial& a, const SparsePolynomial& b) {
  std::vector<Term> out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::vector<Monomial::Exponent> e(a.arity());
      for (std::size_t i = 0; i < a.arity(); ++i) e[i] = s.monomial[i] + t.monomial[i];
      Monomial m(e);
      Rational c = s.coefficient * t.coefficient;
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const Term& x) { return x.monomial == m; });
      if (it == out.end()) {
        out.push_back({m, c});
      } else {
        it->coefficient += c;
      }
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coefficient.is_zero(); });
  return out;
}

bool same_terms(std::vector<Term> a, std::vector<Term> b) {
  auto by_monomial = [](const Term& x, const Term& y) { return x.monomial < y.monomial; };
  std::sort(a.begin(), a.end(), by_monomial);
  std::sort(b.begin(), b.end(), by_monomial);
  return a == b;
}

std::vector<MonomialOrder> all_orders(std::size_t n, Gen& gen) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen.engine());
  return {MonomialOrder::lex(n),
          MonomialOrder::grlex(n),
          MonomialOrder::grevlex(n),
          MonomialOrder::lex(perm),
          MonomialOrder::grevlex(perm),
          MonomialOrder::cost_weighted(gen.vector(n, 0, 5), MonomialOrder::grevlex(perm)),
          MonomialOrder::cost_weighted(gen.vector(n, 0, 2), MonomialOrder::lex(n))};
}

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_THROW(Rational(1, 0), ParameterError);
  EXPECT_THROW(Rational(1) / Rational(0), ParameterError);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse("-1e-3"), Rational(-1, 1000));
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, Int64RoundTrip) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ(Rational(static_cast<long long>(big)).to_int64(), big);
  EXPECT_THROW(Rational(1, 2).to_int64(), ParameterError);
  EXPECT_DOUBLE_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(Rational::from_double(0.75), Rational(3, 4));
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = gen.rational(50), b = gen.rational(50), c = gen.rational(50);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(MonomialOrder, LexWorkedExample) {
  // x > y^2 under lex with x > y.
  auto lex = MonomialOrder::lex(2);
  EXPECT_EQ(lex.compare(Monomial{1, 0}, Monomial{0, 2}), std::strong_ordering::greater);
  EXPECT_EQ(lex.compare(Monomial{0, 1}, Monomial{0, 2}), std::strong_ordering::less);
  EXPECT_EQ(lex.compare(Monomial{0, 0}, Monomial{0, 1}), std::strong_ordering::less);
}

TEST(MonomialOrder, IdentityIsEqual) {
  Gen gen(3);
  for (const auto& order : all_orders(3, gen)) {
    Monomial a{2, 0, 5};
    EXPECT_EQ(order.compare(a, a), std::strong_ordering::equal) << order.name();
  }
}

TEST(MonomialOrder, GrlexTieBreak) {
  auto grlex = MonomialOrder::grlex(2);
  EXPECT_EQ(grlex.compare(Monomial{1, 1}, Monomial{2, 0}), std::strong_ordering::less);
  // y^3 < xy^2 < x^2y < x^3
  std::vector<Monomial> chain{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    EXPECT_EQ(grlex.compare(chain[i], chain[i + 1]), std::strong_ordering::less);
  }
}

TEST(MonomialOrder, GrevlexDiffersFromGrlex) {
  auto grevlex = MonomialOrder::grevlex(3);
  auto grlex = MonomialOrder::grlex(3);
  // x y^5 z^2 vs x^4 y z^3: equal degree, smaller z wins under grevlex.
  Monomial a{1, 5, 2}, b{4, 1, 3};
  EXPECT_EQ(grevlex.compare(a, b), std::strong_ordering::greater);
  EXPECT_EQ(grlex.compare(a, b), std::strong_ordering::less);
}

TEST(MonomialOrder, CostWeightedUsesTieOrder) {
  auto order = MonomialOrder::cost_weighted({1, 1, 0}, MonomialOrder::lex(3));
  EXPECT_EQ(order.compare(Monomial{0, 0, 9}, Monomial{0, 1, 0}), std::strong_ordering::less);
  EXPECT_EQ(order.compare(Monomial{1, 0, 0}, Monomial{0, 1, 0}), std::strong_ordering::greater);
}

TEST(MonomialOrder, ArityMismatchThrows) {
  auto lex = MonomialOrder::lex(2);
  EXPECT_THROW(lex.compare(Monomial{1, 0, 0}, Monomial{1, 0}), DimensionError);
  EXPECT_THROW(MonomialOrder::lex(std::vector<std::size_t>{0, 0}), ParameterError);
  EXPECT_THROW(MonomialOrder::cost_weighted({1}, MonomialOrder::lex(2)), DimensionError);
}

TEST(MonomialOrder, TermOrderAxiomsOnRandomMonomials) {
  Gen gen(2024);
  for (std::size_t n : {1, 2, 4, 6}) {
    for (const auto& order : all_orders(n, gen)) {
      const Monomial one(n);
      for (int trial = 0; trial < 300; ++trial) {
        Monomial a = gen.monomial(n, 20), b = gen.monomial(n, 20), c = gen.monomial(n, 20);
        const auto ab = order.compare(a, b);
        const auto ba = order.compare(b, a);
        // Totality and antisymmetry.
        EXPECT_EQ(ab == 0, a == b) << order.name();
        EXPECT_EQ(ab < 0, ba > 0) << order.name();
        // Translation invariance.
        EXPECT_EQ(order.compare(a * c, b * c), ab) << order.name();
        // Well-ordering: the unit monomial is minimal.
        EXPECT_NE(order.compare(a, one), std::strong_ordering::less) << order.name();
        // Transitivity on the sampled triple.
        if (ab > 0 && order.compare(b, c) > 0) {
          EXPECT_TRUE(order.compare(a, c) > 0) << order.name();
        }
      }
    }
  }
}

TEST(Polynomial, ZeroHasNoTerms) {
  auto f = P("x - x");
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(to_string(f, VariableNames::parse_list("x,y,z")), "0");
  EXPECT_THROW(leading_parts(f, MonomialOrder::lex(3)), UndefinedLeadingTermError);
}

TEST(Polynomial, LeadingPartsWorkedExamples) {
  auto lex = MonomialOrder::lex(3);
  auto f = P("x + 2*z^3 - 3*z");
  auto lp = leading_parts(f, lex);
  EXPECT_EQ(lp.leading_monomial, (Monomial{1, 0, 0}));
  EXPECT_EQ(lp.leading_coefficient, Rational(1));

  auto g = P("2*z^4 - 3*z^2 + 1");
  lp = leading_parts(g, lex);
  EXPECT_EQ(lp.leading_monomial, (Monomial{0, 0, 4}));
  EXPECT_EQ(lp.leading_coefficient, Rational(2));
  EXPECT_EQ(lp.leading_term.coefficient * SparsePolynomial::monomial(lp.leading_monomial),
            SparsePolynomial::monomial(lp.leading_term.monomial, lp.leading_term.coefficient));

  lp = leading_parts(P("5"), lex);
  EXPECT_TRUE(lp.leading_monomial.is_one());
  EXPECT_EQ(lp.leading_coefficient, Rational(5));
}

TEST(Polynomial, SPolynomialHandExample) {
  auto lex = MonomialOrder::lex(2);
  auto f = P("x^2 - 1", "x,y");
  auto g = P("x*y - 1", "x,y");
  // L = x^2 y; S = y f - x g, expanded with the independent oracle.
  auto y = P("y", "x,y");
  auto x = P("x", "x,y");
  auto yf = SparsePolynomial::from_terms(2, naive_product(y, f));
  auto xg = SparsePolynomial::from_terms(2, naive_product(x, g));
  EXPECT_EQ(s_polynomial(f, g, lex), yf - xg);
  EXPECT_EQ(s_polynomial(f, g, lex), P("x - y", "x,y"));
  EXPECT_TRUE(s_polynomial(f, f, lex).is_zero());
  EXPECT_THROW(s_polynomial(f, SparsePolynomial(2), lex), UndefinedLeadingTermError);
}

TEST(Polynomial, SPolynomialCancelsLeadingTerms) {
  Gen gen(77);
  int checked = 0;
  while (checked < 100) {
    auto orders = all_orders(3, gen);
    const auto& order = orders[static_cast<std::size_t>(gen.integer(0, orders.size() - 1))];
    auto f = gen.polynomial(3, 5, 6);
    auto g = gen.polynomial(3, 5, 6);
    if (f.is_zero() || g.is_zero()) continue;
    const Monomial l = lcm(leading_parts(f, order).leading_monomial,
                           leading_parts(g, order).leading_monomial);
    auto s = s_polynomial(f, g, order);
    if (!s.is_zero()) {
      EXPECT_EQ(order.compare(leading_parts(s, order).leading_monomial, l),
                std::strong_ordering::less);
    }
    ++checked;
  }
}

TEST(Polynomial, MultiplicationMatchesNaiveExpansion) {
  Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    auto a = gen.polynomial(4, 6, 5);
    auto b = gen.polynomial(4, 6, 5);
    EXPECT_TRUE(same_terms((a * b).terms(), naive_product(a, b)));
  }
}

TEST(Polynomial, RingAxioms) {
  Gen gen(9);
  for (int i = 0; i < 200; ++i) {
    auto f = gen.polynomial(3, 5, 4), g = gen.polynomial(3, 5, 4), h = gen.polynomial(3, 5, 4);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Polynomial, ArityMismatchThrows) {
  EXPECT_THROW(SparsePolynomial::variable(2, 0) + SparsePolynomial::variable(3, 0),
               DimensionError);
}

TEST(Reduce, ExactDivisionLeavesZero) {
  auto lex = MonomialOrder::lex(3);
  auto g = P("x*y - z^2 + 3");
  std::vector<SparsePolynomial> G{g};
  auto r = reduce(g, G, lex);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.quotients[0], P("1"));
}

TEST(Reduce, IdealMembershipInKnownBasis) {
  auto lex = MonomialOrder::lex(3);
  std::vector<SparsePolynomial> B{P("x + 2*z^3 - 3*z"), P("y^2 - z^2 - 1"),
                                  P("2*z^4 - 3*z^2 + 1")};
  EXPECT_TRUE(reduce(P("x^2 + y^2 + z^2 - 4"), B, lex).remainder.is_zero());
  EXPECT_TRUE(reduce(P("x^2 + 2*y^2 - 5"), B, lex).remainder.is_zero());
  EXPECT_TRUE(reduce(P("x*z - 1"), B, lex).remainder.is_zero());
  EXPECT_FALSE(reduce(P("x - 1"), B, lex).remainder.is_zero());
}

TEST(Reduce, DivisionIdentityAndIrreducibleRemainder) {
  Gen gen(42);
  for (int i = 0; i < 150; ++i) {
    auto orders = all_orders(3, gen);
    const auto& order = orders[static_cast<std::size_t>(gen.integer(0, orders.size() - 1))];
    auto f = gen.polynomial(3, 8, 6);
    std::vector<SparsePolynomial> G;
    const auto k = gen.integer(1, 3);
    while (static_cast<std::int64_t>(G.size()) < k) {
      auto g = gen.polynomial(3, 3, 3);
      if (!g.is_zero()) G.push_back(g);
    }
    auto red = reduce(f, G, order);
    // Re-expand with the naive product oracle.
    SparsePolynomial sum = red.remainder;
    for (std::size_t j = 0; j < G.size(); ++j) {
      sum += SparsePolynomial::from_terms(3, naive_product(red.quotients[j], G[j]));
    }
    EXPECT_EQ(sum, f);
    for (const auto& t : red.remainder.terms()) {
      for (const auto& g : G) {
        EXPECT_FALSE(leading_parts(g, order).leading_monomial.divides(t.monomial));
      }
    }
    // Idempotence.
    EXPECT_EQ(reduce(red.remainder, G, order).remainder, red.remainder);
    EXPECT_EQ(normal_form(f, G, order), red.remainder);
  }
}

TEST(Reduce, QuotientsAreDeterministic) {
  // Both divisors divide x*y; the first listed one takes it.
  auto lex = MonomialOrder::lex(2);
  std::vector<SparsePolynomial> G{P("x - 1", "x,y"), P("y - 1", "x,y")};
  auto r = reduce(P("x*y", "x,y"), G, lex);
  EXPECT_EQ(r.quotients[0], P("y", "x,y"));
  EXPECT_EQ(r.quotients[1], P("1", "x,y"));
  EXPECT_TRUE(r.remainder == P("1", "x,y"));
}

TEST(PolyIo, RoundTripsRandomPolynomials) {
  Gen gen(8);
  const auto vars = VariableNames::indexed(5);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.polynomial(5, 7, 6);
    const std::string text = to_string(f, vars);
    EXPECT_EQ(parse_polynomial(text, vars), f) << text;
    EXPECT_EQ(to_string(parse_polynomial(text, vars), vars), text);
  }
}

TEST(PolyIo, PrinterFormat) {
  auto vars = VariableNames::indexed(3);
  auto f = parse_polynomial("1 - x2 + 3/2*x0^2*x1", vars);
  EXPECT_EQ(to_string(f, vars), "3/2*x0^2*x1 - x2 + 1");
  EXPECT_EQ(to_string(parse_polynomial("-x0", vars), vars), "-x0");
  EXPECT_EQ(to_string(parse_polynomial("0.5 * x1 * x1", vars), vars), "1/2*x1^2");
}

TEST(PolyIo, DisplayClearsDenominators) {
  auto vars = VariableNames::parse_list("x,y,z");
  auto f = P("z^4 - 3/2*z^2 + 1/2");
  EXPECT_EQ(to_display_string(f, vars, MonomialOrder::lex(3)), "2*z^4 - 3*z^2 + 1");
  EXPECT_EQ(to_display_string(P("-4*x + 6"), vars, MonomialOrder::lex(3)), "2*x - 3");
}

TEST(PolyIo, ErrorsCarryLocation) {
  auto vars = VariableNames::parse_list("x,y");
  try {
    parse_polynomial("x + y )", vars);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 7);
  }
  EXPECT_THROW(parse_polynomial("x + w", vars), ParseError);
  EXPECT_THROW(parse_polynomial("", vars), ParseError);
  EXPECT_THROW(parse_polynomial("x^", vars), ParseError);
  EXPECT_THROW(parse_polynomial("x +", vars), ParseError);
  EXPECT_THROW(parse_polynomial("x5", VariableNames::indexed(3)), ParseError);
}

TEST(PolyIo, ListSkipsCommentsAndReportsLines) {
  auto vars = VariableNames::parse_list("x,y");
  auto list = parse_polynomial_list("# system\nx^2 - 1\n\nx*y - 1  # second\n", vars);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[1], P("x*y - 1", "x,y"));
  try {
    parse_polynomial_list("x\ny +* 1\n", vars);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(PolyIo, IndexedArityInferredAcrossLines) {
  auto list = parse_polynomial_list("x0 - 1\nx3*x1\n", VariableNames::indexed(0));
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].arity(), 4u);
  EXPECT_EQ(list[1].arity(), 4u);
}

}  // namespace
}  // namespace quip
