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
#include <string>

#include "quip/common/errors.hpp"
#include "quip/groebner/groebner.hpp"

namespace quip {
namespace {

using Univariate = std::vector<Rational>;  // coefficient of z^i at index i

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rational eval(const Univariate& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Univariate derivative(const Univariate& p) {
  Univariate d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Remainder and quotient of a / b, b nonzero.
std::pair<Univariate, Univariate> divmod(Univariate a, const Univariate& b) {
  Univariate q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational k = a.back() / b.back();
    q[shift] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= k * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {a, q};
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = divmod(a, b).first;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<BigInt> divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

int sign_changes(const std::vector<Univariate>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate(const std::vector<Univariate>& chain, Rational lo, Rational hi,
             int v_lo, int v_hi, const Rational& width, std::vector<RealRoot>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (hi - lo <= width) {
    // A squarefree polynomial has at most one root in a tiny enough interval.
    if (eval(chain[0], hi).is_zero()) {
      out.push_back({hi, true});
    } else {
      out.push_back({(lo + hi) / Rational(2), false});
    }
    return;
  }
  const Rational mid = (lo + hi) / Rational(2);
  const int v_mid = sign_changes(chain, mid);
  isolate(chain, lo, mid, v_lo, v_mid, width, out);
  isolate(chain, mid, hi, v_mid, v_hi, width, out);
}

}  // namespace

std::vector<RealRoot> real_roots(const std::vector<Rational>& coefficients) {
  Univariate p = coefficients;
  trim(p);
  if (p.empty()) throw ParameterError("real_roots of the zero polynomial");
  std::vector<RealRoot> roots;

  // Exact rational roots via the rational root theorem.
  if (p[0].is_zero()) {
    roots.push_back({Rational(0), true});
    while (!p.empty() && p[0].is_zero()) p.erase(p.begin());
  }
  BigInt den = 1;
  for (const auto& c : p) den = lcm(den, c.denominator());
  std::vector<BigInt> ints;
  for (const auto& c : p) ints.push_back((c * Rational(den)).numerator());
  const BigInt limit("1000000000000");
  if (p.size() > 1 && abs(ints.front()) <= limit && abs(ints.back()) <= limit) {
    for (const auto& num : divisors(ints.front())) {
      for (const auto& q : divisors(ints.back())) {
        for (int s : {1, -1}) {
          const Rational cand(BigInt(num * s), q);
          if (p.size() <= 1) break;
          if (std::any_of(roots.begin(), roots.end(),
                          [&](const RealRoot& r) { return r.value == cand; })) {
            continue;
          }
          if (eval(p, cand).is_zero()) {
            roots.push_back({cand, true});
            while (p.size() > 1 && eval(p, cand).is_zero()) {
              p = divmod(p, Univariate{-cand, Rational(1)}).second;
            }
          }
        }
      }
    }
  }

  // Remaining real roots by Sturm isolation of the squarefree part.
  if (p.size() > 1) {
    Univariate sq = divmod(p, gcd(p, derivative(p))).second;
    if (sq.size() > 1) {
      std::vector<Univariate> chain{sq, derivative(sq)};
      while (chain.back().size() > 1) {
        Univariate r = divmod(chain[chain.size() - 2], chain.back()).first;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
      }
      Rational bound = 0;
      for (std::size_t i = 0; i + 1 < sq.size(); ++i) {
        bound = std::max(bound, (sq[i] / sq.back()).abs());
      }
      bound += Rational(1);
      Rational width(BigInt(1), BigInt(1) << 40);
      std::vector<RealRoot> approx;
      isolate(chain, -bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound),
              width, approx);
      for (auto& r : approx) {
        if (std::none_of(roots.begin(), roots.end(),
                         [&](const RealRoot& e) { return e.exact && e.value == r.value; })) {
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

BptSolution bpt_solve(const SparsePolynomial& objective,
                      const std::vector<SparsePolynomial>& equalities, std::size_t n,
                      const GroebnerLimits& limits) {
  if (objective.arity() != n) throw DimensionError("objective arity differs from n");
  const std::size_t arity = n + 1, z = n;
  std::vector<std::size_t> lift(n);
  for (std::size_t i = 0; i < n; ++i) lift[i] = i;

  std::vector<SparsePolynomial> gens;
  const SparsePolynomial f = objective.remap(arity, lift);
  gens.push_back(SparsePolynomial::variable(arity, z) - f);
  for (const auto& g : equalities) {
    if (g.arity() != n) throw DimensionError("constraint arity differs from n");
    gens.push_back(g.remap(arity, lift));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = SparsePolynomial::variable(arity, i);
    gens.push_back(x * x - x);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("z");
  const MonomialOrder order = MonomialOrder::lex(arity);
  const GroebnerBasis basis =
      buchberger(Ideal::make(std::move(gens), VariableNames::named(names)), order, limits);
  if (is_infeasible(basis)) {
    throw InfeasibleError("no binary point satisfies the equalities", "unit_ideal");
  }

  const SparsePolynomial* univariate = nullptr;
  for (const auto& g : basis.polynomials) {
    const auto s = g.support();
    if (s.size() == 1 && s[0] == z) univariate = &g;
  }
  if (univariate == nullptr) throw InvariantError("basis has no element univariate in z");
  std::vector<Rational> coeffs(univariate->total_degree() + 1);
  for (const auto& t : univariate->terms()) coeffs[t.monomial[z]] = t.coefficient;

  // Each basis element is checked once all of its x variables are assigned.
  std::vector<std::vector<const SparsePolynomial*>> checks(n + 1);
  for (const auto& g : basis.polynomials) {
    const auto s = g.support();
    std::size_t lowest = n;
    for (std::size_t v : s) {
      if (v < n) lowest = std::min(lowest, v);
    }
    checks[lowest].push_back(&g);
  }

  for (const RealRoot& root : real_roots(coeffs)) {
    std::vector<Rational> values(arity);
    values[z] = root.value;
    auto holds = [&](const SparsePolynomial* g) {
      // Elements involving z cannot be checked against an approximate root.
      if (!root.exact && g->total_degree() > 0) {
        const auto s = g->support();
        if (!s.empty() && s.back() == z) return true;
      }
      return g->evaluate(values).is_zero();
    };
    auto consistent = [&](std::size_t level) {
      return std::all_of(checks[level].begin(), checks[level].end(), holds);
    };
    if (!consistent(n)) continue;
    std::vector<int> x(n, 0);
    // Depth-first over x_{n-1}, ..., x_0.
    auto dfs = [&](auto&& self, std::size_t remaining) -> bool {
      if (remaining == 0) return true;
      const std::size_t v = remaining - 1;
      for (int bit : {0, 1}) {
        values[v] = bit;
        x[v] = bit;
        if (consistent(v) && self(self, v)) return true;
      }
      values[v] = 0;
      return false;
    };
    if (!dfs(dfs, n)) continue;
    if (!root.exact) {
      std::vector<Rational> xs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
      const Rational exact = objective.evaluate(xs);
      if (std::fabs((exact - root.value).to_double()) > 1e-6) continue;
      return {exact, x, false};
    }
    return {root.value, x, true};
  }
  throw InvariantError("no root of the eliminant is attained by a binary point");
}

}  // namespace quip
