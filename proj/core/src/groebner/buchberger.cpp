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
#include <set>
#include <string>

#include "quip/common/errors.hpp"
#include "quip/common/parallel.hpp"
#include "quip/groebner/groebner.hpp"

namespace quip {
namespace {

using TermList = std::vector<Term>;

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

struct Element {
  TermList terms;  // descending under the active order, monic
  std::uint64_t mask = 0;
  const Monomial& lm() const { return terms.front().monomial; }
};

struct Pair {
  std::uint64_t degree;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerLimits& limits, GroebnerStats& stats)
      : order_(order), limits_(limits), stats_(stats) {}

  TermList sorted(const SparsePolynomial& f) const {
    TermList t = f.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
      return order_.greater(a.monomial, b.monomial);
    });
    return t;
  }

  static void make_monic(TermList& p) {
    if (p.empty() || p.front().coefficient.is_one()) return;
    const Rational inv = p.front().coefficient.inverse();
    for (auto& t : p) t.coefficient *= inv;
  }

  // p[from..] - k * q * g, merged in order.
  TermList sub_mul(const TermList& p, std::size_t from, const Rational& k,
                   const Monomial& q, const TermList& g) const {
    TermList out;
    out.reserve(p.size() - from + g.size());
    std::size_t a = from, b = 0;
    Monomial gm;
    bool have = false;
    while (a < p.size() || b < g.size()) {
      if (b < g.size() && !have) {
        gm = g[b].monomial * q;
        have = true;
      }
      if (b == g.size()) {
        out.push_back(p[a++]);
        continue;
      }
      if (a == p.size()) {
        out.push_back({std::move(gm), -(k * g[b].coefficient)});
        ++b;
        have = false;
        continue;
      }
      const auto c = order_.compare_unchecked(p[a].monomial, gm);
      if (c > 0) {
        out.push_back(p[a++]);
      } else if (c < 0) {
        out.push_back({std::move(gm), -(k * g[b].coefficient)});
        ++b;
        have = false;
      } else {
        Rational v = p[a].coefficient - k * g[b].coefficient;
        if (!v.is_zero()) out.push_back({p[a].monomial, std::move(v)});
        ++a;
        ++b;
        have = false;
      }
    }
    return out;
  }

  const Element* find_divisor(const Monomial& m, std::uint64_t mask,
                              const std::vector<Element>& basis, std::size_t skip) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].terms.empty()) continue;
      if ((basis[i].mask & ~mask) != 0) continue;
      if (basis[i].lm().divides(m)) return &basis[i];
    }
    return nullptr;
  }

  // Full normal form of p against basis (excluding index `skip`).
  TermList reduce(TermList p, const std::vector<Element>& basis,
                  std::size_t skip = static_cast<std::size_t>(-1)) const {
    TermList rest;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Term& head = p[pos];
      const Element* g = find_divisor(head.monomial, support_mask(head.monomial), basis, skip);
      if (g == nullptr) {
        rest.push_back(head);
        ++pos;
        continue;
      }
      const Monomial q = head.monomial / g->lm();
      const Rational k = head.coefficient;  // g is monic
      p = sub_mul(p, pos, k, q, g->terms);
      pos = 0;
    }
    return rest;
  }

  TermList s_poly(const Element& f, const Element& g, const Monomial& l) const {
    TermList fs;
    const Monomial qf = l / f.lm();
    fs.reserve(f.terms.size());
    for (const auto& t : f.terms) fs.push_back({t.monomial * qf, t.coefficient});
    return sub_mul(fs, 0, Rational(1), l / g.lm(), g.terms);
  }

  std::vector<Element> run(const std::vector<SparsePolynomial>& generators) {
    std::vector<Element> basis;
    auto cmp = [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (auto c = order_.compare_unchecked(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    };
    std::set<Pair, decltype(cmp)> queue(cmp);
    std::vector<std::vector<char>> queued;  // queued[j][i], i < j
    std::size_t created = 0;

    auto add = [&](TermList p) {
      make_monic(p);
      const std::uint64_t degree = [&] {
        std::uint64_t d = 0;
        for (const auto& t : p) d = std::max(d, t.monomial.degree());
        return d;
      }();
      if (degree > limits_.max_degree) {
        throw ComputationLimitError("basis element of degree " + std::to_string(degree) +
                                    " exceeds the degree cap " +
                                    std::to_string(limits_.max_degree));
      }
      Element e;
      e.mask = support_mask(p.front().monomial);
      e.terms = std::move(p);
      const std::size_t j = basis.size();
      basis.push_back(std::move(e));
      queued.emplace_back(j, 0);
      for (std::size_t i = 0; i < j; ++i) {
        if (++created > limits_.max_pairs) {
          throw ComputationLimitError("S-pair count exceeds the cap " +
                                      std::to_string(limits_.max_pairs));
        }
        Monomial l = lcm(basis[i].lm(), basis[j].lm());
        const std::uint64_t d = l.degree();
        queue.insert({d, std::move(l), i, j});
        queued[j][i] = 1;
      }
    };

    auto in_queue = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return queued[b][a] != 0;
    };

    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      TermList p = reduce(sorted(g), basis);
      if (p.empty()) continue;
      if (p.front().monomial.is_one()) return unit(g.arity());
      add(std::move(p));
    }

    while (!queue.empty()) {
      Pair pair = *queue.begin();
      queue.erase(queue.begin());
      queued[pair.j][pair.i] = 0;
      ++stats_.pairs_considered;
      const Element& f = basis[pair.i];
      const Element& g = basis[pair.j];
      if (f.lm().coprime(g.lm())) {
        ++stats_.coprime_skipped;
        continue;
      }
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pair.i || k == pair.j) continue;
        if (basis[k].lm().divides(pair.lcm) && !in_queue(pair.i, k) && !in_queue(pair.j, k)) {
          chain = true;
        }
      }
      if (chain) {
        ++stats_.chain_skipped;
        continue;
      }
      ++stats_.pairs_reduced;
      TermList h = reduce(s_poly(f, g, pair.lcm), basis);
      if (h.empty()) continue;
      if (h.front().monomial.is_one()) return unit(f.lm().arity());
      add(std::move(h));
    }
    return finish(std::move(basis));
  }

  std::vector<Element> unit(std::size_t arity) const {
    Element e;
    e.terms.push_back({Monomial(arity), Rational(1)});
    std::vector<Element> out;
    out.push_back(std::move(e));
    return out;
  }

  std::vector<Element> finish(std::vector<Element> basis) const {
    std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
      return order_.compare_unchecked(a.lm(), b.lm()) < 0;
    });
    std::vector<Element> minimal;
    for (auto& e : basis) {
      bool redundant = false;
      for (const auto& k : minimal) {
        if (k.lm().divides(e.lm())) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      TermList tail(minimal[i].terms.begin() + 1, minimal[i].terms.end());
      TermList reduced = reduce(std::move(tail), minimal, i);
      reduced.insert(reduced.begin(), minimal[i].terms.front());
      minimal[i].terms = std::move(reduced);
    }
    std::reverse(minimal.begin(), minimal.end());
    return minimal;
  }

 private:
  const MonomialOrder& order_;
  const GroebnerLimits& limits_;
  GroebnerStats& stats_;
};

}  // namespace

Ideal Ideal::make(std::vector<SparsePolynomial> generators, VariableNames names) {
  Ideal ideal;
  ideal.names = std::move(names);
  for (auto& g : generators) {
    if (g.arity() != ideal.names.arity) {
      throw DimensionError("generator arity " + std::to_string(g.arity()) +
                           " differs from ideal arity " + std::to_string(ideal.names.arity));
    }
    if (g.is_zero()) continue;
    if (std::find(ideal.generators.begin(), ideal.generators.end(), g) != ideal.generators.end()) {
      continue;
    }
    ideal.generators.push_back(std::move(g));
  }
  return ideal;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const GroebnerLimits& limits, GroebnerStats* stats) {
  if (ideal.generators.empty()) throw ParameterError("ideal has no generators");
  if (order.arity() != ideal.arity()) {
    throw DimensionError("order arity " + std::to_string(order.arity()) +
                         " differs from ideal arity " + std::to_string(ideal.arity()));
  }
  for (const auto& g : ideal.generators) {
    if (g.arity() != ideal.arity()) throw DimensionError("generator arity mismatch");
  }
  GroebnerStats local;
  Engine engine(order, limits, stats ? *stats : local);
  std::vector<Element> elements = engine.run(ideal.generators);
  GroebnerBasis basis{{}, order, true};
  for (auto& e : elements) {
    basis.polynomials.push_back(SparsePolynomial::from_terms(ideal.arity(), std::move(e.terms)));
  }
  return basis;
}

bool is_infeasible(const GroebnerBasis& basis) {
  return basis.polynomials.size() == 1 && basis.polynomials[0].is_constant() &&
         !basis.polynomials[0].is_zero();
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis, std::size_t threads) {
  const auto& B = basis.polynomials;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < B.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<char> ok(pairs.size(), 1);
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    auto s = s_polynomial(B[pairs[p].first], B[pairs[p].second], basis.order);
    ok[p] = normal_form(s, B, basis.order).is_zero() ? 1 : 0;
  });
  if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return false;
  return !basis.reduced || is_reduced(basis);
}

bool is_reduced(const GroebnerBasis& basis) {
  const auto& B = basis.polynomials;
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (B[i].is_zero()) return false;
    const auto lp = leading_parts(B[i], basis.order);
    if (!lp.leading_coefficient.is_one()) return false;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B[j].terms()) {
        if (lp.leading_monomial.divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

bool contains(const GroebnerBasis& basis, const SparsePolynomial& f) {
  return normal_form(f, basis.polynomials, basis.order).is_zero();
}

}  // namespace quip
