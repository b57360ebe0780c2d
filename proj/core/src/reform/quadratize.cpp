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
#include <map>
#include <numeric>

#include "quip/common/errors.hpp"
#include "quip/reform/reform.hpp"

namespace quip {

SparsePolynomial rosenberg_penalty(std::size_t arity, std::size_t i, std::size_t j, std::size_t y) {
  auto mono = [&](std::initializer_list<std::size_t> vars) {
    Monomial m(arity);
    for (auto v : vars) m[v] += 1;
    return m;
  };
  return SparsePolynomial::from_terms(arity, {{mono({y}), Rational(3)},
                                              {mono({i, j}), Rational(1)},
                                              {mono({y, i}), Rational(-2)},
                                              {mono({y, j}), Rational(-2)}});
}

SparsePolynomial Quadratization::total() const {
  SparsePolynomial t = objective;
  for (const auto& p : penalties) t += p * weight;
  return t;
}

Quadratization quadratize(const SparsePolynomial& f) {
  Quadratization out;
  // Terms as sorted variable lists; the polynomial is multilinear.
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;
  out.weight = Rational(1);
  const SparsePolynomial g = multilinearize(f);
  for (const auto& t : g.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < t.monomial.arity(); ++v) {
      if (t.monomial[v] != 0) vars.push_back(v);
    }
    if (!vars.empty()) out.weight += t.coefficient.abs();
    terms.emplace_back(std::move(vars), t.coefficient);
  }
  std::size_t arity = f.arity();
  while (true) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (const auto& [vars, c] : terms) {
      if (vars.size() < 3) continue;
      for (std::size_t a = 0; a < vars.size(); ++a) {
        for (std::size_t b = a + 1; b < vars.size(); ++b) ++counts[{vars[a], vars[b]}];
      }
    }
    if (counts.empty()) break;
    // std::map iterates pairs in increasing order, so the first maximum has
    // the lowest indices.
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    const auto [i, j] = best->first;
    const std::size_t y = arity++;
    out.ancillas.push_back({y, i, j});
    for (auto& [vars, c] : terms) {
      if (vars.size() < 3) continue;
      auto pi = std::find(vars.begin(), vars.end(), i);
      auto pj = std::find(vars.begin(), vars.end(), j);
      if (pi == vars.end() || pj == vars.end()) continue;
      vars.erase(pj);
      vars.erase(std::find(vars.begin(), vars.end(), i));
      vars.push_back(y);
    }
  }
  std::vector<Term> final_terms;
  for (const auto& [vars, c] : terms) {
    Monomial m(arity);
    for (auto v : vars) m[v] = 1;
    final_terms.push_back({std::move(m), c});
  }
  out.objective = SparsePolynomial::from_terms(arity, std::move(final_terms));
  for (const auto& a : out.ancillas) out.penalties.push_back(rosenberg_penalty(arity, a.i, a.j, a.index));
  return out;
}

}  // namespace quip
