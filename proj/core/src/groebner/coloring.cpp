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

#include <string>

#include "quip/common/errors.hpp"
#include "quip/groebner/groebner.hpp"

namespace quip {

Ideal coloring_system(const Graph& graph, unsigned k) {
  if (k == 0) throw ParameterError("color count must be at least 1");
  graph.validate();
  const std::size_t n = graph.vertex_count;
  std::vector<SparsePolynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(SparsePolynomial::monomial(Monomial::variable(n, i, k)) -
                   SparsePolynomial::constant(n, 1));
  }
  for (const auto& e : graph.edges) {
    std::vector<Term> terms;
    for (unsigned d = 0; d < k; ++d) {
      Monomial m(n);
      m[e.u] += d;
      m[e.v] += k - 1 - d;
      terms.push_back({m, Rational(1)});
    }
    gens.push_back(SparsePolynomial::from_terms(n, std::move(terms)));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return Ideal::make(std::move(gens), VariableNames::named(std::move(names)));
}

bool is_k_colorable(const Graph& graph, unsigned k, const GroebnerLimits& limits) {
  if (graph.vertex_count == 0) return true;
  const Ideal ideal = coloring_system(graph, k);
  return !is_infeasible(buchberger(ideal, MonomialOrder::grevlex(graph.vertex_count), limits));
}

}  // namespace quip
