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

#include "quip/qubo/models.hpp"

#include <algorithm>
#include <string>

#include "quip/common/errors.hpp"

namespace quip {
namespace {

PairKey ordered(std::size_t i, std::size_t j) { return {std::min(i, j), std::max(i, j)}; }

void accumulate(PairMap& map, const PairKey& key, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = map.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) map.erase(it);
  }
}

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw DimensionError("variable index " + std::to_string(i) + " outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
  }
}

void check_length(std::size_t got, std::size_t n) {
  if (got != n) {
    throw DimensionError("configuration has " + std::to_string(got) + " entries, model has " +
                         std::to_string(n));
  }
}

}  // namespace

QuboModel QuboModel::from_matrix(const std::vector<std::vector<Rational>>& Q,
                                 const Rational& offset) {
  QuboModel q(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) {
    if (Q[i].size() != Q.size()) throw DimensionError("Q must be square");
    for (std::size_t j = 0; j < Q.size(); ++j) q.add_pair(i, j, Q[i][j]);
  }
  q.offset_ = offset;
  return q;
}

void QuboModel::add_linear(std::size_t i, const Rational& v) {
  check_index(i, size());
  linear_[i] += v;
}

void QuboModel::add_pair(std::size_t i, std::size_t j, const Rational& v) {
  check_index(i, size());
  check_index(j, size());
  if (i == j) {
    linear_[i] += v;
    return;
  }
  accumulate(pairs_, ordered(i, j), v);
}

Rational QuboModel::pair(std::size_t i, std::size_t j) const {
  auto it = pairs_.find(ordered(i, j));
  return it == pairs_.end() ? Rational(0) : it->second;
}

Rational QuboModel::entry(std::size_t i, std::size_t j) const {
  check_index(i, size());
  check_index(j, size());
  if (i == j) return linear_[i];
  return pair(i, j) / Rational(2);
}

Rational QuboModel::energy(std::span<const std::int8_t> x) const {
  check_length(x.size(), size());
  for (auto v : x) {
    if (v != 0 && v != 1) throw ParameterError("QUBO configurations hold 0/1 values");
  }
  Rational e = offset_;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i] != 0) e += linear_[i];
  }
  for (const auto& [key, v] : pairs_) {
    if (x[key.first] != 0 && x[key.second] != 0) e += v;
  }
  return e;
}

void IsingModel::add_field(std::size_t i, const Rational& v) {
  check_index(i, size());
  h_[i] += v;
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, const Rational& v) {
  check_index(i, size());
  check_index(j, size());
  if (i == j) throw ParameterError("self-coupling on spin " + std::to_string(i));
  accumulate(couplings_, ordered(i, j), v);
}

Rational IsingModel::coupling(std::size_t i, std::size_t j) const {
  auto it = couplings_.find(ordered(i, j));
  return it == couplings_.end() ? Rational(0) : it->second;
}

Rational IsingModel::energy(std::span<const std::int8_t> s) const {
  check_length(s.size(), size());
  for (auto v : s) {
    if (v != 1 && v != -1) throw ParameterError("Ising configurations hold -1/+1 values");
  }
  Rational e = offset_;
  for (std::size_t i = 0; i < size(); ++i) {
    if (s[i] > 0) {
      e += h_[i];
    } else {
      e -= h_[i];
    }
  }
  for (const auto& [key, v] : couplings_) {
    if (s[key.first] == s[key.second]) {
      e += v;
    } else {
      e -= v;
    }
  }
  return e;
}

// x_i x_j = (s_i s_j + s_i + s_j + 1) / 4 and x_i = (s_i + 1) / 2.
IsingModel qubo_to_ising(const QuboModel& q) {
  IsingModel m(q.size());
  m.add_offset(q.offset());
  const Rational half(1, 2), quarter(1, 4);
  for (std::size_t i = 0; i < q.size(); ++i) {
    m.add_field(i, q.linear()[i] * half);
    m.add_offset(q.linear()[i] * half);
  }
  for (const auto& [key, b] : q.pairs()) {
    const Rational w = b * quarter;
    m.add_coupling(key.first, key.second, w);
    m.add_field(key.first, w);
    m.add_field(key.second, w);
    m.add_offset(w);
  }
  return m;
}

// s_i s_j = 4 x_i x_j - 2 x_i - 2 x_j + 1 and s_i = 2 x_i - 1.
QuboModel ising_to_qubo(const IsingModel& m) {
  QuboModel q(m.size());
  q.add_offset(m.offset());
  for (std::size_t i = 0; i < m.size(); ++i) {
    q.add_linear(i, m.h()[i] * Rational(2));
    q.add_offset(-m.h()[i]);
  }
  for (const auto& [key, J] : m.couplings()) {
    q.add_pair(key.first, key.second, J * Rational(4));
    q.add_linear(key.first, J * Rational(-2));
    q.add_linear(key.second, J * Rational(-2));
    q.add_offset(J);
  }
  return q;
}

Config bits_to_spins(std::span<const std::int8_t> x) {
  Config s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] != 0 ? 1 : -1;
  return s;
}

Config spins_to_bits(std::span<const std::int8_t> s) {
  Config x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] > 0 ? 1 : 0;
  return x;
}

IsingModel maxcut_to_ising(const Graph& graph) {
  graph.validate();
  IsingModel m(graph.vertex_count);
  for (const auto& e : graph.edges) m.add_coupling(e.u, e.v, e.weight);
  return m;
}

Rational cut_value(const Graph& graph, std::span<const std::int8_t> spins) {
  check_length(spins.size(), graph.vertex_count);
  Rational cut;
  for (const auto& e : graph.edges) {
    if (spins[e.u] != spins[e.v]) cut += e.weight;
  }
  return cut;
}

IlpLinearization qubo_to_ilp(const QuboModel& q) {
  const std::size_t n = q.size();
  IlpLinearization out;
  for (const auto& [key, v] : q.pairs()) out.products.push_back(key);
  const std::size_t p = out.products.size();
  auto& sys = out.system;
  sys.A = IntMatrix(3 * p, n + p);
  sys.b.assign(3 * p, 0);
  for (std::size_t k = 0; k < p; ++k) {
    const auto [i, j] = out.products[k];
    const std::size_t y = n + k;
    sys.A(3 * k, i) = 1;
    sys.A(3 * k, j) = 1;
    sys.A(3 * k, y) = -1;
    sys.b[3 * k] = 1;
    sys.A(3 * k + 1, y) = 1;
    sys.A(3 * k + 1, i) = -1;
    sys.A(3 * k + 2, y) = 1;
    sys.A(3 * k + 2, j) = -1;
  }
  sys.lower.assign(n + p, 0);
  sys.upper.assign(n + p, 1);
  sys.inequality.assign(3 * p, true);
  std::vector<Rational> c(q.linear());
  for (const auto& [key, v] : q.pairs()) c.push_back(v);
  sys.objective = Objective::make_linear(std::move(c));
  sys.normalize();
  out.offset = q.offset();
  return out;
}

std::vector<std::size_t> duplicate_chain(std::size_t n, std::size_t variable,
                                         std::size_t copies) {
  std::vector<std::size_t> chain{variable};
  for (std::size_t k = 1; k < copies; ++k) chain.push_back(n + k - 1);
  return chain;
}

IsingModel chain_duplicate(const IsingModel& m, std::size_t variable, std::size_t copies,
                           const Rational& p) {
  check_index(variable, m.size());
  if (copies == 0) throw ParameterError("copies must be at least 1");
  if (p.sign() <= 0) throw ParameterError("chain strength must be positive, got " + p.to_string());
  const auto chain = duplicate_chain(m.size(), variable, copies);
  IsingModel out(m.size() + copies - 1);
  out.add_offset(m.offset());
  for (std::size_t i = 0; i < m.size(); ++i) out.add_field(i, m.h()[i]);
  std::size_t dealt = 0;
  for (const auto& [key, J] : m.couplings()) {
    auto [i, j] = key;
    if (i == variable) i = chain[dealt++ % copies];
    else if (j == variable) j = chain[dealt++ % copies];
    out.add_coupling(i, j, J);
  }
  for (std::size_t k = 1; k < copies; ++k) {
    out.add_coupling(chain[k - 1], chain[k], -p);
    out.add_offset(p);
  }
  return out;
}

}  // namespace quip
