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

#include "quip/common/errors.hpp"
#include "quip/reform/reform.hpp"

namespace quip {
namespace {

Rational to_rational(std::int64_t v) { return Rational(static_cast<long long>(v)); }

// Non-constant coefficients of the objective of a 0/1 system.
std::vector<Rational> objective_coefficients(const ConstraintSystem& ip) {
  switch (ip.objective.kind) {
    case Objective::Kind::kNone:
      return {};
    case Objective::Kind::kLinear:
      return ip.objective.linear;
    case Objective::Kind::kPolynomial: {
      std::vector<Rational> c;
      const SparsePolynomial g = multilinearize(ip.objective.polynomial);
      for (const auto& t : g.terms()) {
        if (!t.monomial.is_one()) c.push_back(t.coefficient);
      }
      return c;
    }
  }
  return {};
}

void add_polynomial(QuboModel& q, const SparsePolynomial& f) {
  for (const auto& t : f.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < t.monomial.arity(); ++v) {
      for (Monomial::Exponent e = 0; e < t.monomial[v]; ++e) vars.push_back(v);
    }
    if (vars.empty()) {
      q.add_offset(t.coefficient);
    } else if (vars.size() == 1) {
      q.add_linear(vars[0], t.coefficient);
    } else if (vars.size() == 2) {
      q.add_pair(vars[0], vars[1], t.coefficient);
    } else {
      throw InvariantError("term of degree " + std::to_string(vars.size()) + " left after quadratization");
    }
  }
}

Rational squared_residual(const IntMatrix& A, const IntVector& b, std::span<const std::int8_t> bits) {
  Rational total;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    __int128 s = -static_cast<__int128>(b[r]);
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (bits[c] != 0) s += A(r, c);
    }
    const Rational d = to_rational(static_cast<std::int64_t>(s));
    total += d * d;
  }
  return total;
}

}  // namespace

ConstraintSystem inequality_to_equality(const ConstraintSystem& ip_in) {
  ConstraintSystem ip = ip_in;
  ip.normalize();
  const std::size_t n = ip.variable_count(), m = ip.row_count();
  std::vector<std::size_t> rows;
  std::vector<std::int64_t> gaps;
  for (std::size_t r = 0; r < m; ++r) {
    if (!ip.inequality[r]) continue;
    __int128 activity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t a = ip.A(r, j);
      if (a == 0) continue;
      const auto& bound = a > 0 ? ip.lower[j] : ip.upper[j];
      if (!bound) {
        throw UnboundedError("row " + std::to_string(r) + " has no finite minimum activity (variable " +
                             std::to_string(j) + ")");
      }
      activity += static_cast<__int128>(a) * *bound;
    }
    const __int128 gap = static_cast<__int128>(ip.b[r]) - activity;
    if (gap < 0) {
      throw InfeasibleError("row " + std::to_string(r) + " cannot be satisfied within the bounds",
                            "inequality_gap_negative");
    }
    if (gap > INT64_MAX) throw ParameterError("slack range of row " + std::to_string(r) + " overflows");
    rows.push_back(r);
    gaps.push_back(static_cast<std::int64_t>(gap));
  }
  if (rows.empty()) return ip;
  ConstraintSystem out;
  out.A = IntMatrix(m, n + rows.size());
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) out.A(r, j) = ip.A(r, j);
  }
  for (std::size_t s = 0; s < rows.size(); ++s) out.A(rows[s], n + s) = 1;
  out.b = ip.b;
  out.lower = ip.lower;
  out.upper = ip.upper;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    out.lower.emplace_back(0);
    out.upper.emplace_back(gaps[s]);
  }
  out.inequality.assign(m, false);
  switch (ip.objective.kind) {
    case Objective::Kind::kNone:
      break;
    case Objective::Kind::kLinear: {
      auto c = ip.objective.linear;
      c.resize(n + rows.size());
      out.objective = Objective::make_linear(std::move(c));
      break;
    }
    case Objective::Kind::kPolynomial: {
      std::vector<std::size_t> map(n);
      for (std::size_t j = 0; j < n; ++j) map[j] = j;
      out.objective = Objective::make_polynomial(ip.objective.polynomial.remap(n + rows.size(), map));
      break;
    }
  }
  out.normalize();
  return out;
}

PenaltyWeights penalty_bound(const ConstraintSystem& ip_in) {
  ConstraintSystem ip = ip_in;
  ip.normalize();
  for (std::size_t j = 0; j < ip.variable_count(); ++j) {
    if (ip.lower[j] != std::optional<std::int64_t>(0) || ip.upper[j] != std::optional<std::int64_t>(1)) {
      throw PreconditionError("penalty_bound needs a 0/1 system; variable " + std::to_string(j) +
                              " is not binary");
    }
  }
  PenaltyWeights w;
  Rational abs_sum;
  for (const auto& c : objective_coefficients(ip)) {
    if (c.sign() > 0) w.delta_hb_max += c;
    abs_sum += c.abs();
  }
  // max(1, 1/2 sum_i (-1)^sigma_i A_ij) is minimized by letting every sign
  // oppose its coefficient, which drives the inner sum to -sum |A_ij| / 2.
  w.delta_ha_min = Rational(1);
  for (std::size_t r = 0; r < ip.row_count(); ++r) {
    Rational lowest;
    for (std::size_t j = 0; j < ip.variable_count(); ++j) {
      lowest -= Rational(static_cast<long long>(std::llabs(ip.A(r, j))), 2);
    }
    w.delta_ha_min = std::min(w.delta_ha_min, std::max(Rational(1), lowest));
  }
  w.abs_sum_bound = abs_sum + Rational(1);
  w.rho = std::max(Rational(1), w.abs_sum_bound);
  w.lambda = w.rho;
  return w;
}

IntVector CompiledQubo::decode(std::span<const std::int8_t> bits) const {
  IntVector x = encoding.decode(bits);
  x.resize(original_variables);
  return x;
}

Rational CompiledQubo::penalty(std::span<const std::int8_t> bits) const {
  if (bits.size() != qubo.size()) throw DimensionError("configuration length differs from the QUBO size");
  Rational p = weights.rho * squared_residual(binary_A, binary_b, bits);
  for (const auto& a : ancillas) {
    const int xi = bits[a.i], xj = bits[a.j], y = bits[a.index];
    p += ancilla_weight * Rational(3 * y + xi * xj - 2 * y * xi - 2 * y * xj);
  }
  return p;
}

bool CompiledQubo::feasible(std::span<const std::int8_t> bits) const {
  if (bits.size() != qubo.size()) throw DimensionError("configuration length differs from the QUBO size");
  return squared_residual(binary_A, binary_b, bits).is_zero();
}

CompiledQubo compile_qubo(const ConstraintSystem& ip_in, const EncodingScheme& scheme,
                          const std::optional<PenaltyWeights>& weights) {
  ConstraintSystem ip = ip_in;
  ip.normalize();
  const ConstraintSystem equalities = inequality_to_equality(ip);
  Binarized bin = binarize(equalities, scheme);
  const std::size_t bits = bin.encoding.bit_count();

  CompiledQubo out;
  out.original_variables = ip.variable_count();
  out.slack_variables = equalities.variable_count() - ip.variable_count();
  out.weights = weights ? *weights : penalty_bound(bin.system);
  if (out.weights.rho.sign() <= 0) throw ParameterError("rho must be positive");

  SparsePolynomial objective = bin.system.objective.as_polynomial(bits);
  objective += SparsePolynomial::constant(bits, bin.objective_offset);
  const Quadratization quad = quadratize(objective);
  out.ancillas = quad.ancillas;
  out.ancilla_weight = quad.weight;
  out.objective = quad.objective;
  out.qubo = QuboModel(quad.objective.arity());
  add_polynomial(out.qubo, quad.total());

  // rho (a X - b)^2 = rho (sum a_j^2 X_j + 2 sum_{j<k} a_j a_k X_j X_k - 2 b a X + b^2).
  const IntMatrix& A = bin.system.A;
  const Rational& rho = out.weights.rho;
  for (std::size_t r = 0; r < A.rows(); ++r) {
    const Rational b = to_rational(bin.system.b[r]);
    out.qubo.add_offset(rho * b * b);
    for (std::size_t j = 0; j < bits; ++j) {
      if (A(r, j) == 0) continue;
      const Rational aj = to_rational(A(r, j));
      out.qubo.add_linear(j, rho * (aj * aj - Rational(2) * b * aj));
      for (std::size_t k = j + 1; k < bits; ++k) {
        if (A(r, k) != 0) out.qubo.add_pair(j, k, rho * Rational(2) * aj * to_rational(A(r, k)));
      }
    }
  }
  out.encoding = std::move(bin.encoding);
  out.binary_A = A;
  out.binary_b = bin.system.b;
  return out;
}

}  // namespace quip
