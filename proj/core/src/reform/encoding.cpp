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

#include "quip/common/errors.hpp"
#include "quip/reform/reform.hpp"

namespace quip {
namespace {

int floor_log2(std::uint64_t v) { return 63 - __builtin_clzll(v); }

// 1, 2, ..., 2^(d-2) and a final term that lands the sum on `range`.
std::vector<std::int64_t> clipped_binary(std::int64_t range) {
  std::vector<std::int64_t> k;
  if (range == 0) return k;
  const int d = floor_log2(static_cast<std::uint64_t>(range)) + 1;
  std::int64_t sum = 0;
  for (int j = 0; j + 1 < d; ++j) {
    k.push_back(std::int64_t{1} << j);
    sum += k.back();
  }
  k.push_back(range - sum);
  return k;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ParameterError("integer overflow while binarizing");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ParameterError("integer overflow while binarizing");
  return r;
}

using TermMap = std::map<Monomial, Rational>;

void add_clamped(TermMap& acc, Monomial m, const Rational& c) {
  for (std::size_t v = 0; v < m.arity(); ++v) m[v] = std::min<Monomial::Exponent>(m[v], 1);
  auto [it, inserted] = acc.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
}

SparsePolynomial from_map(std::size_t arity, TermMap& acc) {
  std::vector<Term> terms;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, c});
  }
  return SparsePolynomial::from_terms(arity, std::move(terms));
}

// Product of two multilinear polynomials, reduced with x^2 = x.
SparsePolynomial multilinear_product(const SparsePolynomial& a, const SparsePolynomial& b) {
  TermMap acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) add_clamped(acc, s.monomial * t.monomial, s.coefficient * t.coefficient);
  }
  return from_map(a.arity(), acc);
}

// f(L + E X) over the bits X, multilinear.
SparsePolynomial substitute(const SparsePolynomial& f, const EncodingMap& map) {
  const std::size_t bits = map.bit_count();
  std::vector<SparsePolynomial> subs;
  for (std::size_t i = 0; i < map.variable_count(); ++i) {
    const auto& enc = map.variable(i);
    std::vector<Term> terms;
    terms.push_back({Monomial(bits), Rational(static_cast<long long>(enc.lower))});
    for (std::size_t j = 0; j < enc.width(); ++j) {
      terms.push_back({Monomial::variable(bits, map.first_bit(i) + j),
                       Rational(static_cast<long long>(enc.k[j]))});
    }
    subs.push_back(SparsePolynomial::from_terms(bits, std::move(terms)));
  }
  SparsePolynomial out(bits);
  for (const auto& t : f.terms()) {
    SparsePolynomial prod = SparsePolynomial::constant(bits, t.coefficient);
    for (std::size_t v = 0; v < t.monomial.arity(); ++v) {
      for (Monomial::Exponent e = 0; e < t.monomial[v]; ++e) prod = multilinear_product(prod, subs[v]);
    }
    out += prod;
  }
  return out;
}

}  // namespace

EncodingScheme EncodingScheme::from_name(const std::string& name, std::int64_t mu) {
  if (name == "binary") return binary();
  if (name == "unary") return unary();
  if (name == "bounded") {
    if (mu < 1) throw ParameterError("bounded encoding needs mu >= 1, got " + std::to_string(mu));
    return bounded(mu);
  }
  throw ParameterError("unknown encoding scheme '" + name + "' (expected binary, unary or bounded)");
}

std::string EncodingScheme::name() const {
  switch (kind) {
    case Kind::kBinary:
      return "binary";
    case Kind::kUnary:
      return "unary";
    case Kind::kBounded:
      return "bounded";
  }
  return "binary";
}

std::int64_t VariableEncoding::decode(std::span<const std::int8_t> bits) const {
  if (bits.size() < k.size()) throw DimensionError("too few bits to decode");
  std::int64_t y = lower;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (bits[j] != 0) y += k[j];
  }
  return y;
}

std::vector<std::int8_t> VariableEncoding::encode(std::int64_t y) const {
  if (y < lower || y > upper) {
    throw ParameterError("value " + std::to_string(y) + " outside [" + std::to_string(lower) + ", " +
                         std::to_string(upper) + "]");
  }
  std::vector<std::size_t> order(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] > k[b]; });
  std::vector<std::int8_t> bits(k.size(), 0);
  std::int64_t rest = y - lower;
  for (std::size_t j : order) {
    if (k[j] <= rest) {
      bits[j] = 1;
      rest -= k[j];
    }
  }
  if (rest != 0) throw InvariantError("encoding cannot represent " + std::to_string(y));
  return bits;
}

VariableEncoding make_encoding(std::int64_t lower, std::int64_t upper, const EncodingScheme& scheme) {
  if (upper < lower) {
    throw ParameterError("upper bound " + std::to_string(upper) + " below lower bound " +
                         std::to_string(lower));
  }
  VariableEncoding enc{lower, upper, {}};
  const std::int64_t range = upper - lower;
  switch (scheme.kind) {
    case EncodingScheme::Kind::kBinary:
      enc.k = clipped_binary(range);
      break;
    case EncodingScheme::Kind::kUnary:
      enc.k.assign(static_cast<std::size_t>(range), 1);
      break;
    case EncodingScheme::Kind::kBounded: {
      if (scheme.mu < 1) throw ParameterError("bounded encoding needs mu >= 1, got " + std::to_string(scheme.mu));
      const int rho = floor_log2(static_cast<std::uint64_t>(scheme.mu)) + 1;
      const std::int64_t powers = (std::int64_t{1} << rho) - 1;
      if (range <= powers) {
        enc.k = clipped_binary(range);
        break;
      }
      for (int j = 0; j < rho; ++j) enc.k.push_back(std::int64_t{1} << j);
      const std::int64_t v = range - powers;
      const std::int64_t eta = v / scheme.mu;
      for (std::int64_t j = 0; j < eta; ++j) enc.k.push_back(scheme.mu);
      if (v - eta * scheme.mu != 0) enc.k.push_back(v - eta * scheme.mu);
      break;
    }
  }
  return enc;
}

EncodingMap::EncodingMap(std::vector<VariableEncoding> vars) : vars_(std::move(vars)) {
  for (const auto& v : vars_) {
    first_.push_back(bits_);
    bits_ += v.width();
  }
}

IntMatrix EncodingMap::E() const {
  IntMatrix e(vars_.size(), bits_);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < vars_[i].width(); ++j) e(i, first_[i] + j) = vars_[i].k[j];
  }
  return e;
}

IntVector EncodingMap::L() const {
  IntVector l;
  for (const auto& v : vars_) l.push_back(v.lower);
  return l;
}

IntVector EncodingMap::decode(std::span<const std::int8_t> bits) const {
  if (bits.size() < bits_) {
    throw DimensionError("configuration has " + std::to_string(bits.size()) + " bits, encoding needs " +
                         std::to_string(bits_));
  }
  IntVector x;
  for (std::size_t i = 0; i < vars_.size(); ++i) x.push_back(vars_[i].decode(bits.subspan(first_[i])));
  return x;
}

std::vector<std::int8_t> EncodingMap::encode(std::span<const std::int64_t> x) const {
  if (x.size() != vars_.size()) throw DimensionError("point has the wrong number of variables");
  std::vector<std::int8_t> bits;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto b = vars_[i].encode(x[i]);
    bits.insert(bits.end(), b.begin(), b.end());
  }
  return bits;
}

SparsePolynomial multilinearize(const SparsePolynomial& f) {
  TermMap acc;
  for (const auto& t : f.terms()) add_clamped(acc, t.monomial, t.coefficient);
  return from_map(f.arity(), acc);
}

Binarized binarize(const ConstraintSystem& ip_in, const EncodingScheme& scheme) {
  ConstraintSystem ip = ip_in;
  ip.normalize();
  const std::size_t n = ip.variable_count(), m = ip.row_count();
  std::vector<VariableEncoding> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ip.lower[i] || !ip.upper[i]) {
      throw UnboundedError("variable " + std::to_string(i) + " needs finite bounds to be binarized");
    }
    vars.push_back(make_encoding(*ip.lower[i], *ip.upper[i], scheme));
  }
  Binarized out;
  out.encoding = EncodingMap(std::move(vars));
  const auto& map = out.encoding;
  const std::size_t bits = map.bit_count();
  auto& sys = out.system;
  sys.A = IntMatrix(m, bits);
  sys.b = ip.b;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t a = ip.A(r, i);
      if (a == 0) continue;
      const auto& enc = map.variable(i);
      for (std::size_t j = 0; j < enc.width(); ++j) sys.A(r, map.first_bit(i) + j) = checked_mul(a, enc.k[j]);
      sys.b[r] = checked_add(sys.b[r], -checked_mul(a, enc.lower));
    }
  }
  sys.lower.assign(bits, 0);
  sys.upper.assign(bits, 1);
  sys.inequality = ip.inequality;
  switch (ip.objective.kind) {
    case Objective::Kind::kNone:
      break;
    case Objective::Kind::kLinear: {
      std::vector<Rational> c(bits);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& enc = map.variable(i);
        const Rational& ci = ip.objective.linear[i];
        for (std::size_t j = 0; j < enc.width(); ++j) {
          c[map.first_bit(i) + j] = ci * Rational(static_cast<long long>(enc.k[j]));
        }
        out.objective_offset += ci * Rational(static_cast<long long>(enc.lower));
      }
      sys.objective = Objective::make_linear(std::move(c));
      break;
    }
    case Objective::Kind::kPolynomial:
      sys.objective = Objective::make_polynomial(substitute(ip.objective.polynomial, map));
      break;
  }
  sys.normalize();
  return out;
}

}  // namespace quip
