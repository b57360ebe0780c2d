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
#include <deque>
#include <unordered_set>

#include "quip/common/errors.hpp"
#include "quip/graver/graver.hpp"

namespace quip {
namespace {

struct VectorHash {
  std::size_t operator()(const LatticeVector& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool opposite_signs_somewhere(const LatticeVector& a, const LatticeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return true;
  }
  return false;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &s[i])) {
      throw ComputationLimitError("lattice vector entry exceeds 64 bits");
    }
  }
  return s;
}

LatticeVector negate(LatticeVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

bool conformal_leq(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() != v.size()) throw DimensionError("conformal_leq: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (u[i] > 0 ? (v[i] < u[i]) : (v[i] > u[i])) return false;
  }
  return true;
}

LatticeVector vector_normal_form(LatticeVector s, std::span<const LatticeVector> G) {
  bool reduced = true;
  while (reduced && !is_zero(s)) {
    reduced = false;
    for (const auto& g : G) {
      if (g.size() != s.size()) throw DimensionError("vector_normal_form: length mismatch");
      if (is_zero(g) || !conformal_leq(g, s)) continue;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] -= g[i];
      reduced = true;
      break;
    }
  }
  return s;
}

std::vector<LatticeVector> minimal_filter(std::vector<LatticeVector> K, bool sign_close) {
  if (sign_close) {
    const std::size_t size = K.size();
    for (std::size_t i = 0; i < size; ++i) K.push_back(negate(K[i]));
  }
  std::erase_if(K, is_zero);
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < K.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < K.size() && minimal; ++j) {
      if (j != i && conformal_leq(K[j], K[i])) minimal = false;
    }
    if (minimal) out.push_back(K[i]);
  }
  return out;
}

GraverBasis pottier(const IntMatrix& A, const PottierOptions& options) {
  GraverBasis result;
  result.A = A;
  std::vector<LatticeVector> G;
  for (auto& f : integer_kernel_basis(A)) {
    G.push_back(negate(f));
    G.push_back(std::move(f));
  }
  std::deque<LatticeVector> queue;
  std::unordered_set<LatticeVector, VectorHash> seen;
  auto enqueue = [&](const LatticeVector& a, const LatticeVector& b) {
    if (options.sign_restriction && !opposite_signs_somewhere(a, b)) return;
    LatticeVector s = add(a, b);
    if (is_zero(s) || !seen.insert(s).second) return;
    queue.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) enqueue(G[i], G[j]);
  }
  while (!queue.empty()) {
    LatticeVector r = vector_normal_form(std::move(queue.front()), G);
    queue.pop_front();
    if (is_zero(r)) continue;
    for (const auto& g : G) enqueue(r, g);
    G.push_back(std::move(r));
    if (G.size() + queue.size() > options.max_elements) {
      throw ComputationLimitError("pottier: working set exceeds " +
                                  std::to_string(options.max_elements) + " vectors");
    }
  }
  result.elements = minimal_filter(std::move(G), true);
  return result;
}

}  // namespace quip
