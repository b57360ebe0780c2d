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

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "quip/algebra/rational.hpp"
#include "quip/common/graph.hpp"
#include "quip/common/matrix.hpp"

namespace quip::testing {

// Backtracking k-coloring.
inline bool backtrack_colorable(const Graph& g, unsigned k) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(g.vertex_count, -1);
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v == g.vertex_count) return true;
    for (unsigned c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t w : adj[v]) ok = ok && color[w] != static_cast<int>(c);
      if (!ok) continue;
      color[v] = static_cast<int>(c);
      if (place(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  return place(0);
}

// Visits every integer point of the box [lo, hi].
inline void for_each_in_box(const IntVector& lo, const IntVector& hi,
                            const std::function<void(const IntVector&)>& visit) {
  IntVector x = lo;
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return;
  }
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++x[i];
  }
}

struct BoxOptimum {
  std::optional<IntVector> argmin;
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::size_t feasible = 0;
};

// min c.x over Ax = b, lo <= x <= hi by enumeration.
inline BoxOptimum brute_force_ip(const IntMatrix& A, const IntVector& b, const IntVector& c,
                                 const IntVector& lo, const IntVector& hi) {
  BoxOptimum best;
  for_each_in_box(lo, hi, [&](const IntVector& x) {
    if (A.apply(x) != b) return;
    ++best.feasible;
    std::int64_t v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += c[j] * x[j];
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
    }
  });
  return best;
}

// Whether the rational linear system M y = r is consistent, by Gaussian
// elimination on the augmented matrix.
inline bool linear_system_consistent(std::vector<std::vector<Rational>> aug) {
  const std::size_t rows = aug.size();
  if (rows == 0) return true;
  const std::size_t cols = aug[0].size() - 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      const Rational k = aug[i][c] / aug[r][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= k * aug[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!aug[i][cols].is_zero()) return false;
  }
  return true;
}

// Conformally minimal nonzero kernel vectors with every |v_i| <= bound.
// Every vector conformal to one in the box lies in the box, so the result is
// exactly the Graver elements of infinity norm at most `bound`.
inline std::vector<IntVector> brute_force_graver(const IntMatrix& A, std::int64_t bound) {
  const std::size_t n = A.cols();
  std::vector<IntVector> kernel;
  const IntVector zero_rhs(A.rows(), 0);
  for_each_in_box(IntVector(n, -bound), IntVector(n, bound), [&](const IntVector& x) {
    bool zero = true;
    for (auto v : x) zero = zero && v == 0;
    if (!zero && A.apply(x) == zero_rhs) kernel.push_back(x);
  });
  auto leq = [](const IntVector& u, const IntVector& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      if (u[i] > 0 ? v[i] < u[i] : v[i] > u[i]) return false;
    }
    return true;
  };
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < kernel.size() && minimal; ++j) {
      if (j != i && leq(kernel[j], kernel[i])) minimal = false;
    }
    if (minimal) out.push_back(kernel[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Doubles the box until two consecutive enumerations agree.
inline std::vector<IntVector> brute_force_graver_stable(const IntMatrix& A, std::int64_t bound = 2,
                                                        std::int64_t max_bound = 16) {
  auto current = brute_force_graver(A, bound);
  while (2 * bound <= max_bound) {
    bound *= 2;
    auto next = brute_force_graver(A, bound);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace quip::testing
