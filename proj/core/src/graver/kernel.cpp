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
#include <limits>

#include "quip/algebra/rational.hpp"
#include "quip/common/errors.hpp"
#include "quip/graver/graver.hpp"

namespace quip {
namespace {

using BigVector = std::vector<BigInt>;

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw ComputationLimitError("kernel entry exceeds 64 bits");
  return v.get_si();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt round_nearest(const mpq_class& x) {
  mpq_class shifted = x + mpq_class(1, 2);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

mpq_class dot(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact LLL reduction with delta = 3/4.
void lll_reduce(std::vector<BigVector>& basis) {
  const std::size_t k_count = basis.size();
  if (k_count < 2) return;
  const std::size_t dim = basis[0].size();
  const mpq_class delta(3, 4);
  std::vector<std::vector<mpq_class>> star(k_count, std::vector<mpq_class>(dim));
  std::vector<std::vector<mpq_class>> mu(k_count, std::vector<mpq_class>(k_count));
  std::vector<mpq_class> norm(k_count);

  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < k_count; ++i) {
      for (std::size_t d = 0; d < dim; ++d) star[i][d] = mpq_class(basis[i][d]);
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<mpq_class> bi(dim);
        for (std::size_t d = 0; d < dim; ++d) bi[d] = mpq_class(basis[i][d]);
        mu[i][j] = dot(bi, star[j]) / norm[j];
        for (std::size_t d = 0; d < dim; ++d) star[i][d] -= mu[i][j] * star[j][d];
      }
      norm[i] = dot(star[i], star[i]);
    }
  };
  gram_schmidt();

  std::size_t k = 1;
  while (k < k_count) {
    for (std::size_t jj = k; jj-- > 0;) {
      const BigInt q = round_nearest(mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t d = 0; d < dim; ++d) basis[k][d] -= q * basis[jj][d];
      for (std::size_t i = 0; i < jj; ++i) mu[k][i] -= mpq_class(q) * mu[jj][i];
      mu[k][jj] -= mpq_class(q);
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

}  // namespace

std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  // Columns of [A; I], reduced by unimodular column operations.
  std::vector<BigVector> cols(n, BigVector(m + n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) cols[c][r] = to_big(A(r, c));
    cols[c][m + c] = 1;
  }
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m && pivot < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = pivot; c < n; ++c) {
        if (cols[c][r] != 0 && (best == n || abs(cols[c][r]) < abs(cols[best][r]))) best = c;
      }
      if (best == n) break;
      std::swap(cols[pivot], cols[best]);
      bool done = true;
      for (std::size_t c = pivot + 1; c < n; ++c) {
        if (cols[c][r] == 0) continue;
        const BigInt q = floor_div(cols[c][r], cols[pivot][r]);
        for (std::size_t d = 0; d < m + n; ++d) cols[c][d] -= q * cols[pivot][d];
        if (cols[c][r] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<BigVector> kernel;
  for (std::size_t c = pivot; c < n; ++c) {
    kernel.emplace_back(cols[c].begin() + static_cast<std::ptrdiff_t>(m), cols[c].end());
  }
  lll_reduce(kernel);
  std::vector<LatticeVector> out;
  for (const auto& v : kernel) {
    LatticeVector x(n);
    for (std::size_t d = 0; d < n; ++d) x[d] = to_int64(v[d]);
    if (A.apply(x) != IntVector(m, 0)) throw InvariantError("kernel vector fails Av = 0");
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace quip
