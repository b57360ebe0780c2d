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

#include "quip/common/matrix.hpp"

#include <algorithm>
#include <limits>

#include "quip/common/errors.hpp"

namespace quip {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVector> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty) {
  IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw DimensionError("matrix row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(m.cols_));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

bool IntMatrix::has_negative() const {
  return std::any_of(data_.begin(), data_.end(), [](std::int64_t v) { return v < 0; });
}

IntVector IntMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) {
    throw DimensionError("vector of length " + std::to_string(x.size()) +
                         " applied to matrix with " + std::to_string(cols_) + " columns");
  }
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    __int128 s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += static_cast<__int128>((*this)(r, c)) * x[c];
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min()) {
      throw ParameterError("matrix-vector product overflows 64 bits");
    }
    out[r] = static_cast<std::int64_t>(s);
  }
  return out;
}

std::string to_string(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace quip
