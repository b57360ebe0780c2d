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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quip {

using IntVector = std::vector<std::int64_t>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  // Throws DimensionError on ragged input.
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector column(std::size_t c) const;
  std::vector<IntVector> to_rows() const;
  bool has_negative() const;

  // A x; throws DimensionError on length mismatch and ParameterError on
  // 64-bit overflow.
  IntVector apply(std::span<const std::int64_t> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::string to_string(std::span<const std::int64_t> v);

}  // namespace quip
