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

#include <string>
#include <string_view>
#include <vector>

#include "quip/algebra/polynomial.hpp"

namespace quip {

// Text form of polynomials, e.g. "3/2*x0^2*x1 - x2 + 1".
//
// With an empty name list, variables are written x<index> and the arity is
// taken from `arity`. With names, only those names are accepted and the
// arity is names.size().
struct VariableNames {
  std::vector<std::string> names;
  std::size_t arity = 0;

  static VariableNames indexed(std::size_t arity) { return {{}, arity}; }
  static VariableNames named(std::vector<std::string> names) {
    const std::size_t n = names.size();
    return {std::move(names), n};
  }
  // Splits "x,y,z".
  static VariableNames parse_list(std::string_view comma_separated);

  std::string name(std::size_t var) const;
};

// Exact printer. Terms appear in canonical storage order, so
// parse_polynomial(to_string(f)) == f.
std::string to_string(const SparsePolynomial& f, const VariableNames& vars);

// Printer for humans: the primitive integer multiple of f, terms in
// descending `order`.
std::string to_display_string(const SparsePolynomial& f, const VariableNames& vars,
                              const MonomialOrder& order);

// Throws ParseError with a 1-based line and column on malformed input,
// unknown variables or trailing garbage.
SparsePolynomial parse_polynomial(std::string_view text, const VariableNames& vars);

// One polynomial per non-empty line; '#' starts a comment.
std::vector<SparsePolynomial> parse_polynomial_list(std::string_view text,
                                                    const VariableNames& vars);

}  // namespace quip
