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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quip/algebra/poly_io.hpp"
#include "quip/common/constraint_system.hpp"
#include "quip/common/graph.hpp"

namespace quip {

// Problem document (JSON). Every section is optional:
//
//   {
//     "name": "...",
//     "variables": ["x", "y", ...],
//     "A": [[...], ...], "b": [...],
//     "sense": ["=", "<=", ...],
//     "bounds": {"lower": [0, null, ...], "upper": [...]},
//     "objective": {"linear": [2, "1/2", ...]}
//                | {"polynomial": "x*y - 2*z"}
//                | {"builtin": "capital-budgeting", "mu": [...], "sigma": [...], "epsilon": 0.1},
//     "graph": {"vertices": 10, "edges": [[0, 1], [1, 2, "3/2"], ...]},
//     "metadata": { any JSON object }
//   }
//
// Exact numbers are JSON integers or "p/q" strings. Bounds may also be a
// single integer applied to every variable; null means unbounded.
struct ObjectiveSpec {
  enum class Kind { kNone, kLinear, kPolynomial, kBuiltin };

  Kind kind = Kind::kNone;
  std::vector<Rational> linear;
  std::string polynomial;  // text in the problem's variable names
  std::string builtin;     // "capital-budgeting"
  std::vector<double> mu;
  std::vector<double> sigma;
  double epsilon = 0;
};

struct ProblemFile {
  std::string name;
  std::vector<std::string> variables;  // empty: x0, x1, ...
  std::optional<IntMatrix> A;
  IntVector b;
  std::vector<bool> inequality;
  std::vector<std::optional<std::int64_t>> lower;
  std::vector<std::optional<std::int64_t>> upper;
  ObjectiveSpec objective;
  std::optional<Graph> graph;
  std::string metadata;  // compact JSON text, empty when absent

  std::size_t variable_count() const;
  VariableNames names() const;

  // The constraint system with a linear or polynomial objective attached
  // (builtin objectives stay oracle-only). ValidationError without A.
  ConstraintSystem system() const;
  // Double-precision oracle for any objective kind; PreconditionError for
  // kNone.
  ObjectiveOracle oracle() const;
};

// ParseError (line:column) on malformed JSON, ValidationError with a JSON
// pointer on unknown fields, wrong types and inconsistent dimensions.
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::string& path);

// Canonical form; parse_problem(print_problem(p)) prints identically.
std::string print_problem(const ProblemFile& problem);

// A bare matrix [[...], ...] or a problem document with an "A" section.
IntMatrix parse_matrix(std::string_view text);

// Whole file as a string; ParameterError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace quip
