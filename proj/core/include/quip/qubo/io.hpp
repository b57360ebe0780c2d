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

#include <iosfwd>
#include <string>

#include "quip/common/graph.hpp"
#include "quip/qubo/models.hpp"

namespace quip {

// .qubo: "p qubo n nnz", an optional "offset v" line, then nnz lines "i j v"
// with 0-based i <= j; i == j is a linear term, i < j the coefficient of
// x_i x_j. Values are rationals ("p/q") or decimals. Lines starting with 'c'
// or '#' are comments.
QuboModel read_qubo(std::istream& in);
void write_qubo(std::ostream& out, const QuboModel& q);

// .ising: "p ising n nnz", an optional "offset v" line, then nnz lines
// "h i v" or "J i j v".
IsingModel read_ising(std::istream& in);
void write_ising(std::ostream& out, const IsingModel& m);

// DIMACS edge format: "p edge n m" and m lines "e u v [w]", 1-based.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

std::string to_text(const QuboModel& q);
std::string to_text(const IsingModel& m);

// FNV digest of the canonical text form.
std::string model_digest(const QuboModel& q);
std::string model_digest(const IsingModel& m);

}  // namespace quip
