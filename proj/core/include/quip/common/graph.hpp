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
#include <vector>

#include "quip/algebra/rational.hpp"

namespace quip {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph on vertices 0..vertex_count-1.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  // Throws ParameterError on self-loops, out-of-range endpoints or repeated
  // edges.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

}  // namespace quip
