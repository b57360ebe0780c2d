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

#include "quip/common/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "quip/common/errors.hpp"

namespace quip {

void Graph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw ParameterError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") references a vertex outside 0.." +
                           std::to_string(vertex_count));
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw ParameterError("repeated edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")");
    }
  }
}

}  // namespace quip
