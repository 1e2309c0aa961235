// Copyright 2026 The sparserank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank {

/// mate[v] is the partner of v, or nullopt when v is unmatched.
using Mates = std::vector<std::optional<Vertex>>;

/// Hopcroft-Karp. Mates are indexed by global labels.
Mates maximum_matching_mates(const BipartiteGraph& b);

/// Edmonds' blossom algorithm, O(V^3).
Mates maximum_matching_mates(const Graph& g);

std::size_t max_matching(const BipartiteGraph& b);
std::size_t max_matching(const Graph& g);

/// Largest number of vertices covered by vertex-disjoint cycles and edges,
/// computed as the maximum matching of the bipartite double cover.
std::size_t sigma(const Graph& g);

/// True when mates describe a matching of g (symmetric, along edges).
bool is_matching(const Graph& g, const Mates& mates);

}  // namespace sparserank
