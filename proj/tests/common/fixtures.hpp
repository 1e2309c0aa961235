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

#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank::fixtures {

inline Graph make(std::size_t n, std::vector<Edge> edges) {
  return build_graph(n, edges);
}

inline BipartiteGraph make_bip(std::size_t n1, std::size_t n2,
                               std::vector<Edge> local_edges) {
  return BipartiteGraph::from_edges(n1, n2, local_edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return build_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return build_graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return build_graph(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return build_graph(leaves + 1, e);
}

/// Disjoint union, second graph relabeled after the first.
inline Graph disjoint(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (auto [u, v] : b.edges()) e.push_back({u + shift, v + shift});
  return build_graph(a.num_vertices() + b.num_vertices(), e);
}

/// 4-cycle 0-1-2-3 where 0 and 2 carry one pendant each (4 and 5).
inline Graph pendant_square() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
}

}  // namespace sparserank::fixtures
