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

#include "sparserank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sparserank/errors.hpp"

namespace sparserank {

namespace {

void check_range(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(ErrorKind::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range for n = " +
                    std::to_string(n));
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_range(n, u);
    check_range(n, v);
    if (u == v) {
      throw Error(ErrorKind::kLoopRejected,
                  "loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()),
                 g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : g.edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : g.edges_) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + g.offsets_[v],
              g.targets_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

std::vector<std::int64_t> Subgraph::index_map(std::size_t parent_size) const {
  std::vector<std::int64_t> map(parent_size, -1);
  for (std::size_t i = 0; i < original.size(); ++i) {
    map[original[i]] = static_cast<std::int64_t>(i);
  }
  return map;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t n = g.num_vertices();
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  for (Vertex v : sub.original) check_range(n, v);
  std::sort(sub.original.begin(), sub.original.end());
  sub.original.erase(std::unique(sub.original.begin(), sub.original.end()),
                     sub.original.end());

  const auto map = sub.index_map(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    const Vertex u = sub.original[i];
    for (Vertex w : g.neighbors(u)) {
      if (w > u && map[w] >= 0) {
        edges.emplace_back(static_cast<Vertex>(i),
                           static_cast<Vertex>(map[w]));
      }
    }
  }
  sub.graph = Graph::from_edges(sub.original.size(), edges);
  return sub;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // Discovery order is by smallest member already; a stable sort by size
  // keeps that as the tie-break.
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  return comps;
}

BipartiteGraph BipartiteGraph::from_edges(std::size_t n1, std::size_t n2,
                                          std::span<const Edge> local_edges) {
  std::vector<Edge> global;
  global.reserve(local_edges.size());
  for (auto [u, w] : local_edges) {
    check_range(n1, u);
    check_range(n2, w);
    global.emplace_back(u, static_cast<Vertex>(n1 + w));
  }
  BipartiteGraph b;
  b.n1_ = n1;
  b.graph_ = Graph::from_edges(n1 + n2, global);
  return b;
}

BipartiteGraph BipartiteGraph::from_graph(std::size_t n1, Graph g) {
  for (auto [u, v] : g.edges()) {
    if ((u < n1) == (v < n1)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} lies inside one part");
    }
  }
  BipartiteGraph b;
  b.n1_ = std::min(n1, g.num_vertices());
  b.graph_ = std::move(g);
  return b;
}

std::vector<Edge> BipartiteGraph::local_edges() const {
  std::vector<Edge> out;
  out.reserve(graph_.num_edges());
  for (auto [u, v] : graph_.edges()) {
    out.emplace_back(u, static_cast<Vertex>(v - n1_));
  }
  return out;
}

BipartiteGraph bipartite_double(const Graph& g) {
  std::vector<Edge> local;
  local.reserve(2 * g.num_edges());
  for (auto [u, v] : g.edges()) {
    local.emplace_back(u, v);
    local.emplace_back(v, u);
  }
  return BipartiteGraph::from_edges(g.num_vertices(), g.num_vertices(), local);
}

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    check_range(n, u);
    check_range(n, v);
    if (u > v) std::swap(u, v);
  }
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::size_t MultiGraph::num_loops() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; }));
}

bool MultiGraph::is_simple() const {
  if (num_loops() != 0) return false;
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Graph MultiGraph::to_simple() const {
  if (num_loops() != 0) {
    throw Error(ErrorKind::kLoopRejected, "multigraph has loops");
  }
  if (!is_simple()) {
    throw Error(ErrorKind::kInvalidArgument, "multigraph has parallel edges");
  }
  return Graph::from_edges(n_, edges_);
}

}  // namespace sparserank
