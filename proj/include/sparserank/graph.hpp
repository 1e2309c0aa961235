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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sparserank {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in CSR form with each neighbor list sorted, so edge
/// membership is a binary search. The edge list is kept canonically: every
/// pair has first < second and the list is sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Duplicate pairs (in either orientation) are
  /// merged. Throws Error{kVertexOutOfRange} or Error{kLoopRejected}.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// A graph together with the labels its vertices carried in the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // new label -> parent label

  /// Parent label -> new label, or -1 when the parent vertex was dropped.
  std::vector<std::int64_t> index_map(std::size_t parent_size) const;
};

/// Subgraph induced by `vertices` (duplicates ignored). New labels follow
/// increasing parent label, so passing every vertex is the identity map.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Components by decreasing size; ties broken by smallest member. Each
/// component is listed in increasing vertex order.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class Side { kFirst, kSecond };

/// Bipartite graph with parts V1 = {0..n1-1} and V2 = {n1..n1+n2-1} in the
/// underlying graph. Edge lists exchanged with callers use part-local
/// indices: (u, w) with u < n1 and w < n2.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  static BipartiteGraph from_edges(std::size_t n1, std::size_t n2,
                                   std::span<const Edge> local_edges);

  /// Wraps a graph whose vertices are already split as V1 = {0..n1-1}.
  /// Throws Error{kInvalidArgument} if some edge stays inside a part.
  static BipartiteGraph from_graph(std::size_t n1, Graph g);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return graph_.num_vertices() - n1_; }
  std::size_t num_edges() const noexcept { return graph_.num_edges(); }

  /// Underlying graph with global labels.
  const Graph& graph() const noexcept { return graph_; }

  Side side(Vertex global) const noexcept {
    return global < n1_ ? Side::kFirst : Side::kSecond;
  }
  /// Index of a global vertex inside its own part.
  Vertex local(Vertex global) const noexcept {
    return global < n1_ ? global : static_cast<Vertex>(global - n1_);
  }
  Vertex global_second(Vertex local_w) const noexcept {
    return static_cast<Vertex>(n1_ + local_w);
  }

  /// Part-local edge list, sorted.
  std::vector<Edge> local_edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n1_ == b.n1_ && a.graph_ == b.graph_;
  }

 private:
  std::size_t n1_ = 0;
  Graph graph_;
};

/// Rows-by-columns incidence of A(G): part V1 is a row copy of V(G), part V2
/// a column copy, and (u, v) is an edge whenever {u, v} is an edge of G.
BipartiteGraph bipartite_double(const Graph& g);

/// Multigraph with loops and parallel edges. A loop adds 2 to the degree.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degrees() const;
  std::size_t num_loops() const noexcept;
  bool is_simple() const;

  /// Throws Error{kLoopRejected} on loops; parallel edges must be absent too
  /// (Error{kInvalidArgument}).
  Graph to_simple() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // each stored with first <= second
};

}  // namespace sparserank
