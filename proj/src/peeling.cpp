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

#include "sparserank/peeling.hpp"

#include <functional>
#include <queue>
#include <random>

#include "sparserank/rng.hpp"

namespace sparserank {

namespace {

// Pending degree-1 vertices. Entries go stale when a vertex dies or its
// degree changes; the caller revalidates on pop.
class LeafWorklist {
 public:
  explicit LeafWorklist(const LeafOrder& order)
      : kind_(order.kind), rng_(order.seed) {}

  void push(Vertex v) {
    if (kind_ == LeafOrder::Kind::kLowestIndex) {
      heap_.push(v);
    } else {
      bag_.push_back(v);
    }
  }

  bool empty() const {
    return kind_ == LeafOrder::Kind::kLowestIndex ? heap_.empty()
                                                  : bag_.empty();
  }

  Vertex pop() {
    if (kind_ == LeafOrder::Kind::kLowestIndex) {
      const Vertex v = heap_.top();
      heap_.pop();
      return v;
    }
    std::uniform_int_distribution<std::size_t> pick(0, bag_.size() - 1);
    const std::size_t i = pick(rng_);
    const Vertex v = bag_[i];
    bag_[i] = bag_.back();
    bag_.pop_back();
    return v;
  }

 private:
  LeafOrder::Kind kind_;
  Rng rng_;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> heap_;
  std::vector<Vertex> bag_;
};

struct Peeled {
  std::vector<bool> alive;
  std::vector<std::size_t> degree;
  std::size_t steps = 0;
  std::vector<Edge> trace;
};

Peeled leaf_removal(const Graph& g, const KSOptions& options) {
  const std::size_t n = g.num_vertices();
  Peeled p;
  p.alive.assign(n, true);
  p.degree.resize(n);
  LeafWorklist leaves(options.order);
  for (Vertex v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
    if (p.degree[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const Vertex leaf = leaves.pop();
    if (!p.alive[leaf] || p.degree[leaf] != 1) continue;
    Vertex hub = leaf;
    for (Vertex w : g.neighbors(leaf)) {
      if (p.alive[w]) {
        hub = w;
        break;
      }
    }
    p.alive[leaf] = false;
    p.alive[hub] = false;
    p.degree[leaf] = 0;
    p.degree[hub] = 0;
    for (Vertex x : g.neighbors(hub)) {
      if (!p.alive[x]) continue;
      if (--p.degree[x] == 1) leaves.push(x);
    }
    ++p.steps;
    if (options.record_trace) p.trace.emplace_back(leaf, hub);
  }
  return p;
}

}  // namespace

KSResult karp_sipser(const Graph& g, const KSOptions& options) {
  Peeled p = leaf_removal(g, options);
  KSResult r;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!p.alive[v]) continue;
    if (p.degree[v] == 0) {
      ++r.isolated;
    } else {
      keep.push_back(v);
    }
  }
  r.core = induced_subgraph(g, keep);
  r.steps = p.steps;
  r.trace = std::move(p.trace);
  return r;
}

BipartiteKSResult karp_sipser(const BipartiteGraph& b,
                              const KSOptions& options) {
  const Graph& g = b.graph();
  Peeled p = leaf_removal(g, options);
  BipartiteKSResult r;
  std::vector<Vertex> keep;
  std::size_t core_first = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!p.alive[v]) continue;
    const bool first = b.side(v) == Side::kFirst;
    if (p.degree[v] == 0) {
      ++(first ? r.isolated_first : r.isolated_second);
    } else {
      keep.push_back(v);
      if (first) ++core_first;
    }
  }
  Subgraph sub = induced_subgraph(g, keep);
  r.core = BipartiteGraph::from_graph(core_first, std::move(sub.graph));
  r.original = std::move(sub.original);
  r.steps = p.steps;
  r.trace = std::move(p.trace);
  return r;
}

Subgraph k_core(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<bool> alive(n, true);
  std::vector<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      alive[v] = false;
      doomed.push_back(v);
    }
  }
  while (!doomed.empty()) {
    const Vertex v = doomed.back();
    doomed.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --degree[w] < k) {
        alive[w] = false;
        doomed.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace sparserank
