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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sparserank/generators.hpp"
#include "sparserank/linalg.hpp"
#include "sparserank/matching.hpp"
#include "sparserank/peeling.hpp"

namespace sparserank {
namespace {

using fixtures::make;

std::vector<Vertex> CoreVertices(const KSResult& r) { return r.core.original; }

void ExpectAccounting(const Graph& g, const KSResult& r) {
  EXPECT_EQ(g.num_vertices(),
            r.core.graph.num_vertices() + r.isolated + 2 * r.steps);
  for (Vertex v = 0; v < r.core.graph.num_vertices(); ++v) {
    EXPECT_GE(r.core.graph.degree(v), 2u);
  }
}

TEST(KarpSipser, Examples) {
  const KSResult edge = karp_sipser(make(2, {{0, 1}}));
  EXPECT_EQ(edge.core.graph.num_vertices(), 0u);
  EXPECT_EQ(edge.isolated, 0u);
  EXPECT_EQ(edge.steps, 1u);

  const KSResult star = karp_sipser(fixtures::star(3));
  EXPECT_EQ(star.core.graph.num_vertices(), 0u);
  EXPECT_EQ(star.isolated, 2u);
  EXPECT_EQ(star.steps, 1u);

  const KSResult square = karp_sipser(fixtures::cycle(4));
  EXPECT_EQ(square.core.graph, fixtures::cycle(4));
  EXPECT_EQ(square.isolated, 0u);
  EXPECT_EQ(square.steps, 0u);
}

TEST(KarpSipser, BipartitePath) {
  // a-b-c-d with parts {a, c} and {b, d}.
  const BipartiteGraph b = fixtures::make_bip(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const BipartiteKSResult r = karp_sipser(b);
  EXPECT_EQ(r.core.n1() + r.core.n2(), 0u);
  EXPECT_EQ(r.isolated_first, 0u);
  EXPECT_EQ(r.isolated_second, 0u);
  EXPECT_EQ(r.steps, 2u);
}

TEST(KarpSipser, IsolatedVerticesCount) {
  const KSResult r = karp_sipser(make(4, {{1, 2}}));
  EXPECT_EQ(r.isolated, 2u);
  EXPECT_EQ(r.steps, 1u);
}

TEST(KarpSipser, PendantSquareCore) {
  // Removing pendant 4 takes hub 0; the next step leaves two vertices bare.
  const KSResult r = karp_sipser(fixtures::pendant_square());
  EXPECT_EQ(r.core.graph.num_vertices(), 0u);
  EXPECT_EQ(r.isolated, 2u);
  EXPECT_EQ(r.steps, 2u);
}

TEST(KarpSipser, TraceRecordsLeafAndHub) {
  KSOptions options;
  options.record_trace = true;
  const KSResult r = karp_sipser(fixtures::path(4), options);
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0], (Edge{0, 1}));
  EXPECT_EQ(karp_sipser(fixtures::path(4)).trace.size(), 0u);
}

TEST(KarpSipser, OrderInvariance) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = sample_gnp(30, 0.1, s);
    const KSResult base = karp_sipser(g);
    ExpectAccounting(g, base);
    for (std::uint64_t k = 0; k < 5; ++k) {
      KSOptions options;
      options.order = LeafOrder::randomized(s * 31 + k);
      const KSResult other = karp_sipser(g, options);
      EXPECT_EQ(other.isolated, base.isolated);
      EXPECT_EQ(CoreVertices(other), CoreVertices(base));
      EXPECT_EQ(other.core.graph, base.core.graph);
    }
  }
}

TEST(KarpSipser, BipartiteAccountingAndInvariance) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const BipartiteGraph b = sample_bipartite_gnp(20, 25, 0.08, s);
    const BipartiteKSResult r = karp_sipser(b);
    EXPECT_EQ(b.n1(), r.core.n1() + r.isolated_first + r.steps);
    EXPECT_EQ(b.n2(), r.core.n2() + r.isolated_second + r.steps);
    KSOptions options;
    options.order = LeafOrder::randomized(s);
    const BipartiteKSResult other = karp_sipser(b, options);
    EXPECT_EQ(other.original, r.original);
    EXPECT_EQ(other.isolated_first, r.isolated_first);
    EXPECT_EQ(other.isolated_second, r.isolated_second);
  }
}

TEST(KarpSipser, LeafRemovalDecrementsRank) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (std::uint64_t s = 0; checked < 200; ++s) {
    const Graph g = sample_gnp(14, 0.15, s);
    KSOptions options;
    options.record_trace = true;
    const KSResult r = karp_sipser(g, options);
    if (r.trace.empty()) continue;
    const auto [leaf, hub] = r.trace.front();
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v != leaf && v != hub) keep.push_back(v);
    }
    const Graph h = induced_subgraph(g, keep).graph;
    EXPECT_EQ(exact_rank(adjacency_matrix(h)) + 2,
              exact_rank(adjacency_matrix(g)));
    EXPECT_EQ(oracle::brute_sigma(h) + 2, oracle::brute_sigma(g));
    ++checked;
  }
}

TEST(KCore, Examples) {
  EXPECT_EQ(k_core(fixtures::path(6), 2).graph.num_vertices(), 0u);
  EXPECT_EQ(k_core(fixtures::complete(4), 3).graph, fixtures::complete(4));
  const Graph lollipop = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
  const Subgraph core = k_core(lollipop, 2);
  EXPECT_EQ(core.graph, fixtures::cycle(4));
  EXPECT_EQ(core.original, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(k_core(lollipop, 0).graph, lollipop);
}

TEST(KCore, IdempotentAndMinDegree) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = sample_gnp(60, 0.06, s);
    for (std::size_t k : {1u, 2u, 3u}) {
      const Graph core = k_core(g, k).graph;
      EXPECT_EQ(k_core(core, k).graph, core);
      for (Vertex v = 0; v < core.num_vertices(); ++v) {
        EXPECT_GE(core.degree(v), k);
      }
    }
  }
}

}  // namespace
}  // namespace sparserank
