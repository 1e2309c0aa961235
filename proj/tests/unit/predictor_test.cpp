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
#include "sparserank/predictor.hpp"

namespace sparserank {
namespace {

using fixtures::make;

std::int64_t ExactCorank(const Graph& g) {
  return static_cast<std::int64_t>(g.num_vertices() -
                                   oracle::rational_rank(adjacency_matrix(g)));
}

TEST(PredictAdjacency, Examples) {
  const Prediction p3 = predict_corank_adjacency(fixtures::path(3));
  EXPECT_EQ(p3.i, 1u);
  EXPECT_EQ(p3.core_vertices, 0u);
  EXPECT_EQ(p3.predicted, 1);
  EXPECT_EQ(ExactCorank(fixtures::path(3)), 1);

  const Prediction c4 = predict_corank_adjacency(fixtures::cycle(4));
  EXPECT_EQ(c4.i, 0u);
  EXPECT_EQ(c4.s, 2u);
  EXPECT_EQ(c4.predicted, 2);

  const Prediction k4 = predict_corank_adjacency(fixtures::complete(4));
  EXPECT_EQ(k4.core_vertices, 4u);
  EXPECT_EQ(k4.predicted, 0);
  EXPECT_EQ(ExactCorank(fixtures::complete(4)), 0);
}

TEST(PredictBiadjacency, Examples) {
  const Prediction square = predict_corank_biadjacency(
      fixtures::make_bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(square.predicted, 1);

  const Prediction path = predict_corank_biadjacency(
      fixtures::make_bip(2, 2, {{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(path.i1, 0u);
  EXPECT_EQ(path.i2, 0u);
  EXPECT_EQ(path.predicted, 0);

  const BipartiteGraph padded =
      fixtures::make_bip(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  Prediction p = predict_corank_biadjacency(padded);
  EXPECT_EQ(p.i1, 1u);
  EXPECT_EQ(p.i2, 0u);
  EXPECT_EQ(p.s1, 1u);
  EXPECT_EQ(p.s2, 1u);
  EXPECT_EQ(p.predicted, 2);
  attach_exact(padded, p, RankMethod::kExact);
  EXPECT_EQ(*p.exact_corank, 2);
  EXPECT_EQ(*p.defect, 1);
}

TEST(PredictMatching, Examples) {
  EXPECT_EQ(predict_matching_number(fixtures::cycle(3)).predicted, 1);
  EXPECT_EQ(predict_matching_number(fixtures::cycle(3)).q, 1u);
  EXPECT_EQ(predict_matching_number(fixtures::path(3)).predicted, 1);
  EXPECT_EQ(predict_matching_number(fixtures::cycle(4)).predicted, 2);
}

TEST(Defect, Examples) {
  EXPECT_EQ(ks_bound_defect(fixtures::cycle(4)), 2);
  EXPECT_EQ(ks_bound_defect(fixtures::complete(4)), 0);
  Prediction p = predict_corank_adjacency(fixtures::cycle(4));
  attach_exact(fixtures::cycle(4), p);
  EXPECT_EQ(*p.defect, 2);
}

TEST(Defect, ForestsHaveNone) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 60;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      if (rng() % 5 == 0) continue;  // leave some vertices as new roots
      edges.push_back({static_cast<Vertex>(rng() % v), v});
    }
    const Graph forest = build_graph(n, edges);
    ASSERT_EQ(ks_bound_defect(forest), 0);
    ASSERT_EQ(predict_corank_adjacency(forest).core_vertices, 0u);
  }
}

TEST(Defect, NonNegativeEverywhere) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = sample_gnp(40, 0.02 + 0.01 * (s % 10), s);
    EXPECT_GE(ks_bound_defect(g), 0);
    const BipartiteGraph b = sample_bipartite_gnp(20, 20, 0.05 + 0.01 * (s % 10), s);
    EXPECT_GE(ks_bound_defect(b), 0);
  }
}

TEST(Prediction, ReducesToSOnMinDegreeTwoGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = sample_min2(200, 260, s);
    const Prediction p = predict_corank_adjacency(g);
    EXPECT_EQ(p.i, 0u);
    EXPECT_EQ(p.core_vertices, g.num_vertices());
    EXPECT_EQ(p.predicted, static_cast<std::int64_t>(p.s));
  }
}

TEST(Prediction, MatchesOnSmallCensus) {
  // Agreement is not exact on small graphs; pin the observed rate.
  std::size_t agree = 0;
  std::size_t total = 0;
  for (const Graph& g : oracle::Census::all(7)) {
    ++total;
    agree += predict_corank_adjacency(g).predicted == ExactCorank(g);
    EXPECT_GE(ExactCorank(g), static_cast<std::int64_t>(karp_sipser(g).isolated));
  }
  EXPECT_EQ(total, 1044u);
  EXPECT_GT(static_cast<double>(agree) / total, 0.5);
  RecordProperty("agreement", std::to_string(agree) + "/" + std::to_string(total));
}

}  // namespace
}  // namespace sparserank
