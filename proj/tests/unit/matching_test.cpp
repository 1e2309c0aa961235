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

namespace sparserank {
namespace {

using fixtures::make;

TEST(Matching, Examples) {
  EXPECT_EQ(max_matching(fixtures::cycle(5)), 2u);
  const BipartiteGraph k22 =
      fixtures::make_bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  EXPECT_EQ(max_matching(k22), 2u);
  EXPECT_EQ(max_matching(k22.graph()), 2u);
  EXPECT_EQ(max_matching(make(0, {})), 0u);
  EXPECT_EQ(max_matching(fixtures::complete(7)), 3u);
}

TEST(Matching, BlossomNeeded) {
  // Two triangles joined by a path: greedy choices must be undone through
  // an odd cycle.
  const Graph g = make(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4},
                           {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  EXPECT_EQ(max_matching(g), 4u);
  const Graph petersen = make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(max_matching(petersen), 5u);
  EXPECT_TRUE(is_matching(petersen, maximum_matching_mates(petersen)));
}

TEST(Matching, BlossomMatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + t % 12;
    const Graph g = oracle::random_graph(n, 0.1 + 0.1 * (t % 6), rng);
    const Mates mates = maximum_matching_mates(g);
    ASSERT_TRUE(is_matching(g, mates));
    ASSERT_EQ(max_matching(g), oracle::brute_matching(g)) << t;
  }
}

TEST(Matching, HopcroftKarpMatchesBlossom) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const BipartiteGraph b = sample_bipartite_gnp(5 + s % 30, 4 + s % 25, 0.1, s);
    const Mates mates = maximum_matching_mates(b);
    ASSERT_TRUE(is_matching(b.graph(), mates));
    ASSERT_EQ(max_matching(b), max_matching(b.graph()));
  }
}

TEST(Matching, LargeSparseAgreement) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const BipartiteGraph b = sample_bipartite_gnp(1000, 1000, 3e-3, s);
    EXPECT_EQ(max_matching(b), max_matching(b.graph()));
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(fixtures::cycle(3)), 3u);
  EXPECT_EQ(sigma(fixtures::path(3)), 2u);
  EXPECT_EQ(sigma(make(2, {{0, 1}})), 2u);
  EXPECT_EQ(oracle::brute_sigma(fixtures::path(3)), 2u);
  EXPECT_EQ(sigma(fixtures::cycle(5)), 5u);
}

TEST(Sigma, MatchesBruteForceAndBounds) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + t % 10;
    const Graph g = oracle::random_graph(n, 0.1 + 0.08 * (t % 7), rng);
    const std::size_t s = sigma(g);
    ASSERT_EQ(s, oracle::brute_sigma(g)) << t;
    ASSERT_GE(s, exact_rank(adjacency_matrix(g)));
    ASSERT_GE(s, 2 * max_matching(g));
  }
}

}  // namespace
}  // namespace sparserank
