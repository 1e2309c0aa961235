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
#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank {

/// Which degree-1 vertex Karp-Sipser removal picks next. The resulting core
/// and isolated counts never depend on the choice.
struct LeafOrder {
  enum class Kind { kLowestIndex, kRandomized };
  Kind kind = Kind::kLowestIndex;
  std::uint64_t seed = 0;

  static LeafOrder lowest_index() { return {}; }
  static LeafOrder randomized(std::uint64_t seed) {
    return {Kind::kRandomized, seed};
  }
};

struct KSOptions {
  LeafOrder order;
  bool record_trace = false;
};

struct KSResult {
  Subgraph core;                // min degree >= 2, labels into the input
  std::size_t isolated = 0;     // i(G)
  std::size_t steps = 0;        // leaf removals
  std::vector<Edge> trace;      // (leaf, neighbor) per step, if recorded
};

struct BipartiteKSResult {
  BipartiteGraph core;
  std::vector<Vertex> original;        // core global label -> input label
  std::size_t isolated_first = 0;      // i1(G)
  std::size_t isolated_second = 0;     // i2(G)
  std::size_t steps = 0;
  std::vector<Edge> trace;
};

/// Karp-Sipser leaf removal: repeatedly delete a degree-1 vertex together
/// with its neighbor, then strip the isolated vertices. Runs in O(n + m)
/// (plus a log factor for the lowest-index order).
KSResult karp_sipser(const Graph& g, const KSOptions& options = {});
BipartiteKSResult karp_sipser(const BipartiteGraph& b,
                              const KSOptions& options = {});

/// Maximal induced subgraph with minimum degree >= k.
Subgraph k_core(const Graph& g, std::size_t k);

}  // namespace sparserank
