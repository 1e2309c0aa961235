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
#include <map>
#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank {

enum class CycleKind { kSpecial, kFirstSpecial, kSecondSpecial };

/// An induced cycle u1, u2, ..., u_{4k} listed in cyclic order with the
/// degree-2 vertices at the odd 0-based positions (u2, u4, ...).
struct SpecialCycle {
  std::vector<Vertex> vertices;
  CycleKind kind = CycleKind::kSpecial;
  bool isolated = false;  // every vertex has degree 2: a whole component

  std::size_t length() const noexcept { return vertices.size(); }
};

struct SpecialCycleReport {
  std::vector<SpecialCycle> cycles;  // one entry per vertex set
  std::size_t s = 0;   // graph: non-isolated + 2 * isolated
  std::size_t s1 = 0;  // bipartite: 1-special, isolated counted once
  std::size_t s2 = 0;  // bipartite: 2-special, isolated counted once
  bool truncated = false;  // some search branch was cut at the length cap
  std::size_t max_length = 0;
};

inline constexpr std::size_t kDefaultCycleCap = 64;

/// Cap that `max_length = 0` resolves to: min(v(G), 64), at least 4.
std::size_t default_cycle_cap(std::size_t num_vertices);

/// All special cycles of length <= max_length (0 selects the default cap).
///
/// Every degree-2 vertex w with neighbors {x, y} forces x-w-y onto any
/// special cycle through it, so the search walks an auxiliary multigraph
/// whose edges are those forced paths and closes cycles of even length;
/// candidates are then checked for chords.
SpecialCycleReport enumerate_special_cycles(const Graph& g,
                                            std::size_t max_length = 0);

/// Bipartite variant: 1-special cycles have every V1 vertex of degree 2,
/// 2-special cycles every V2 vertex. Vertex labels are global.
SpecialCycleReport enumerate_special_cycles(const BipartiteGraph& b,
                                            std::size_t max_length = 0);

/// True when `cycle` is an induced cycle of g, has length divisible by 4 and
/// has degree 2 at every odd position.
bool is_special_cycle(const Graph& g, const std::vector<Vertex>& cycle);

/// Alternating +1/-1 on the degree-2 positions (+1 at u2, u6, ..., -1 at
/// u4, u8, ...). A(G) times this vector is zero. Throws
/// Error{kNotASpecialCycle}.
std::vector<std::int64_t> special_kernel_vector(const Graph& g,
                                                const SpecialCycle& cycle);

struct BipartiteKernelVector {
  Side side = Side::kFirst;  // kFirst: y^T B = 0 (length n1); kSecond: B x = 0
  std::vector<std::int64_t> values;
};

/// Left kernel vector of B(G) when the degree-2 positions lie in V1, right
/// kernel vector when they lie in V2.
BipartiteKernelVector special_kernel_vector(const BipartiteGraph& b,
                                            const SpecialCycle& cycle);

/// A(G) v over the integers.
std::vector<std::int64_t> multiply_adjacency(const Graph& g,
                                             const std::vector<std::int64_t>& v);

/// B^T y (side kFirst) or B x (side kSecond) over the integers.
std::vector<std::int64_t> multiply_biadjacency(const BipartiteGraph& b,
                                               const BipartiteKernelVector& v);

struct CycleCensus {
  std::map<std::size_t, std::size_t> counts;  // length -> isolated cycles
  std::size_t q = 0;                          // isolated odd cycles
};

/// Connected components that are cycles, bucketed by length.
CycleCensus isolated_cycle_census(const Graph& g);

}  // namespace sparserank
