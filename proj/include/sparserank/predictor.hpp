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
#include <optional>

#include "sparserank/graph.hpp"
#include "sparserank/linalg.hpp"

namespace sparserank {

struct Prediction {
  std::int64_t predicted = 0;
  std::size_t i = 0;
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  std::size_t s = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::size_t q = 0;
  std::size_t core_vertices = 0;
  std::size_t core_edges = 0;
  bool lower_bound = false;  // cycle search was truncated
  std::optional<std::int64_t> exact_corank;
  std::optional<std::int64_t> defect;  // exact corank minus the KS bound
};

/// i(G) + s(core).
Prediction predict_corank_adjacency(const Graph& g);

/// max(i1 + s1(core), i2 + s2(core)).
Prediction predict_corank_biadjacency(const BipartiteGraph& b);

/// floor((n - i(G) - q(core)) / 2), with q the number of isolated odd
/// cycles.
Prediction predict_matching_number(const Graph& g);

/// corank A(G) - i(G).
std::int64_t ks_bound_defect(const Graph& g);
/// (n - rank B) - max(i1, i2) with n = max(n1, n2).
std::int64_t ks_bound_defect(const BipartiteGraph& b);

/// Fills exact_corank and defect from a modular rank computation.
void attach_exact(const Graph& g, Prediction& p,
                  RankMethod method = RankMethod::kModular);
void attach_exact(const BipartiteGraph& b, Prediction& p,
                  RankMethod method = RankMethod::kModular);

}  // namespace sparserank
