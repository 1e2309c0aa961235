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

#include "sparserank/predictor.hpp"

#include <algorithm>

#include "sparserank/cycles.hpp"
#include "sparserank/peeling.hpp"

namespace sparserank {

namespace {

std::int64_t as_signed(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

Prediction predict_corank_adjacency(const Graph& g) {
  const KSResult ks = karp_sipser(g);
  const SpecialCycleReport cycles = enumerate_special_cycles(ks.core.graph);
  Prediction p;
  p.i = ks.isolated;
  p.s = cycles.s;
  p.q = isolated_cycle_census(ks.core.graph).q;
  p.core_vertices = ks.core.graph.num_vertices();
  p.core_edges = ks.core.graph.num_edges();
  p.lower_bound = cycles.truncated;
  p.predicted = as_signed(p.i + p.s);
  return p;
}

Prediction predict_corank_biadjacency(const BipartiteGraph& b) {
  const BipartiteKSResult ks = karp_sipser(b);
  const SpecialCycleReport cycles = enumerate_special_cycles(ks.core);
  Prediction p;
  p.i1 = ks.isolated_first;
  p.i2 = ks.isolated_second;
  p.i = p.i1 + p.i2;
  p.s1 = cycles.s1;
  p.s2 = cycles.s2;
  p.q = isolated_cycle_census(ks.core.graph()).q;
  p.core_vertices = ks.core.graph().num_vertices();
  p.core_edges = ks.core.num_edges();
  p.lower_bound = cycles.truncated;
  p.predicted = as_signed(std::max(p.i1 + p.s1, p.i2 + p.s2));
  return p;
}

Prediction predict_matching_number(const Graph& g) {
  const KSResult ks = karp_sipser(g);
  Prediction p;
  p.i = ks.isolated;
  p.q = isolated_cycle_census(ks.core.graph).q;
  p.core_vertices = ks.core.graph.num_vertices();
  p.core_edges = ks.core.graph.num_edges();
  p.predicted = as_signed((g.num_vertices() - p.i - p.q) / 2);
  return p;
}

std::int64_t ks_bound_defect(const Graph& g) {
  const std::size_t corank = rank_adjacency(g).corank;
  return as_signed(corank) - as_signed(karp_sipser(g).isolated);
}

std::int64_t ks_bound_defect(const BipartiteGraph& b) {
  const std::size_t corank = rank_biadjacency(b).corank;
  const BipartiteKSResult ks = karp_sipser(b);
  return as_signed(corank) -
         as_signed(std::max(ks.isolated_first, ks.isolated_second));
}

void attach_exact(const Graph& g, Prediction& p, RankMethod method) {
  const RankReport report = rank_adjacency(g, method);
  p.exact_corank = as_signed(report.corank);
  p.defect = *p.exact_corank - as_signed(p.i);
}

void attach_exact(const BipartiteGraph& b, Prediction& p, RankMethod method) {
  const RankReport report = rank_biadjacency(b, method);
  p.exact_corank = as_signed(report.corank);
  p.defect = *p.exact_corank - as_signed(std::max(p.i1, p.i2));
}

}  // namespace sparserank
