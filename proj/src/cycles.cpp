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

#include "sparserank/cycles.hpp"

#include <algorithm>
#include <optional>

#include "sparserank/errors.hpp"

namespace sparserank {

namespace {

// Edge of the auxiliary multigraph: the forced path at -> via -> to through
// the degree-2 vertex `via`.
struct ForcedPath {
  Vertex to;
  Vertex via;
};

using ForcedPaths = std::vector<std::vector<ForcedPath>>;

// `eligible(w)` selects which degree-2 vertices may sit at the odd positions.
template <typename Eligible>
ForcedPaths forced_paths(const Graph& g, Eligible eligible) {
  ForcedPaths h(g.num_vertices());
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (g.degree(w) != 2 || !eligible(w)) continue;
    const auto nb = g.neighbors(w);
    h[nb[0]].push_back({nb[1], w});
    h[nb[1]].push_back({nb[0], w});
  }
  return h;
}

using Found = std::map<std::vector<Vertex>, SpecialCycle>;

class CycleSearch {
 public:
  CycleSearch(const Graph& g, const ForcedPaths& h, std::size_t cap,
              CycleKind kind, Found& found)
      : g_(g), h_(h), cap_(cap), kind_(kind), found_(found),
        used_(g.num_vertices(), 0), mark_(g.num_vertices(), 0) {}

  void run_from(Vertex start) {
    if (h_[start].empty()) return;
    start_ = start;
    path_.assign(1, start);
    used_[start] = 1;
    extend(start, 0);
    used_[start] = 0;
  }

  bool truncated() const noexcept { return truncated_; }

 private:
  void extend(Vertex at, std::size_t hops) {
    const std::size_t next_length = 2 * (hops + 1);
    for (const ForcedPath& step : h_[at]) {
      if (used_[step.via]) continue;
      if (step.to == start_) {
        if ((hops + 1) % 2 == 0 && next_length <= cap_) close(step.via);
        continue;
      }
      if (used_[step.to] || step.to < start_) continue;
      if (next_length + 2 > cap_) {
        truncated_ = true;
        continue;
      }
      used_[step.via] = used_[step.to] = 1;
      path_.push_back(step.via);
      path_.push_back(step.to);
      extend(step.to, hops + 1);
      path_.pop_back();
      path_.pop_back();
      used_[step.via] = used_[step.to] = 0;
    }
  }

  void close(Vertex last_via) {
    path_.push_back(last_via);
    for (Vertex v : path_) mark_[v] = 1;
    bool induced = true;
    bool all_degree_two = true;
    for (std::size_t i = 0; i < path_.size() && induced; i += 2) {
      std::size_t on_cycle = 0;
      for (Vertex w : g_.neighbors(path_[i])) on_cycle += mark_[w];
      induced = on_cycle == 2;
      all_degree_two = all_degree_two && g_.degree(path_[i]) == 2;
    }
    for (Vertex v : path_) mark_[v] = 0;
    if (induced) {
      std::vector<Vertex> key = path_;
      std::sort(key.begin(), key.end());
      if (!found_.contains(key)) {
        found_.emplace(std::move(key),
                       SpecialCycle{path_, kind_, all_degree_two});
      }
    }
    path_.pop_back();
  }

  const Graph& g_;
  const ForcedPaths& h_;
  std::size_t cap_;
  CycleKind kind_;
  Found& found_;
  std::vector<char> used_;
  std::vector<char> mark_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  bool truncated_ = false;
};

std::size_t resolve_cap(std::size_t requested, std::size_t n) {
  if (requested == 0) return default_cycle_cap(n);
  if (requested < 4) {
    throw Error(ErrorKind::kInvalidArgument,
                "special-cycle length cap must be at least 4");
  }
  return requested;
}

bool search(const Graph& g, const ForcedPaths& h, std::size_t cap,
            CycleKind kind, Found& found) {
  CycleSearch s(g, h, cap, kind, found);
  for (Vertex v = 0; v < g.num_vertices(); ++v) s.run_from(v);
  return s.truncated();
}

[[noreturn]] void not_special(const std::string& why) {
  throw Error(ErrorKind::kNotASpecialCycle, why);
}

void require_special(const Graph& g, const std::vector<Vertex>& cycle) {
  if (!is_special_cycle(g, cycle)) {
    not_special("vertex sequence is not a special cycle");
  }
}

}  // namespace

std::size_t default_cycle_cap(std::size_t num_vertices) {
  return std::max<std::size_t>(4, std::min(num_vertices, kDefaultCycleCap));
}

SpecialCycleReport enumerate_special_cycles(const Graph& g,
                                            std::size_t max_length) {
  SpecialCycleReport report;
  report.max_length = resolve_cap(max_length, g.num_vertices());
  Found found;
  const auto h = forced_paths(g, [](Vertex) { return true; });
  report.truncated = search(g, h, report.max_length, CycleKind::kSpecial, found);
  for (auto& [key, cycle] : found) {
    report.s += cycle.isolated ? 2 : 1;
    report.cycles.push_back(std::move(cycle));
  }
  return report;
}

SpecialCycleReport enumerate_special_cycles(const BipartiteGraph& b,
                                            std::size_t max_length) {
  const Graph& g = b.graph();
  SpecialCycleReport report;
  report.max_length = resolve_cap(max_length, g.num_vertices());
  Found found;
  const auto first = forced_paths(
      g, [&b](Vertex w) { return b.side(w) == Side::kFirst; });
  const auto second = forced_paths(
      g, [&b](Vertex w) { return b.side(w) == Side::kSecond; });
  const bool t1 =
      search(g, first, report.max_length, CycleKind::kFirstSpecial, found);
  const bool t2 =
      search(g, second, report.max_length, CycleKind::kSecondSpecial, found);
  report.truncated = t1 || t2;
  for (auto& [key, cycle] : found) {
    if (cycle.isolated) {
      ++report.s1;
      ++report.s2;
    } else if (cycle.kind == CycleKind::kFirstSpecial) {
      ++report.s1;
    } else {
      ++report.s2;
    }
    report.cycles.push_back(std::move(cycle));
  }
  return report;
}

bool is_special_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4 || len % 4 != 0) return false;
  const std::size_t n = g.num_vertices();
  std::vector<char> mark(n, 0);
  for (Vertex v : cycle) {
    if (v >= n || mark[v]) return false;
    mark[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = cycle[i];
    if (!g.has_edge(v, cycle[(i + 1) % len])) return false;
    std::size_t on_cycle = 0;
    for (Vertex w : g.neighbors(v)) on_cycle += mark[w];
    if (on_cycle != 2) return false;
    if (i % 2 == 1 && g.degree(v) != 2) return false;
  }
  return true;
}

std::vector<std::int64_t> special_kernel_vector(const Graph& g,
                                                const SpecialCycle& cycle) {
  require_special(g, cycle.vertices);
  std::vector<std::int64_t> v(g.num_vertices(), 0);
  for (std::size_t i = 1; i < cycle.vertices.size(); i += 2) {
    v[cycle.vertices[i]] = (i / 2) % 2 == 0 ? 1 : -1;
  }
  return v;
}

BipartiteKernelVector special_kernel_vector(const BipartiteGraph& b,
                                            const SpecialCycle& cycle) {
  require_special(b.graph(), cycle.vertices);
  const Side side = b.side(cycle.vertices[1]);
  for (std::size_t i = 1; i < cycle.vertices.size(); i += 2) {
    if (b.side(cycle.vertices[i]) != side) {
      not_special("degree-2 positions straddle both parts");
    }
  }
  BipartiteKernelVector out;
  out.side = side;
  out.values.assign(side == Side::kFirst ? b.n1() : b.n2(), 0);
  for (std::size_t i = 1; i < cycle.vertices.size(); i += 2) {
    out.values[b.local(cycle.vertices[i])] = (i / 2) % 2 == 0 ? 1 : -1;
  }
  return out;
}

std::vector<std::int64_t> multiply_adjacency(
    const Graph& g, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(g.num_vertices(), 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w : g.neighbors(u)) out[u] += v[w];
  }
  return out;
}

std::vector<std::int64_t> multiply_biadjacency(
    const BipartiteGraph& b, const BipartiteKernelVector& v) {
  const Graph& g = b.graph();
  const bool left = v.side == Side::kFirst;
  std::vector<std::int64_t> out(left ? b.n2() : b.n1(), 0);
  for (Vertex u = 0; u < b.n1(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      const Vertex lw = b.local(w);
      if (left) {
        out[lw] += v.values[u];
      } else {
        out[u] += v.values[lw];
      }
    }
  }
  return out;
}

CycleCensus isolated_cycle_census(const Graph& g) {
  CycleCensus census;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 3) continue;
    const bool cycle = std::all_of(comp.begin(), comp.end(), [&g](Vertex v) {
      return g.degree(v) == 2;
    });
    if (!cycle) continue;
    ++census.counts[comp.size()];
    if (comp.size() % 2 == 1) ++census.q;
  }
  return census;
}

}  // namespace sparserank
