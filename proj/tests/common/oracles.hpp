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

// Brute-force reference implementations shared by the unit and acceptance
// tests. Everything here is exponential and only meant for tiny graphs.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sparserank/graph.hpp"
#include "sparserank/linalg.hpp"

namespace sparserank::oracle {

/// Adjacency as bitmasks, n <= 16.
struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> adj;

  explicit SmallGraph(const Graph& g) : n(g.num_vertices()), adj(n, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
  }
  bool edge(std::size_t u, std::size_t v) const { return adj[u] >> v & 1u; }
  int degree(std::size_t v) const { return __builtin_popcount(adj[v]); }
};

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(const BinaryMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(),
                                        std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c) ? 1 : 0;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace detail {

inline std::size_t matching_from(const SmallGraph& g, std::uint32_t free) {
  if (free == 0) return 0;
  const int v = __builtin_ctz(free);
  const std::uint32_t rest = free & ~(1u << v);
  std::size_t best = matching_from(g, rest);
  for (std::uint32_t nb = g.adj[v] & rest; nb; nb &= nb - 1) {
    const int w = __builtin_ctz(nb);
    best = std::max(best, 1 + matching_from(g, rest & ~(1u << w)));
  }
  return best;
}

// Largest vertex count covered by disjoint edges and cycles inside `free`.
inline std::size_t cover_from(const SmallGraph& g, std::uint32_t free);

// Extends a path start ... tail through `free`; every
// way of closing it into a cycle (length >= 3) is considered.
inline std::size_t extend_cycle(const SmallGraph& g, int start, int tail,
                                std::size_t length, std::uint32_t free) {
  std::size_t best = 0;
  if (length >= 3 && g.edge(tail, start)) {
    best = length + cover_from(g, free);
  }
  for (std::uint32_t nb = g.adj[tail] & free; nb; nb &= nb - 1) {
    const int w = __builtin_ctz(nb);
    best = std::max(best,
                    extend_cycle(g, start, w, length + 1, free & ~(1u << w)));
  }
  return best;
}

inline std::size_t cover_from(const SmallGraph& g, std::uint32_t free) {
  if (free == 0) return 0;
  const int v = __builtin_ctz(free);
  const std::uint32_t rest = free & ~(1u << v);
  std::size_t best = cover_from(g, rest);
  for (std::uint32_t nb = g.adj[v] & rest; nb; nb &= nb - 1) {
    const int w = __builtin_ctz(nb);
    const std::uint32_t after = rest & ~(1u << w);
    best = std::max(best, 2 + cover_from(g, after));
    best = std::max(best, extend_cycle(g, v, w, 2, after));
  }
  return best;
}

inline bool connected_within(const SmallGraph& g, std::uint32_t set) {
  if (set == 0) return true;
  std::uint32_t seen = set & (~set + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    const int v = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = g.adj[v] & set & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == set;
}

}  // namespace detail

inline std::size_t brute_matching(const Graph& g) {
  const SmallGraph s(g);
  return detail::matching_from(s, (1u << s.n) - 1);
}

inline std::size_t brute_sigma(const Graph& g) {
  const SmallGraph s(g);
  return detail::cover_from(s, (1u << s.n) - 1);
}

struct BruteCycles {
  std::size_t s = 0;
  std::size_t s1 = 0;  // bipartite inputs: V1 positions have degree 2
  std::size_t s2 = 0;
  std::size_t distinct = 0;
};

/// s(G) straight from the definition: every vertex subset of size 4k that
/// induces a cycle, one colour class of which has host degree 2. Cycles that
/// are whole components count twice. With n1 > 0 the input is bipartite with
/// first part 0..n1-1 and s1/s2 are filled instead (isolated counted once
/// in each).
inline BruteCycles brute_special_cycles(const Graph& g, std::size_t n1 = 0) {
  const SmallGraph s(g);
  BruteCycles out;
  const std::uint32_t first_part = (1u << n1) - 1;
  for (std::uint32_t set = 1; set < (1u << s.n); ++set) {
    const int size = __builtin_popcount(set);
    if (size % 4 != 0) continue;
    bool all_two = true;
    for (std::uint32_t r = set; r; r &= r - 1) {
      const int v = __builtin_ctz(r);
      if (__builtin_popcount(s.adj[v] & set) != 2) all_two = false;
    }
    if (!all_two || !detail::connected_within(s, set)) continue;
    // 2-colour the even cycle.
    std::uint32_t colour = 0;
    const int start = __builtin_ctz(set);
    int prev = -1;
    int cur = start;
    for (int step = 0; step < size; ++step) {
      if (step % 2 == 1) colour |= 1u << cur;
      const std::uint32_t nb = s.adj[cur] & set;
      int next = __builtin_ctz(nb);
      if (next == prev) next = __builtin_ctz(nb & (nb - 1));
      prev = cur;
      cur = next;
    }
    auto host_degree_two = [&](std::uint32_t cls) {
      for (std::uint32_t r = cls; r; r &= r - 1) {
        if (s.degree(__builtin_ctz(r)) != 2) return false;
      }
      return true;
    };
    const std::uint32_t a = colour;
    const std::uint32_t b = set & ~colour;
    const bool special_a = host_degree_two(a);
    const bool special_b = host_degree_two(b);
    if (!special_a && !special_b) continue;
    ++out.distinct;
    if (n1 == 0) {
      out.s += (special_a && special_b) ? 2 : 1;
    } else {
      for (std::uint32_t cls : {a, b}) {
        if (!host_degree_two(cls)) continue;
        if ((cls & first_part) == cls) {
          ++out.s1;
        } else {
          ++out.s2;
        }
      }
    }
  }
  return out;
}

/// One representative per isomorphism class of graphs on n <= 8 vertices.
class Census {
 public:
  static std::vector<Graph> all(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> current = {{0}};
    for (std::size_t k = 2; k <= n; ++k) {
      std::set<std::uint64_t> seen;
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& g : current) {
        for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
          std::vector<std::uint32_t> h = g;
          h.push_back(nb);
          for (std::size_t v = 0; v + 1 < k; ++v) {
            if (nb >> v & 1) h[v] |= 1u << (k - 1);
          }
          if (seen.insert(canonical(h)).second) next.push_back(h);
        }
      }
      current = std::move(next);
    }
    std::vector<Graph> out;
    if (n == 0) {
      out.push_back(build_graph(0, {}));
      return out;
    }
    for (const auto& adj : current) {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < adj.size(); ++u) {
        for (Vertex v = u + 1; v < adj.size(); ++v) {
          if (adj[u] >> v & 1) edges.push_back({u, v});
        }
      }
      out.push_back(build_graph(adj.size(), edges));
    }
    return out;
  }

  static bool connected(const Graph& g) {
    const SmallGraph s(g);
    return detail::connected_within(s, (1u << s.n) - 1);
  }

 private:
  // Minimum upper-triangle code over relabelings that respect a refined
  // degree ordering. The ordering key is itself invariant, so the minimum
  // is a canonical form.
  static std::uint64_t canonical(const std::vector<std::uint32_t>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::uint64_t> key(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> nd;
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v] >> w & 1) nd.push_back(__builtin_popcount(adj[w]));
      }
      std::sort(nd.begin(), nd.end());
      std::uint64_t k = __builtin_popcount(adj[v]);
      for (int d : nd) k = k * 9 + d;
      key[v] = k;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && key[order[j]] == key[order[i]]) ++j;
      blocks.push_back({i, j});
      i = j;
    }
    std::uint64_t best = ~0ULL;
    permute_blocks(adj, order, blocks, 0, best);
    return best;
  }

  static void permute_blocks(
      const std::vector<std::uint32_t>& adj, std::vector<std::size_t>& order,
      const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
      std::size_t b, std::uint64_t& best) {
    if (b == blocks.size()) {
      std::uint64_t code = 0;
      const std::size_t n = order.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          code = code << 1 | (adj[order[i]] >> order[j] & 1);
        }
      }
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + blocks[b].first;
    auto last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      permute_blocks(adj, order, blocks, b + 1, best);
    } while (std::next_permutation(first, last));
  }
};

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

}  // namespace sparserank::oracle
