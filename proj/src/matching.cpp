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

#include "sparserank/matching.hpp"

#include <limits>
#include <queue>

namespace sparserank {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& b)
      : b_(b),
        mate_left_(b.n1(), kNone),
        mate_right_(b.n2(), kNone),
        dist_(b.n1()) {}

  void run() {
    while (layer()) {
      for (Vertex u = 0; u < b_.n1(); ++u) {
        if (mate_left_[u] == kNone) augment(u);
      }
    }
  }

  Mates mates() const {
    Mates out(b_.n1() + b_.n2());
    for (Vertex u = 0; u < b_.n1(); ++u) {
      if (mate_left_[u] != kNone) {
        out[u] = b_.global_second(mate_left_[u]);
        out[b_.global_second(mate_left_[u])] = u;
      }
    }
    return out;
  }

 private:
  bool layer() {
    std::queue<Vertex> frontier;
    for (Vertex u = 0; u < b_.n1(); ++u) {
      if (mate_left_[u] == kNone) {
        dist_[u] = 0;
        frontier.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    bool found = false;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : b_.graph().neighbors(u)) {
        const std::uint32_t next = mate_right_[b_.local(w)];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[u] + 1;
          frontier.push(next);
        }
      }
    }
    return found;
  }

  bool augment(Vertex u) {
    for (Vertex w : b_.graph().neighbors(u)) {
      const Vertex right = b_.local(w);
      const std::uint32_t next = mate_right_[right];
      if (next == kNone || (dist_[next] == dist_[u] + 1 && augment(next))) {
        mate_left_[u] = right;
        mate_right_[right] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const BipartiteGraph& b_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
};

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_),
        lca_mark_(n_) {}

  void run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == kNone) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      const std::uint32_t end = find_path(root);
      if (end != kNone) flip(end);
    }
  }

  Mates mates() const {
    Mates out(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) out[v] = mate_[v];
    }
    return out;
  }

 private:
  std::uint32_t lowest_common_ancestor(Vertex a, Vertex b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      lca_mark_[a] = stamp_;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::uint32_t find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const Vertex b = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex x = 0; x < n_; ++x) {
            if (!in_blossom_[base_[x]]) continue;
            base_[x] = b;
            if (!used_[x]) {
              used_[x] = true;
              frontier.push(x);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = true;
          frontier.push(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void flip(std::uint32_t v) {
    while (v != kNone) {
      const std::uint32_t pv = parent_[v];
      const std::uint32_t next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> mate_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::uint64_t stamp_ = 0;
};

std::size_t count_pairs(const Mates& mates) {
  std::size_t matched = 0;
  for (const auto& m : mates) matched += m.has_value();
  return matched / 2;
}

}  // namespace

Mates maximum_matching_mates(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  hk.run();
  return hk.mates();
}

Mates maximum_matching_mates(const Graph& g) {
  Blossom blossom(g);
  blossom.run();
  return blossom.mates();
}

std::size_t max_matching(const BipartiteGraph& b) {
  return count_pairs(maximum_matching_mates(b));
}

std::size_t max_matching(const Graph& g) {
  return count_pairs(maximum_matching_mates(g));
}

std::size_t sigma(const Graph& g) { return max_matching(bipartite_double(g)); }

bool is_matching(const Graph& g, const Mates& mates) {
  if (mates.size() != g.num_vertices()) return false;
  for (Vertex v = 0; v < mates.size(); ++v) {
    if (!mates[v]) continue;
    const Vertex w = *mates[v];
    if (w >= mates.size() || mates[w] != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

}  // namespace sparserank
