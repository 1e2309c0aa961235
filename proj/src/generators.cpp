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

#include "sparserank/generators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>

#include "sparserank/analytics.hpp"
#include "sparserank/errors.hpp"
#include "sparserank/rng.hpp"

namespace sparserank {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange,
                "edge probability must lie in [0, 1], got " +
                    std::to_string(p));
  }
}

void check_cap(std::uint64_t cap) {
  if (cap < 1) {
    throw Error(ErrorKind::kInvalidArgument, "rejection cap must be >= 1");
  }
}

[[noreturn]] void cap_exceeded(std::uint64_t cap) {
  throw Error(ErrorKind::kRejectionCapExceeded,
              "no acceptance after " + std::to_string(cap) + " attempts");
}

// Calls emit(k) for each index k in [0, total) kept independently with
// probability p, in increasing order.
template <typename Emit>
void bernoulli_indices(std::uint64_t total, double p, Rng& rng, Emit emit) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) emit(k);
    return;
  }
  std::geometric_distribution<std::uint64_t> skip(p);
  std::uint64_t k = 0;
  while (true) {
    const std::uint64_t gap = skip(rng);
    if (gap >= total - k) return;
    k += gap;
    emit(k);
    ++k;
    if (k >= total) return;
  }
}

// Poisson(lambda) conditioned on >= 2, by inversion against a CDF table that
// is extended on demand.
class TruncatedPoissonSampler {
 public:
  explicit TruncatedPoissonSampler(double lambda) : lambda_(lambda) {
    const auto stats = analytics::truncated_poisson_stats(lambda);
    double acc = 0;
    for (std::size_t t = 2; t < stats.rho.size(); ++t) {
      acc += stats.rho[t];
      cdf_.push_back(acc);
    }
    last_pmf_ = stats.rho.back();
  }

  std::size_t operator()(Rng& rng) {
    const double u = unit_(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    while (it == cdf_.end()) {
      const double t = static_cast<double>(cdf_.size() + 2);
      last_pmf_ *= lambda_ / t;
      if (last_pmf_ == 0.0 || cdf_.back() >= 1.0) {
        return cdf_.size() + 1;
      }
      cdf_.push_back(cdf_.back() + last_pmf_);
      it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    }
    return static_cast<std::size_t>(it - cdf_.begin()) + 2;
  }

 private:
  double lambda_;
  double last_pmf_ = 0;
  std::vector<double> cdf_;  // cdf_[t - 2] = P[Z <= t | Z >= 2]
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

// Degree sequence of `count` vertices with every entry >= 2 and the given
// sum, drawn i.i.d. truncated Poisson and kept only if the sum matches.
// Returns false when the draw is rejected.
bool draw_min2_degrees(std::size_t count, std::size_t total,
                       TruncatedPoissonSampler* sampler,
                       std::size_t max_degree, Rng& rng,
                       std::vector<std::size_t>& out) {
  out.resize(count);
  if (sampler == nullptr) {  // total == 2 * count forces all degrees to 2
    std::fill(out.begin(), out.end(), 2);
    return true;
  }
  std::size_t sum = 0;
  for (auto& d : out) {
    d = (*sampler)(rng);
    sum += d;
    if (sum > total) return false;
  }
  if (sum != total) return false;
  return std::all_of(out.begin(), out.end(),
                     [max_degree](std::size_t d) { return d <= max_degree; });
}

std::vector<Vertex> stubs_of(std::span<const std::size_t> degrees,
                             std::size_t offset = 0) {
  std::vector<Vertex> stubs;
  stubs.reserve(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    stubs.insert(stubs.end(), degrees[v], static_cast<Vertex>(v + offset));
  }
  return stubs;
}

// Pairs shuffled stubs into edges; returns false on a loop or repeated pair
// when `require_simple` is set.
bool pair_stubs(std::vector<Vertex>& stubs, Rng& rng, bool require_simple,
                std::vector<Edge>& edges) {
  std::shuffle(stubs.begin(), stubs.end(), rng);
  edges.clear();
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex a = stubs[i];
    Vertex b = stubs[i + 1];
    if (a > b) std::swap(a, b);
    if (require_simple && a == b) return false;
    edges.emplace_back(a, b);
  }
  if (!require_simple) return true;
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// V1 stubs (offset 0) matched to V2 stubs (offset n1) by a uniform
// permutation.
bool pair_bipartite_stubs(const std::vector<Vertex>& left,
                          std::vector<Vertex>& right, Rng& rng,
                          bool require_simple, std::vector<Edge>& edges) {
  std::shuffle(right.begin(), right.end(), rng);
  edges.clear();
  edges.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    edges.emplace_back(left[i], right[i]);
  }
  if (!require_simple) return true;
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::size_t degree_sum(std::span<const std::size_t> d) {
  return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

std::unique_ptr<TruncatedPoissonSampler> min2_sampler(std::size_t count,
                                                      std::size_t total) {
  if (total == 2 * count) return nullptr;
  const double mean = static_cast<double>(total) / static_cast<double>(count);
  const double lambda = analytics::truncated_poisson_from_mean(mean).lambda;
  return std::make_unique<TruncatedPoissonSampler>(lambda);
}

}  // namespace

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  const std::uint64_t total =
      static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<Edge> edges;
  // Row u holds the pairs (u, v) for v > u; walk rows as k increases.
  std::uint64_t row_start = 0;
  Vertex u = 0;
  bernoulli_indices(total, p, rng, [&](std::uint64_t k) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.emplace_back(u, static_cast<Vertex>(u + 1 + (k - row_start)));
  });
  return Graph::from_edges(n, edges);
}

BipartiteGraph sample_bipartite_gnp(std::size_t n1, std::size_t n2, double p,
                                    std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  bernoulli_indices(static_cast<std::uint64_t>(n1) * n2, p, rng,
                    [&](std::uint64_t k) {
                      edges.emplace_back(static_cast<Vertex>(k / n2),
                                         static_cast<Vertex>(k % n2));
                    });
  return BipartiteGraph::from_edges(n1, n2, edges);
}

Graph sample_min2(std::size_t n, std::size_t m, std::uint64_t seed,
                  std::uint64_t cap) {
  check_cap(cap);
  const std::uint64_t max_edges =
      static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m < n || m > max_edges) {
    throw Error(ErrorKind::kInfeasibleParameters,
                "no simple graph with n = " + std::to_string(n) + ", m = " +
                    std::to_string(m) + " and minimum degree 2");
  }
  if (n == 0) return Graph::from_edges(0, {});
  auto sampler = min2_sampler(n, 2 * m);
  Rng rng(seed);
  std::vector<std::size_t> degrees;
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    if (!draw_min2_degrees(n, 2 * m, sampler.get(), n - 1, rng, degrees)) {
      continue;
    }
    auto stubs = stubs_of(degrees);
    if (pair_stubs(stubs, rng, true, edges)) {
      return Graph::from_edges(n, edges);
    }
  }
  cap_exceeded(cap);
}

BipartiteGraph sample_min2_bipartite(std::size_t n1, std::size_t n2,
                                     std::size_t m, std::uint64_t seed,
                                     std::uint64_t cap) {
  check_cap(cap);
  if (m < 2 * std::max(n1, n2) ||
      m > static_cast<std::uint64_t>(n1) * n2) {
    throw Error(ErrorKind::kInfeasibleParameters,
                "no simple bipartite graph with n1 = " + std::to_string(n1) +
                    ", n2 = " + std::to_string(n2) + ", m = " +
                    std::to_string(m) + " and minimum degree 2");
  }
  if (m == 0) return BipartiteGraph::from_edges(n1, n2, {});
  auto first = min2_sampler(n1, m);
  auto second = min2_sampler(n2, m);
  Rng rng(seed);
  std::vector<std::size_t> d1;
  std::vector<std::size_t> d2;
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    if (!draw_min2_degrees(n1, m, first.get(), n2, rng, d1)) continue;
    if (!draw_min2_degrees(n2, m, second.get(), n1, rng, d2)) continue;
    const auto left = stubs_of(d1);
    auto right = stubs_of(d2, n1);
    if (pair_bipartite_stubs(left, right, rng, true, edges)) {
      return BipartiteGraph::from_graph(n1, Graph::from_edges(n1 + n2, edges));
    }
  }
  cap_exceeded(cap);
}

MultiGraph sample_configuration(std::span<const std::size_t> degrees,
                                std::uint64_t seed) {
  if (degree_sum(degrees) % 2 != 0) {
    throw Error(ErrorKind::kOddDegreeSum, "degree sum is odd");
  }
  Rng rng(seed);
  auto stubs = stubs_of(degrees);
  std::vector<Edge> edges;
  pair_stubs(stubs, rng, false, edges);
  return MultiGraph(degrees.size(), std::move(edges));
}

MultiGraph sample_bipartite_configuration(std::span<const std::size_t> first,
                                          std::span<const std::size_t> second,
                                          std::uint64_t seed) {
  if (degree_sum(first) != degree_sum(second)) {
    throw Error(ErrorKind::kInfeasibleParameters,
                "part degree sums differ");
  }
  Rng rng(seed);
  const auto left = stubs_of(first);
  auto right = stubs_of(second, first.size());
  std::vector<Edge> edges;
  pair_bipartite_stubs(left, right, rng, false, edges);
  return MultiGraph(first.size() + second.size(), std::move(edges));
}

namespace {

// Sum of min(desc[i], k) over i >= from; `desc` is sorted non-increasing
// and `prefix` holds its prefix sums.
std::uint64_t sum_min(const std::vector<std::size_t>& desc,
                      const std::vector<std::uint64_t>& prefix,
                      std::size_t from, std::size_t k) {
  auto split = std::partition_point(desc.begin(), desc.end(),
                                    [k](std::size_t x) { return x >= k; });
  const std::size_t j =
      std::max(static_cast<std::size_t>(split - desc.begin()), from);
  return static_cast<std::uint64_t>(k) * (j - from) +
         (prefix.back() - prefix[j]);
}

std::vector<std::uint64_t> prefix_sums(const std::vector<std::size_t>& d) {
  std::vector<std::uint64_t> prefix(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + d[i];
  return prefix;
}

}  // namespace

bool is_graphical(std::span<const std::size_t> degrees) {
  // Erdos-Gallai.
  std::vector<std::size_t> d(degrees.begin(), degrees.end());
  if (degree_sum(d) % 2 != 0) return false;
  std::sort(d.rbegin(), d.rend());
  const auto prefix = prefix_sums(d);
  for (std::size_t k = 1; k <= d.size(); ++k) {
    const std::uint64_t rhs =
        static_cast<std::uint64_t>(k) * (k - 1) + sum_min(d, prefix, k, k);
    if (prefix[k] > rhs) return false;
  }
  return true;
}

bool is_bigraphical(std::span<const std::size_t> first,
                    std::span<const std::size_t> second) {
  // Gale-Ryser.
  if (degree_sum(first) != degree_sum(second)) return false;
  std::vector<std::size_t> a(first.begin(), first.end());
  std::vector<std::size_t> b(second.begin(), second.end());
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const auto pa = prefix_sums(a);
  const auto pb = prefix_sums(b);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (pa[k] > sum_min(b, pb, 0, k)) return false;
  }
  return true;
}

Graph sample_with_degree_sequence(std::span<const std::size_t> degrees,
                                  std::uint64_t seed, std::uint64_t cap) {
  check_cap(cap);
  if (degree_sum(degrees) % 2 != 0) {
    throw Error(ErrorKind::kOddDegreeSum, "degree sum is odd");
  }
  if (!is_graphical(degrees)) {
    throw Error(ErrorKind::kInfeasibleParameters,
                "degree sequence is not graphical");
  }
  Rng rng(seed);
  const auto base = stubs_of(degrees);
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    auto stubs = base;
    if (pair_stubs(stubs, rng, true, edges)) {
      return Graph::from_edges(degrees.size(), edges);
    }
  }
  cap_exceeded(cap);
}

BipartiteGraph sample_with_degree_sequences(
    std::span<const std::size_t> first, std::span<const std::size_t> second,
    std::uint64_t seed, std::uint64_t cap) {
  check_cap(cap);
  if (degree_sum(first) != degree_sum(second) ||
      !is_bigraphical(first, second)) {
    throw Error(ErrorKind::kInfeasibleParameters,
                "degree sequences are not bigraphical");
  }
  Rng rng(seed);
  const auto left = stubs_of(first);
  const auto base = stubs_of(second, first.size());
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    auto right = base;
    if (pair_bipartite_stubs(left, right, rng, true, edges)) {
      return BipartiteGraph::from_graph(
          first.size(),
          Graph::from_edges(first.size() + second.size(), edges));
    }
  }
  cap_exceeded(cap);
}

Model parse_model(const std::string& name) {
  if (name == "gnp") return Model::kGnp;
  if (name == "gnnp") return Model::kGnnp;
  if (name == "min2") return Model::kMin2;
  if (name == "min2-bip") return Model::kMin2Bipartite;
  if (name == "degseq") return Model::kDegreeSequence;
  throw Error(ErrorKind::kInvalidArgument, "unknown model '" + name + "'");
}

std::string model_name(Model model) {
  switch (model) {
    case Model::kGnp: return "gnp";
    case Model::kGnnp: return "gnnp";
    case Model::kMin2: return "min2";
    case Model::kMin2Bipartite: return "min2-bip";
    case Model::kDegreeSequence: return "degseq";
  }
  return "unknown";
}

AnyGraph sample(const SamplerConfig& c) {
  switch (c.model) {
    case Model::kGnp:
      return sample_gnp(c.n, c.p, c.seed);
    case Model::kGnnp:
      return sample_bipartite_gnp(c.n1, c.n2, c.p, c.seed);
    case Model::kMin2:
      return sample_min2(c.n, c.m, c.seed, c.rejection_cap);
    case Model::kMin2Bipartite:
      return sample_min2_bipartite(c.n1, c.n2, c.m, c.seed, c.rejection_cap);
    case Model::kDegreeSequence:
      if (!c.second_degrees.empty()) {
        return sample_with_degree_sequences(c.degrees, c.second_degrees,
                                            c.seed, c.rejection_cap);
      }
      return sample_with_degree_sequence(c.degrees, c.seed, c.rejection_cap);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown model");
}

}  // namespace sparserank
