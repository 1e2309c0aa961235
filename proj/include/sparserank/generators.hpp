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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank {

inline constexpr std::uint64_t kDefaultRejectionCap = 10'000'000;

/// Erdos-Renyi G(n, p), by geometric skipping over the pair index.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// Bipartite G(n1, n2, p).
BipartiteGraph sample_bipartite_gnp(std::size_t n1, std::size_t n2, double p,
                                    std::uint64_t seed);

/// Uniform simple graph on n vertices with exactly m edges and minimum
/// degree >= 2.
///
/// Exact rejection sampler: degrees are drawn i.i.d. from Poisson(lambda)
/// conditioned on >= 2 and the draw is kept only if the degrees sum to 2m;
/// a uniform configuration on those degrees is then kept only if simple.
/// Any failure restarts from the degree draw. Each simple graph G gets
/// probability proportional to prod(lambda^d / d!) * prod(d!), which is
/// constant, so the output is exactly uniform for every lambda > 0;
/// lambda is chosen so E[Z | Z >= 2] = 2m / n to keep acceptance high.
///
/// Throws Error{kInfeasibleParameters} when m < n or m > C(n, 2), and
/// Error{kRejectionCapExceeded} after `cap` failed attempts.
Graph sample_min2(std::size_t n, std::size_t m, std::uint64_t seed,
                  std::uint64_t cap = kDefaultRejectionCap);

/// Bipartite analogue; needs 2 max(n1, n2) <= m <= n1 n2.
BipartiteGraph sample_min2_bipartite(std::size_t n1, std::size_t n2,
                                     std::size_t m, std::uint64_t seed,
                                     std::uint64_t cap = kDefaultRejectionCap);

/// Uniform configuration on the stubs of `degrees`, contracted to a
/// multigraph. Throws Error{kOddDegreeSum}.
MultiGraph sample_configuration(std::span<const std::size_t> degrees,
                                std::uint64_t seed);

/// Bipartite configuration: V1 stubs are matched uniformly to V2 stubs.
/// Loops cannot occur; parallel edges can. Endpoints are global labels.
MultiGraph sample_bipartite_configuration(std::span<const std::size_t> first,
                                          std::span<const std::size_t> second,
                                          std::uint64_t seed);

/// Uniform simple graph with the given degree sequence, by repeating the
/// configuration model until simple. Non-graphical sequences throw
/// Error{kInfeasibleParameters}.
Graph sample_with_degree_sequence(std::span<const std::size_t> degrees,
                                  std::uint64_t seed,
                                  std::uint64_t cap = kDefaultRejectionCap);

/// Uniform simple bipartite graph with part degree sequences (first, second).
BipartiteGraph sample_with_degree_sequences(
    std::span<const std::size_t> first, std::span<const std::size_t> second,
    std::uint64_t seed, std::uint64_t cap = kDefaultRejectionCap);

bool is_graphical(std::span<const std::size_t> degrees);
bool is_bigraphical(std::span<const std::size_t> first,
                    std::span<const std::size_t> second);

enum class Model { kGnp, kGnnp, kMin2, kMin2Bipartite, kDegreeSequence };

Model parse_model(const std::string& name);
std::string model_name(Model model);

struct SamplerConfig {
  Model model = Model::kGnp;
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double p = 0;
  std::size_t m = 0;
  std::vector<std::size_t> degrees;         // degree-sequence model
  std::vector<std::size_t> second_degrees;  // non-empty -> bipartite split
  std::uint64_t seed = 0;
  std::uint64_t rejection_cap = kDefaultRejectionCap;
};

using AnyGraph = std::variant<Graph, BipartiteGraph>;

AnyGraph sample(const SamplerConfig& config);

}  // namespace sparserank
