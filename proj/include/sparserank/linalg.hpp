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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sparserank/graph.hpp"

namespace sparserank {

/// Dense 0/1 matrix, row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool value = true) {
    data_[r * cols_ + c] = value ? 1 : 0;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

BinaryMatrix adjacency_matrix(const Graph& g);
/// n1 x n2; row u is V1 vertex u, column w is V2 vertex w (local labels).
BinaryMatrix biadjacency_matrix(const BipartiteGraph& b);

/// The three largest primes below 2^62.
inline constexpr std::array<std::uint64_t, 3> kProductionPrimes = {
    4611686018427387847ULL,  // 2^62 - 57
    4611686018427387817ULL,  // 2^62 - 87
    4611686018427387787ULL,  // 2^62 - 117
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t value);

/// Rank over GF(p) by elimination. Never exceeds the rank over the reals.
/// Throws Error{kNotPrime} unless p is prime; p must be below 2^63.
std::size_t rank_mod_prime(const BinaryMatrix& m, std::uint64_t p);

/// Rank over the rationals by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers. No size cap.
std::size_t exact_rank(const BinaryMatrix& m);

enum class RankMethod { kModular, kExact };

std::string method_name(RankMethod method);
RankMethod parse_method(const std::string& name);

inline constexpr std::size_t kExactSizeCap = 64;

struct RankReport {
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  RankMethod method = RankMethod::kModular;
  std::vector<std::uint64_t> primes;         // modular only
  std::vector<std::size_t> per_prime_ranks;  // modular only
};

/// Rank of A(G). Modular: maximum rank over kProductionPrimes. Exact:
/// Bareiss, limited to v(G) <= exact_cap (Error{kExactSizeExceeded}).
/// corank = n - rank.
RankReport rank_adjacency(const Graph& g, RankMethod method = RankMethod::kModular,
                          std::size_t exact_cap = kExactSizeCap);

/// Rank of the n1 x n2 biadjacency matrix. corank = max(n1, n2) - rank,
/// which is the kernel dimension on the larger side and equals n - rank
/// for balanced inputs.
RankReport rank_biadjacency(const BipartiteGraph& b,
                            RankMethod method = RankMethod::kModular,
                            std::size_t exact_cap = kExactSizeCap);

}  // namespace sparserank
