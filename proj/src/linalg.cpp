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

#include "sparserank/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

#include "sparserank/errors.hpp"

namespace sparserank {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

// Row support lists: pattern[r] holds the columns of the 1-entries in row r.
struct Pattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::size_t>> support;
};

Pattern pattern_of(const BinaryMatrix& m) {
  Pattern p{m.rows(), m.cols(), std::vector<std::vector<std::size_t>>(m.rows())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c)) p.support[r].push_back(c);
    }
  }
  return p;
}

Pattern pattern_of(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Pattern p{n, n, std::vector<std::vector<std::size_t>>(n)};
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) p.support[v].push_back(w);
  }
  return p;
}

Pattern pattern_of(const BipartiteGraph& b) {
  Pattern p{b.n1(), b.n2(), std::vector<std::vector<std::size_t>>(b.n1())};
  for (Vertex u = 0; u < b.n1(); ++u) {
    for (Vertex w : b.graph().neighbors(u)) p.support[u].push_back(b.local(w));
  }
  return p;
}

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// Multiplication by a fixed w modulo p < 2^63 using a precomputed quotient
// (Shoup); x must be reduced.
struct FixedMultiplier {
  u64 w;
  u64 w_shoup;
  u64 p;

  FixedMultiplier(u64 w_in, u64 p_in)
      : w(w_in),
        w_shoup(static_cast<u64>((static_cast<u128>(w_in) << 64) / p_in)),
        p(p_in) {}

  u64 operator()(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * w_shoup) >> 64);
    u64 r = x * w - q * p;
    return r >= p ? r - p : r;
  }
};

std::size_t modular_rank(const Pattern& pat, u64 p) {
  const std::size_t rows = pat.rows;
  const std::size_t cols = pat.cols;
  if (rows == 0 || cols == 0) return 0;
  std::vector<u64> storage(rows * cols, 0);
  std::vector<u64*> row(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    row[r] = storage.data() + r * cols;
    for (std::size_t c : pat.support[r]) row[r][c] = 1 % p;
  }
  std::vector<std::size_t> pivot_support;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && row[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(row[pivot], row[rank]);
    u64* top = row[rank];
    const u64 inverse = pow_mod(top[col], p - 2, p);
    pivot_support.clear();
    for (std::size_t c = col + 1; c < cols; ++c) {
      if (top[c] != 0) pivot_support.push_back(c);
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      u64* target = row[r];
      if (target[col] == 0) continue;
      const FixedMultiplier factor(mul_mod(target[col], inverse, p), p);
      target[col] = 0;
      for (std::size_t c : pivot_support) {
        const u64 sub = factor(top[c]);
        const u64 x = target[c];
        target[c] = x >= sub ? x - sub : x + (p - sub);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank(const Pattern& pat) {
  const std::size_t rows = pat.rows;
  const std::size_t cols = pat.cols;
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c : pat.support[r]) m[r][c] = 1;
  }
  mpz_class previous = 1;
  mpz_class scratch;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const auto& top = m[rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto& target = m[r];
      for (std::size_t c = col + 1; c < cols; ++c) {
        scratch = top[col] * target[c] - target[col] * top[c];
        mpz_divexact(target[c].get_mpz_t(), scratch.get_mpz_t(),
                     previous.get_mpz_t());
      }
      target[col] = 0;
    }
    previous = top[col];
    ++rank;
  }
  return rank;
}

void require_prime(u64 p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (p >> 63) {
    throw Error(ErrorKind::kOutOfRange, "modulus must be below 2^63");
  }
}

RankReport finish(const Pattern& pat, RankMethod method, std::size_t exact_cap,
                  std::size_t dimension) {
  RankReport report;
  report.rows = pat.rows;
  report.cols = pat.cols;
  report.method = method;
  if (method == RankMethod::kExact) {
    if (std::max(pat.rows, pat.cols) > exact_cap) {
      throw Error(ErrorKind::kExactSizeExceeded,
                  "exact rank limited to dimension " +
                      std::to_string(exact_cap));
    }
    report.rank = bareiss_rank(pat);
  } else {
    for (u64 p : kProductionPrimes) {
      const std::size_t r = modular_rank(pat, p);
      report.primes.push_back(p);
      report.per_prime_ranks.push_back(r);
      report.rank = std::max(report.rank, r);
    }
  }
  report.corank = dimension - report.rank;
  return report;
}

}  // namespace

BinaryMatrix adjacency_matrix(const Graph& g) {
  BinaryMatrix m(g.num_vertices(), g.num_vertices());
  for (auto [u, v] : g.edges()) {
    m.set(u, v);
    m.set(v, u);
  }
  return m;
}

BinaryMatrix biadjacency_matrix(const BipartiteGraph& b) {
  BinaryMatrix m(b.n1(), b.n2());
  for (auto [u, w] : b.local_edges()) m.set(u, w);
  return m;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                    29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::size_t rank_mod_prime(const BinaryMatrix& m, u64 p) {
  require_prime(p);
  return modular_rank(pattern_of(m), p);
}

std::size_t exact_rank(const BinaryMatrix& m) {
  return bareiss_rank(pattern_of(m));
}

std::string method_name(RankMethod method) {
  return method == RankMethod::kExact ? "exact" : "modular";
}

RankMethod parse_method(const std::string& name) {
  if (name == "modular") return RankMethod::kModular;
  if (name == "exact") return RankMethod::kExact;
  throw Error(ErrorKind::kInvalidArgument, "unknown rank method '" + name + "'");
}

RankReport rank_adjacency(const Graph& g, RankMethod method,
                          std::size_t exact_cap) {
  return finish(pattern_of(g), method, exact_cap, g.num_vertices());
}

RankReport rank_biadjacency(const BipartiteGraph& b, RankMethod method,
                            std::size_t exact_cap) {
  return finish(pattern_of(b), method, exact_cap, std::max(b.n1(), b.n2()));
}

}  // namespace sparserank
