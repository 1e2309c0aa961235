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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparserank/generators.hpp"

namespace sparserank::harness {

enum class Suite { kRankChar, kMainRmt, kTwoCore, kMatching, kCriticalScan };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct ExperimentConfig {
  Suite suite = Suite::kRankChar;
  std::size_t n = 1000;
  double c = 4.0;             // gnp density, p = c / n
  std::size_t m = 0;          // min2 edge count
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool bipartite = false;     // balanced n + n variant where supported
  std::vector<double> grid;   // critical-scan densities
  std::size_t threads = 0;    // 0: SPARSERANK_THREADS, else all cores
  std::size_t cycle_cap = 0;  // 0: default special-cycle length cap
  std::uint64_t rejection_cap = kDefaultRejectionCap;
};

/// Worker count used when ExperimentConfig::threads is 0.
std::size_t default_thread_count();

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Model model = Model::kGnp;
  double c = 0;
  std::size_t n1 = 0;  // n for non-bipartite models
  std::size_t n2 = 0;  // 0 for non-bipartite models
  std::size_t m = 0;   // requested edge count (min2 models)
  std::size_t edges = 0;
  std::size_t i = 0;
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  std::size_t s = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::size_t q = 0;
  std::int64_t predicted_corank = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::vector<std::uint64_t> primes;
  std::size_t nu = 0;
  std::size_t predicted_nu = 0;
  std::size_t sigma = 0;
  std::int64_t defect = 0;
  std::optional<std::size_t> two_core_vertices;
  std::optional<std::size_t> two_core_edges;
  std::optional<std::size_t> two_core_corank;
  bool cycle_truncated = false;
  bool bounds_ok = true;  // the Karp-Sipser inequality chain held
  bool kernel_ok = true;  // every special-cycle vector was in the kernel
  std::size_t special_cycles = 0;
  bool failed = false;
  std::string failure;
  double seconds = 0;  // wall time; kept out of the CSV

  bool bipartite() const noexcept { return n2 != 0; }
  std::size_t num_vertices() const noexcept { return n1 + n2; }
};

/// One record per trial, ordered by index. Trial k uses
/// derive_seed(config.seed, k); critical-scan runs config.trials per grid
/// point with consecutive indices.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config);

/// Runs a single trial on a given graph (used by run_trials).
TrialRecord analyse(const AnyGraph& graph, bool with_two_core,
                    std::size_t cycle_cap = 0);

inline constexpr const char* kCsvSchemaVersion = "1";

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
std::string format_real(double value);

struct GofCell {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;  // nullopt: open upper tail
  std::size_t observed = 0;
  double expected = 0;
};

struct GofReport {
  std::map<std::int64_t, std::size_t> observed;
  std::size_t count = 0;
  double mean_y = 0;
  double mean_y_dagger = 0;  // 0 for a plain Poisson fit
  double model_mean = 0;     // mean_y + 2 mean_y_dagger
  double model_variance = 0;
  double sample_mean = 0;
  double standard_error = 0;  // sqrt(model_variance / count)
  double z = 0;
  std::vector<GofCell> cells;
  double chi_square = 0;
  std::size_t dof = 0;
  double p_value = 1;
};

/// pmf of Y + 2 Y' for independent Poissons, cut where the remaining mass
/// drops below 1e-12 (and never shorter than min_support + 1 entries).
std::vector<double> compound_pmf(double mean_y, double mean_y_dagger,
                                 std::size_t min_support = 0);

/// Chi-square fit against Poisson(mu) or, with `compound`, against
/// Y + 2Y' with means (mean_y, mean_y_dagger). Cells are pooled from the
/// upper tail down until each expects at least 5. Throws Error{kEmptyInput}.
GofReport poisson_gof(const std::vector<std::int64_t>& values, double mu,
                      std::optional<std::pair<double, double>> compound = {});

struct TwoCoreReport {
  double c = 0;
  std::size_t trials = 0;
  std::size_t excluded = 0;
  double nonsingular_frequency = 0;
  double predicted_probability = 0;
  double mu = 0;
  double mean_corank = 0;
  GofReport gof;
  std::vector<TrialRecord> records;
};

/// Requires c > 1 (Error{kOutOfRange}).
TwoCoreReport two_core_experiment(double c, std::size_t n, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads = 0);

struct ScanRow {
  double c = 0;
  std::size_t trials = 0;
  std::size_t excluded = 0;
  double mean_defect = 0;
  double mean_i_fraction = 0;
  std::optional<double> gamma_b;
  std::optional<double> gamma_a;
};

std::vector<ScanRow> critical_scan(const std::vector<double>& grid,
                                   std::size_t n, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads = 0);
std::vector<ScanRow> scan_table(const std::vector<TrialRecord>& records);

/// Suite-level statistics as a JSON document.
std::string summary_json(const ExperimentConfig& config,
                         const std::vector<TrialRecord>& records);

}  // namespace sparserank::harness
