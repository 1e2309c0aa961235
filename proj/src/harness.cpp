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

#include "sparserank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>
#include <json.hpp>

#include "sparserank/analytics.hpp"
#include "sparserank/cycles.hpp"
#include "sparserank/errors.hpp"
#include "sparserank/linalg.hpp"
#include "sparserank/matching.hpp"
#include "sparserank/peeling.hpp"
#include "sparserank/rng.hpp"

namespace sparserank::harness {

namespace {

using nlohmann::json;

std::int64_t as_signed(std::size_t x) { return static_cast<std::int64_t>(x); }

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

void analyse_graph(const Graph& g, bool with_two_core, std::size_t cycle_cap,
                   TrialRecord& r) {
  const std::size_t n = g.num_vertices();
  r.n1 = n;
  r.edges = g.num_edges();

  const KSResult ks = karp_sipser(g);
  const Graph& core = ks.core.graph;
  const SpecialCycleReport cycles = enumerate_special_cycles(core, cycle_cap);
  r.i = ks.isolated;
  r.s = cycles.s;
  r.q = isolated_cycle_census(core).q;
  r.cycle_truncated = cycles.truncated;
  r.special_cycles = cycles.cycles.size();
  for (const SpecialCycle& cycle : cycles.cycles) {
    if (!all_zero(multiply_adjacency(core, special_kernel_vector(core, cycle)))) {
      r.kernel_ok = false;
    }
  }
  r.predicted_corank = as_signed(r.i + r.s);

  const RankReport rank = rank_adjacency(g);
  r.rank = rank.rank;
  r.corank = rank.corank;
  r.primes = rank.primes;
  r.nu = max_matching(g);
  r.predicted_nu = (n - r.i - r.q) / 2;
  r.sigma = sigma(g);
  r.defect = as_signed(r.corank) - as_signed(r.i);
  r.bounds_ok = std::max(r.rank, 2 * r.nu) <= r.sigma && r.sigma <= n - r.i &&
                r.defect >= 0;

  if (with_two_core) {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t corank = 0;
    const auto components = connected_components(g);
    if (!components.empty()) {
      const Subgraph giant = induced_subgraph(g, components.front());
      const Subgraph two_core = k_core(giant.graph, 2);
      vertices = two_core.graph.num_vertices();
      edges = two_core.graph.num_edges();
      corank = rank_adjacency(two_core.graph).corank;
    }
    r.two_core_vertices = vertices;
    r.two_core_edges = edges;
    r.two_core_corank = corank;
  }
}

void analyse_bipartite(const BipartiteGraph& b, std::size_t cycle_cap,
                       TrialRecord& r) {
  r.n1 = b.n1();
  r.n2 = b.n2();
  r.edges = b.num_edges();

  const BipartiteKSResult ks = karp_sipser(b);
  const SpecialCycleReport cycles = enumerate_special_cycles(ks.core, cycle_cap);
  r.i1 = ks.isolated_first;
  r.i2 = ks.isolated_second;
  r.i = r.i1 + r.i2;
  r.s = cycles.s;
  r.s1 = cycles.s1;
  r.s2 = cycles.s2;
  r.q = 0;
  r.cycle_truncated = cycles.truncated;
  r.special_cycles = cycles.cycles.size();
  for (const SpecialCycle& cycle : cycles.cycles) {
    const BipartiteKernelVector v = special_kernel_vector(ks.core, cycle);
    if (!all_zero(multiply_biadjacency(ks.core, v))) r.kernel_ok = false;
  }
  r.predicted_corank = as_signed(std::max(r.i1 + r.s1, r.i2 + r.s2));

  const RankReport rank = rank_biadjacency(b);
  r.rank = rank.rank;
  r.corank = rank.corank;
  r.primes = rank.primes;
  r.nu = max_matching(b);
  r.predicted_nu = (b.n1() + b.n2() - r.i) / 2;
  r.sigma = sigma(b.graph());
  r.defect = as_signed(r.corank) - as_signed(std::max(r.i1, r.i2));
  const std::size_t n = b.n1() + b.n2();
  r.bounds_ok = r.rank <= r.nu &&
                r.nu <= std::min(b.n1() - r.i1, b.n2() - r.i2) &&
                std::max(2 * r.rank, 2 * r.nu) <= r.sigma &&
                r.sigma <= n - r.i && r.defect >= 0;
}

struct Job {
  std::size_t index = 0;
  double c = 0;
};

SamplerConfig sampler_for(const ExperimentConfig& config, const Job& job,
                          std::uint64_t seed) {
  SamplerConfig s;
  s.seed = seed;
  s.rejection_cap = config.rejection_cap;
  const bool bipartite = config.bipartite && config.suite != Suite::kTwoCore;
  if (config.suite == Suite::kMainRmt) {
    s.m = config.m;
    if (bipartite) {
      s.model = Model::kMin2Bipartite;
      s.n1 = s.n2 = config.n;
    } else {
      s.model = Model::kMin2;
      s.n = config.n;
    }
    return s;
  }
  const double p = config.n == 0 ? 0.0 : std::min(1.0, job.c / config.n);
  s.p = p;
  if (bipartite) {
    s.model = Model::kGnnp;
    s.n1 = s.n2 = config.n;
  } else {
    s.model = Model::kGnp;
    s.n = config.n;
  }
  return s;
}

std::vector<Job> jobs_for(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  if (config.suite == Suite::kCriticalScan) {
    for (double c : config.grid) {
      for (std::size_t t = 0; t < config.trials; ++t) {
        jobs.push_back({jobs.size(), c});
      }
    }
    return jobs;
  }
  double c = config.c;
  if (config.suite == Suite::kMainRmt && config.n > 0) {
    c = config.bipartite ? static_cast<double>(config.m) / config.n
                         : 2.0 * static_cast<double>(config.m) / config.n;
  }
  for (std::size_t t = 0; t < config.trials; ++t) jobs.push_back({t, c});
  return jobs;
}

TrialRecord run_job(const ExperimentConfig& config, const Job& job) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = derive_seed(config.seed, job.index);
  const SamplerConfig sampler = sampler_for(config, job, seed);
  TrialRecord r;
  try {
    r = analyse(sample(sampler), config.suite == Suite::kTwoCore,
                config.cycle_cap);
  } catch (const Error& e) {
    r = TrialRecord{};
    r.failed = true;
    r.failure = std::string(error_kind_name(e.kind()));
  } catch (const std::exception& e) {
    r = TrialRecord{};
    r.failed = true;
    r.failure = "internal";
  }
  r.index = job.index;
  r.seed = seed;
  r.model = sampler.model;
  r.c = job.c;
  r.m = sampler.m;
  if (r.failed) {
    r.n1 = sampler.model == Model::kGnp || sampler.model == Model::kMin2
               ? sampler.n
               : sampler.n1;
    r.n2 = sampler.model == Model::kGnp || sampler.model == Model::kMin2
               ? 0
               : sampler.n2;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<TrialRecord> run_jobs(const ExperimentConfig& config,
                                  const std::vector<Job>& jobs) {
  std::vector<TrialRecord> records(jobs.size());
  const std::size_t workers = std::max<std::size_t>(
      1, std::min(jobs.size(),
                  config.threads ? config.threads : default_thread_count()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      records[k] = run_job(config, jobs[k]);
    }
  };
  if (workers == 1) {
    work();
    return records;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return records;
}

std::string join_primes(const std::vector<std::uint64_t>& primes) {
  std::string out;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(primes[k]);
  }
  return out;
}

template <class T>
std::string optional_field(const std::optional<T>& value) {
  return value ? std::to_string(*value) : std::string();
}

struct Moments {
  std::size_t count = 0;
  double mean = 0;
  double standard_error = 0;
};

template <class F>
Moments moments(const std::vector<TrialRecord>& records, F&& value) {
  Moments m;
  double sum = 0;
  double sum_sq = 0;
  for (const TrialRecord& r : records) {
    if (r.failed) continue;
    const double x = value(r);
    sum += x;
    sum_sq += x * x;
    ++m.count;
  }
  if (m.count == 0) return m;
  m.mean = sum / m.count;
  if (m.count > 1) {
    const double var = (sum_sq - m.count * m.mean * m.mean) / (m.count - 1);
    m.standard_error = std::sqrt(std::max(0.0, var) / m.count);
  }
  return m;
}

template <class F>
double rate(const std::vector<TrialRecord>& records, F&& predicate) {
  std::size_t hits = 0;
  std::size_t total = 0;
  for (const TrialRecord& r : records) {
    if (r.failed) continue;
    ++total;
    hits += predicate(r) ? 1 : 0;
  }
  return total ? static_cast<double>(hits) / total : 0.0;
}

template <class F>
std::vector<std::int64_t> collect(const std::vector<TrialRecord>& records,
                                  F&& value) {
  std::vector<std::int64_t> out;
  for (const TrialRecord& r : records) {
    if (!r.failed) out.push_back(value(r));
  }
  return out;
}

json gof_json(const GofReport& g) {
  json cells = json::array();
  for (const GofCell& cell : g.cells) {
    cells.push_back({{"lo", cell.lo},
                     {"hi", cell.hi ? json(*cell.hi) : json(nullptr)},
                     {"observed", cell.observed},
                     {"expected", cell.expected}});
  }
  json observed = json::object();
  for (auto [k, v] : g.observed) observed[std::to_string(k)] = v;
  return {{"count", g.count},
          {"observed", observed},
          {"mean_y", g.mean_y},
          {"mean_y_dagger", g.mean_y_dagger},
          {"model_mean", g.model_mean},
          {"sample_mean", g.sample_mean},
          {"standard_error", g.standard_error},
          {"z", g.z},
          {"cells", cells},
          {"chi_square", g.chi_square},
          {"dof", g.dof},
          {"p_value", g.p_value}};
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "rank-char") return Suite::kRankChar;
  if (name == "main-rmt") return Suite::kMainRmt;
  if (name == "two-core") return Suite::kTwoCore;
  if (name == "matching") return Suite::kMatching;
  if (name == "critical-scan") return Suite::kCriticalScan;
  throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::kRankChar: return "rank-char";
    case Suite::kMainRmt: return "main-rmt";
    case Suite::kTwoCore: return "two-core";
    case Suite::kMatching: return "matching";
    case Suite::kCriticalScan: return "critical-scan";
  }
  return "unknown";
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("SPARSERANK_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

TrialRecord analyse(const AnyGraph& graph, bool with_two_core,
                    std::size_t cycle_cap) {
  TrialRecord r;
  if (const auto* g = std::get_if<Graph>(&graph)) {
    analyse_graph(*g, with_two_core, cycle_cap, r);
  } else {
    analyse_bipartite(std::get<BipartiteGraph>(graph), cycle_cap, r);
  }
  return r;
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& config) {
  if (config.trials == 0) {
    throw Error(ErrorKind::kInvalidArgument, "trial count must be positive");
  }
  return run_jobs(config, jobs_for(config));
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_csv_header(std::ostream& out) {
  out << "trial,seed,model,c,n1,n2,m,edges,i,i1,i2,s,s1,s2,q,"
         "predicted_corank,rank,corank,primes,nu,predicted_nu,sigma,defect,"
         "two_core_vertices,two_core_edges,two_core_corank,cycle_truncated,"
         "bounds_ok,kernel_ok,special_cycles,failed,failure\n";
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  write_csv_header(out);
  for (const TrialRecord& r : records) {
    out << r.index << ',' << r.seed << ',' << model_name(r.model) << ','
        << format_real(r.c) << ',' << r.n1 << ',' << r.n2 << ',' << r.m << ','
        << r.edges << ',' << r.i << ',' << r.i1 << ',' << r.i2 << ',' << r.s
        << ',' << r.s1 << ',' << r.s2 << ',' << r.q << ','
        << r.predicted_corank << ',' << r.rank << ',' << r.corank << ','
        << join_primes(r.primes) << ',' << r.nu << ',' << r.predicted_nu << ','
        << r.sigma << ',' << r.defect << ','
        << optional_field(r.two_core_vertices) << ','
        << optional_field(r.two_core_edges) << ','
        << optional_field(r.two_core_corank) << ',' << r.cycle_truncated << ','
        << r.bounds_ok << ',' << r.kernel_ok << ',' << r.special_cycles << ','
        << r.failed << ',' << r.failure << '\n';
  }
}

std::vector<double> compound_pmf(double mean_y, double mean_y_dagger,
                                 std::size_t min_support) {
  constexpr double kTail = 1e-12;
  auto poisson = [](double mu, double cut, std::size_t at_least) {
    std::vector<double> pmf;
    double p = std::exp(-mu);
    double mass = 0;
    for (std::size_t k = 0;; ++k) {
      if (k > 0) p *= mu / k;
      pmf.push_back(p);
      mass += p;
      if (pmf.size() > at_least && 1.0 - mass < cut && (mu == 0 || k > mu)) {
        break;
      }
    }
    return pmf;
  };
  const std::vector<double> y = poisson(mean_y, kTail / 2, min_support);
  const std::vector<double> dagger =
      poisson(mean_y_dagger, kTail / 2, min_support / 2);
  std::vector<double> pmf(std::max(y.size() + 2 * (dagger.size() - 1),
                                   min_support + 1),
                          0.0);
  for (std::size_t a = 0; a < y.size(); ++a) {
    for (std::size_t b = 0; b < dagger.size(); ++b) {
      pmf[a + 2 * b] += y[a] * dagger[b];
    }
  }
  return pmf;
}

GofReport poisson_gof(const std::vector<std::int64_t>& values, double mu,
                      std::optional<std::pair<double, double>> compound) {
  if (values.empty()) {
    throw Error(ErrorKind::kEmptyInput, "no values to fit");
  }
  GofReport g;
  g.mean_y = compound ? compound->first : mu;
  g.mean_y_dagger = compound ? compound->second : 0.0;
  if (g.mean_y < 0 || g.mean_y_dagger < 0) {
    throw Error(ErrorKind::kInvalidArgument, "Poisson means must be >= 0");
  }
  g.count = values.size();
  g.model_mean = g.mean_y + 2 * g.mean_y_dagger;
  g.model_variance = g.mean_y + 4 * g.mean_y_dagger;
  std::int64_t largest = 0;
  double sum = 0;
  for (std::int64_t v : values) {
    if (v < 0) throw Error(ErrorKind::kInvalidArgument, "negative count");
    ++g.observed[v];
    largest = std::max(largest, v);
    sum += static_cast<double>(v);
  }
  g.sample_mean = sum / g.count;
  g.standard_error = std::sqrt(g.model_variance / g.count);
  const double gap = g.sample_mean - g.model_mean;
  if (g.standard_error > 0) {
    g.z = gap / g.standard_error;
  } else {
    g.z = gap == 0 ? 0.0 : std::copysign(INFINITY, gap);
  }

  const std::vector<double> pmf = compound_pmf(
      g.mean_y, g.mean_y_dagger, static_cast<std::size_t>(largest));
  // Singleton cells 0..K-1 plus an open tail from K, then pooled from the
  // top down until every cell expects at least 5.
  const std::size_t top = pmf.size() - 1;
  std::vector<GofCell> raw;
  double below = 0;
  for (std::size_t k = 0; k <= top; ++k) {
    GofCell cell;
    cell.lo = static_cast<std::int64_t>(k);
    if (k < top) {
      cell.hi = cell.lo;
      cell.expected = pmf[k] * g.count;
      below += pmf[k];
    } else {
      cell.expected = std::max(0.0, 1.0 - below) * g.count;
    }
    raw.push_back(cell);
  }
  for (auto [v, count] : g.observed) {
    raw[std::min<std::size_t>(static_cast<std::size_t>(v), top)].observed +=
        count;
  }
  std::vector<GofCell> pooled;
  GofCell open = raw.back();
  for (std::size_t k = raw.size() - 1; k-- > 0;) {
    if (open.expected >= 5) {
      pooled.push_back(open);
      open = raw[k];
    } else {
      open.lo = raw[k].lo;
      open.observed += raw[k].observed;
      open.expected += raw[k].expected;
    }
  }
  if (open.expected < 5 && !pooled.empty()) {
    GofCell& above = pooled.back();
    above.lo = open.lo;
    above.observed += open.observed;
    above.expected += open.expected;
  } else {
    pooled.push_back(open);
  }
  std::reverse(pooled.begin(), pooled.end());
  g.cells = pooled;

  for (const GofCell& cell : g.cells) {
    if (cell.expected > 0) {
      const double d = cell.observed - cell.expected;
      g.chi_square += d * d / cell.expected;
    } else if (cell.observed > 0) {
      g.chi_square = INFINITY;
    }
  }
  g.dof = g.cells.size() - 1;
  if (g.dof == 0) {
    g.p_value = std::isinf(g.chi_square) ? 0.0 : 1.0;
  } else if (std::isinf(g.chi_square)) {
    g.p_value = 0.0;
  } else {
    const boost::math::chi_squared dist(static_cast<double>(g.dof));
    g.p_value = boost::math::cdf(boost::math::complement(dist, g.chi_square));
  }
  return g;
}

TwoCoreReport two_core_experiment(double c, std::size_t n, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads) {
  const analytics::TwoCoreParams params = analytics::two_core_params(c);
  ExperimentConfig config;
  config.suite = Suite::kTwoCore;
  config.n = n;
  config.c = c;
  config.trials = trials;
  config.seed = seed;
  config.threads = threads;
  TwoCoreReport report;
  report.c = c;
  report.trials = trials;
  report.predicted_probability = params.nonsingular_prob;
  report.mu = params.mu;
  report.records = run_trials(config);
  const auto coranks = collect(report.records, [](const TrialRecord& r) {
    return as_signed(*r.two_core_corank);
  });
  report.excluded = trials - coranks.size();
  if (coranks.empty()) return report;
  report.nonsingular_frequency =
      static_cast<double>(std::count(coranks.begin(), coranks.end(), 0)) /
      coranks.size();
  report.gof = poisson_gof(coranks, params.mu);
  report.mean_corank = report.gof.sample_mean;
  return report;
}

std::vector<ScanRow> scan_table(const std::vector<TrialRecord>& records) {
  std::vector<ScanRow> rows;
  std::map<double, std::vector<TrialRecord>> by_c;
  std::vector<double> order;
  for (const TrialRecord& r : records) {
    if (!by_c.count(r.c)) order.push_back(r.c);
    by_c[r.c].push_back(r);
  }
  for (double c : order) {
    const auto& group = by_c[c];
    ScanRow row;
    row.c = c;
    row.trials = group.size();
    row.excluded = static_cast<std::size_t>(
        std::count_if(group.begin(), group.end(),
                      [](const TrialRecord& r) { return r.failed; }));
    row.mean_defect =
        moments(group, [](const TrialRecord& r) { return double(r.defect); })
            .mean;
    row.mean_i_fraction = moments(group, [](const TrialRecord& r) {
                            return double(r.i) / std::max<std::size_t>(
                                                     1, r.num_vertices());
                          }).mean;
    try {
      const analytics::PoissonParams params =
          analytics::corank_distribution_params(c);
      row.gamma_b = params.gamma_b;
      row.gamma_a = params.gamma_a;
    } catch (const Error&) {
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScanRow> critical_scan(const std::vector<double>& grid,
                                   std::size_t n, std::size_t trials,
                                   std::uint64_t seed, std::size_t threads) {
  ExperimentConfig config;
  config.suite = Suite::kCriticalScan;
  config.n = n;
  config.grid = grid;
  config.trials = trials;
  config.seed = seed;
  config.threads = threads;
  return scan_table(run_trials(config));
}

std::string summary_json(const ExperimentConfig& config,
                         const std::vector<TrialRecord>& records) {
  json out;
  out["csv_schema"] = kCsvSchemaVersion;
  out["suite"] = suite_name(config.suite);
  json grid = json::array();
  for (double c : config.grid) grid.push_back(c);
  out["config"] = {{"n", config.n},
                   {"c", config.c},
                   {"m", config.m},
                   {"trials", config.trials},
                   {"seed", config.seed},
                   {"bipartite", config.bipartite},
                   {"grid", grid},
                   {"cycle_cap", config.cycle_cap}};

  std::size_t failed = 0;
  std::size_t violations = 0;
  std::size_t kernel_failures = 0;
  std::size_t truncated = 0;
  std::size_t cycles_checked = 0;
  double seconds = 0;
  json failures = json::array();
  for (const TrialRecord& r : records) {
    seconds += r.seconds;
    if (r.failed) {
      ++failed;
      failures.push_back({{"trial", r.index}, {"error", r.failure}});
      continue;
    }
    violations += !r.bounds_ok;
    kernel_failures += !r.kernel_ok;
    truncated += r.cycle_truncated;
    cycles_checked += r.special_cycles;
  }
  out["records"] = records.size();
  out["excluded_failed_trials"] = failed;
  out["failures"] = failures;
  out["ks_bound_violations"] = violations;
  out["kernel_vector_failures"] = kernel_failures;
  out["special_cycles_checked"] = cycles_checked;
  out["cycle_search_truncations"] = truncated;
  out["timing"] = {{"total_trial_seconds", seconds},
                   {"mean_trial_seconds",
                    records.empty() ? 0.0 : seconds / records.size()}};
  out["note"] =
      "Agreement rates are descriptive; any pass threshold applied to them is "
      "an engineering choice, since the limit statements give no finite-n "
      "rate.";

  const Moments defect =
      moments(records, [](const TrialRecord& r) { return double(r.defect); });
  const Moments s =
      moments(records, [](const TrialRecord& r) { return double(r.s); });
  out["mean_defect"] = defect.mean;
  out["mean_s"] = s.mean;
  out["stderr_s"] = s.standard_error;
  out["rate_corank_equals_prediction"] = rate(records, [](const TrialRecord& r) {
    return as_signed(r.corank) == r.predicted_corank;
  });
  out["mean_abs_corank_minus_prediction"] =
      moments(records, [](const TrialRecord& r) {
        return std::fabs(double(as_signed(r.corank) - r.predicted_corank));
      }).mean;
  out["rate_nu_equals_prediction"] = rate(
      records, [](const TrialRecord& r) { return r.nu == r.predicted_nu; });

  try {
    switch (config.suite) {
      case Suite::kRankChar: {
        const auto params = analytics::corank_distribution_params(config.c);
        out["gamma_b"] = params.gamma_b;
        out["gamma_a"] = params.gamma_a;
        out["gamma_a_dagger"] = params.gamma_a_dagger;
        const auto defects =
            collect(records, [](const TrialRecord& r) { return r.defect; });
        if (!defects.empty()) {
          out["defect_gof"] = gof_json(
              config.bipartite
                  ? poisson_gof(defects, params.gamma_b)
                  : poisson_gof(defects, 0,
                                std::pair{params.gamma_a,
                                          params.gamma_a_dagger}));
        }
        break;
      }
      case Suite::kMainRmt: {
        const double alpha =
            config.bipartite ? static_cast<double>(config.m) / config.n
                             : 2.0 * static_cast<double>(config.m) / config.n;
        const auto stats = analytics::truncated_poisson_from_mean(alpha);
        const auto [g, gd] = analytics::gamma_pair(stats.lambda);
        out["lambda"] = stats.lambda;
        out["gamma"] = g;
        out["gamma_dagger"] = gd;
        out["rate_rank_equals_n_minus_s"] =
            rate(records, [&](const TrialRecord& r) {
              return config.bipartite ? r.rank + r.s2 == r.n2
                                      : r.rank + r.s == r.n1;
            });
        if (config.bipartite) {
          const auto s1 =
              collect(records, [](const TrialRecord& r) { return as_signed(r.s1); });
          if (!s1.empty()) out["s1_gof"] = gof_json(poisson_gof(s1, g));
        } else {
          const auto values =
              collect(records, [](const TrialRecord& r) { return as_signed(r.s); });
          if (!values.empty()) {
            out["s_gof"] =
                gof_json(poisson_gof(values, 0, std::pair{g - 2 * gd, gd}));
          }
        }
        break;
      }
      case Suite::kTwoCore: {
        const auto params = analytics::two_core_params(config.c);
        const auto coranks = collect(records, [](const TrialRecord& r) {
          return as_signed(*r.two_core_corank);
        });
        out["lambda2"] = params.lambda2;
        out["nonsingular_probability"] = params.nonsingular_prob;
        out["mu"] = params.mu;
        if (!coranks.empty()) {
          out["nonsingular_frequency"] =
              static_cast<double>(
                  std::count(coranks.begin(), coranks.end(), 0)) /
              coranks.size();
          out["two_core_corank_gof"] = gof_json(poisson_gof(coranks, params.mu));
        }
        break;
      }
      case Suite::kMatching:
        break;
      case Suite::kCriticalScan: {
        json rows = json::array();
        for (const ScanRow& row : scan_table(records)) {
          rows.push_back(
              {{"c", row.c},
               {"trials", row.trials},
               {"excluded", row.excluded},
               {"mean_defect", row.mean_defect},
               {"mean_i_fraction", row.mean_i_fraction},
               {"gamma_b", row.gamma_b ? json(*row.gamma_b) : json(nullptr)},
               {"gamma_a", row.gamma_a ? json(*row.gamma_a) : json(nullptr)}});
        }
        out["scan"] = rows;
        break;
      }
    }
  } catch (const Error& e) {
    out["analytics_error"] = std::string(error_kind_name(e.kind()));
  }
  return out.dump(2);
}

}  // namespace sparserank::harness
