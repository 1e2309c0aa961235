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

// Command-line front end: gen, ks, cycles, rank, predict, params, experiment.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparserank/analytics.hpp"
#include "sparserank/cycles.hpp"
#include "sparserank/errors.hpp"
#include "sparserank/generators.hpp"
#include "sparserank/harness.hpp"
#include "sparserank/io.hpp"
#include "sparserank/linalg.hpp"
#include "sparserank/matching.hpp"
#include "sparserank/peeling.hpp"
#include "sparserank/predictor.hpp"

namespace {

using nlohmann::json;
using namespace sparserank;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::vector<std::size_t> read_degrees(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  std::vector<std::size_t> out;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::getline(in, token);
      continue;
    }
    try {
      std::size_t used = 0;
      const long long value = std::stoll(token, &used);
      if (used != token.size() || value < 0) throw std::invalid_argument(token);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParseError, "bad degree '" + token + "'");
    }
  }
  return out;
}

void emit(const json& doc, const std::string& path = "") {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream(path) << doc.dump(2) << '\n';
  }
}

json rank_json(const RankReport& r) {
  return {{"rank", r.rank},
          {"corank", r.corank},
          {"rows", r.rows},
          {"cols", r.cols},
          {"method", method_name(r.method)},
          {"primes", r.primes},
          {"per_prime_ranks", r.per_prime_ranks}};
}

json prediction_json(const Prediction& p, bool bipartite) {
  json out = {{"predicted_corank", p.predicted},
              {"s", p.s},
              {"q", p.q},
              {"core_vertices", p.core_vertices},
              {"core_edges", p.core_edges},
              {"lower_bound", p.lower_bound},
              {"exact_corank", opt(p.exact_corank)},
              {"defect", opt(p.defect)}};
  if (bipartite) {
    out["i1"] = p.i1;
    out["i2"] = p.i2;
    out["s1"] = p.s1;
    out["s2"] = p.s2;
  } else {
    out["i"] = p.i;
  }
  return out;
}

json cycles_json(const SpecialCycleReport& report) {
  json list = json::array();
  for (const SpecialCycle& c : report.cycles) {
    const char* kind = c.kind == CycleKind::kSpecial        ? "special"
                       : c.kind == CycleKind::kFirstSpecial ? "1-special"
                                                            : "2-special";
    list.push_back({{"vertices", c.vertices},
                    {"length", c.length()},
                    {"kind", kind},
                    {"isolated", c.isolated}});
  }
  return {{"s", report.s},
          {"s1", report.s1},
          {"s2", report.s2},
          {"truncated", report.truncated},
          {"max_length", report.max_length},
          {"cycles", list}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Karp-Sipser cores, special cycles and sparse random matrix rank"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  bool bipartite = false;

  // gen
  auto* gen = app.add_subcommand("gen", "sample a random graph");
  std::string model = "gnp";
  std::size_t n = 0, n1 = 0, n2 = 0, m = 0;
  double p = 0;
  std::string degrees_path;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultRejectionCap;
  gen->add_option("--model", model, "gnp|gnnp|min2|min2-bip|degseq")
      ->required();
  gen->add_option("--n", n);
  gen->add_option("--n1", n1);
  gen->add_option("--n2", n2);
  gen->add_option("--p", p);
  gen->add_option("--m", m);
  gen->add_option("--degrees", degrees_path,
                  "degree file; with --n1 the first n1 entries are side 1");
  gen->add_option("--seed", seed);
  gen->add_option("--rejection-cap", cap);
  gen->add_option("--out", out_path, "edge-list path (default stdout)");

  // ks
  auto* ks = app.add_subcommand("ks", "Karp-Sipser leaf removal");
  bool trace = false;
  std::string core_out;
  ks->add_option("--in", in_path)->required();
  ks->add_flag("--bipartite", bipartite);
  ks->add_flag("--trace", trace, "include the removal trace");
  ks->add_option("--core-out", core_out, "write the core as an edge list");

  // cycles
  auto* cycles = app.add_subcommand("cycles", "special cycle report");
  std::size_t max_len = 0;
  cycles->add_option("--in", in_path)->required();
  cycles->add_flag("--bipartite", bipartite);
  cycles->add_option("--max-len", max_len, "length cap (default min(n, 64))");

  // rank
  auto* rank = app.add_subcommand("rank", "adjacency or biadjacency rank");
  std::string method = "modular";
  rank->add_option("--in", in_path)->required();
  rank->add_flag("--bipartite", bipartite);
  rank->add_option("--method", method, "modular|exact");

  // predict
  auto* predict = app.add_subcommand("predict", "combinatorial corank prediction");
  bool with_exact = false;
  predict->add_option("--in", in_path)->required();
  predict->add_flag("--bipartite", bipartite);
  predict->add_flag("--with-exact", with_exact);

  // params
  auto* params = app.add_subcommand("params", "analytic constants");
  std::optional<double> c;
  bool two_core = false;
  std::optional<double> trunc_mean;
  params->add_option("--c", c, "density; needed unless only --trunc-mean");
  params->add_flag("--two-core", two_core);
  params->add_option("--trunc-mean", trunc_mean);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo suite");
  harness::ExperimentConfig config;
  std::string suite;
  std::string json_path;
  experiment->add_option("--suite", suite,
                         "rank-char|main-rmt|two-core|matching|critical-scan")
      ->required();
  experiment->add_option("--n", config.n);
  experiment->add_option("--c", config.c);
  experiment->add_option("--m", config.m);
  experiment->add_option("--grid", config.grid, "critical-scan densities")
      ->delimiter(',');
  experiment->add_option("--trials", config.trials);
  experiment->add_option("--seed", config.seed);
  experiment->add_option("--threads", config.threads,
                         "worker threads (default SPARSERANK_THREADS or all)");
  experiment->add_flag("--bipartite", config.bipartite);
  experiment->add_option("--out", out_path, "CSV path")->required();
  experiment->add_option("--json", json_path, "summary JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      SamplerConfig s;
      s.model = parse_model(model);
      s.n = n;
      s.n1 = n1;
      s.n2 = n2;
      s.p = p;
      s.m = m;
      s.seed = seed;
      s.rejection_cap = cap;
      if (s.model == Model::kDegreeSequence) {
        if (degrees_path.empty()) {
          throw Error(ErrorKind::kInvalidArgument, "degseq needs --degrees");
        }
        auto all = read_degrees(degrees_path);
        if (n1 > 0) {
          if (n1 > all.size()) {
            throw Error(ErrorKind::kInvalidArgument, "--n1 exceeds degree count");
          }
          s.degrees.assign(all.begin(), all.begin() + n1);
          s.second_degrees.assign(all.begin() + n1, all.end());
        } else {
          s.degrees = std::move(all);
        }
      }
      const AnyGraph g = sample(s);
      const std::string text = std::visit(
          [](const auto& graph) { return to_edge_list(graph); }, g);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path) << text;
      }
    } else if (*ks) {
      KSOptions options;
      options.record_trace = trace;
      json out;
      std::vector<Edge> steps;
      if (bipartite) {
        const BipartiteGraph b = read_bipartite_file(in_path);
        const BipartiteKSResult r = karp_sipser(b, options);
        out = {{"i1", r.isolated_first},
               {"i2", r.isolated_second},
               {"steps", r.steps},
               {"core_vertices", r.core.n1() + r.core.n2()},
               {"core_n1", r.core.n1()},
               {"core_n2", r.core.n2()},
               {"core_edges", r.core.num_edges()},
               {"core_original_labels", r.original}};
        steps = r.trace;
        if (!core_out.empty()) write_bipartite_file(core_out, r.core);
      } else {
        const Graph g = read_graph_file(in_path);
        const KSResult r = karp_sipser(g, options);
        out = {{"i", r.isolated},
               {"steps", r.steps},
               {"core_vertices", r.core.graph.num_vertices()},
               {"core_edges", r.core.graph.num_edges()},
               {"core_original_labels", r.core.original}};
        steps = r.trace;
        if (!core_out.empty()) write_graph_file(core_out, r.core.graph);
      }
      if (trace) {
        json t = json::array();
        for (auto [leaf, hub] : steps) t.push_back({leaf, hub});
        out["trace"] = t;
      }
      emit(out);
    } else if (*cycles) {
      if (bipartite) {
        const BipartiteGraph b = read_bipartite_file(in_path);
        json out = cycles_json(enumerate_special_cycles(b, max_len));
        out["q"] = 0;
        emit(out);
      } else {
        const Graph g = read_graph_file(in_path);
        json out = cycles_json(enumerate_special_cycles(g, max_len));
        out["q"] = isolated_cycle_census(g).q;
        emit(out);
      }
    } else if (*rank) {
      const RankMethod how = parse_method(method);
      emit(rank_json(bipartite ? rank_biadjacency(read_bipartite_file(in_path), how)
                               : rank_adjacency(read_graph_file(in_path), how)));
    } else if (*predict) {
      json out;
      if (bipartite) {
        const BipartiteGraph b = read_bipartite_file(in_path);
        Prediction pr = predict_corank_biadjacency(b);
        if (with_exact) attach_exact(b, pr);
        out = prediction_json(pr, true);
        out["nu"] = max_matching(b);
      } else {
        const Graph g = read_graph_file(in_path);
        Prediction pr = predict_corank_adjacency(g);
        if (with_exact) attach_exact(g, pr);
        out = prediction_json(pr, false);
        out["predicted_nu"] = predict_matching_number(g).predicted;
        if (with_exact) {
          out["nu"] = max_matching(g);
          out["sigma"] = sigma(g);
        }
      }
      emit(out);
    } else if (*params) {
      if (!c && !trunc_mean) {
        throw Error(ErrorKind::kInvalidArgument, "params needs --c or --trunc-mean");
      }
      json out;
      if (c) {
        out["c"] = *c;
        try {
          const auto pp = analytics::corank_distribution_params(*c);
          out["regime"] = pp.regime == analytics::Regime::kSubcritical
                              ? "subcritical"
                              : "supercritical";
          out["eta"] = opt(pp.eta);
          out["alpha_lo"] = opt(pp.alpha_lo);
          out["alpha_hi"] = opt(pp.alpha_hi);
          out["lambda_ks"] = opt(pp.lambda_ks);
          out["gamma_b"] = pp.gamma_b;
          out["gamma_a"] = pp.gamma_a;
          out["gamma_a_dagger"] = pp.gamma_a_dagger;
        } catch (const Error& e) {
          out["poisson_params_error"] = std::string(error_kind_name(e.kind()));
        }
        if (two_core) {
          const auto tc = analytics::two_core_params(*c);
          out["two_core"] = {{"lambda2", tc.lambda2},
                             {"nonsingular_prob", tc.nonsingular_prob},
                             {"mu", tc.mu}};
        }
      }
      if (trunc_mean) {
        const auto st = analytics::truncated_poisson_from_mean(*trunc_mean);
        const auto gp = analytics::gamma_pair(st.lambda);
        std::vector<double> rho(st.rho.begin(),
                                st.rho.begin() + std::min<std::size_t>(
                                                     st.rho.size(), 17));
        out["truncated_poisson"] = {{"mean", st.mean},
                                    {"lambda", st.lambda},
                                    {"e2", st.e2},
                                    {"rho_0_to_16", rho},
                                    {"tail_mass", st.tail_mass},
                                    {"gamma", gp.gamma},
                                    {"gamma_dagger", gp.gamma_dagger}};
      }
      emit(out);
    } else if (*experiment) {
      config.suite = harness::parse_suite(suite);
      const auto records = harness::run_trials(config);
      std::ofstream csv(out_path);
      harness::write_csv(csv, records);
      if (!json_path.empty()) {
        std::ofstream(json_path) << harness::summary_json(config, records)
                                 << '\n';
      }
    }
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
              << '\n';
    return 2;
  }
  return 0;
}
