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

// Python bindings for the sparserank core.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "sparserank/analytics.hpp"
#include "sparserank/cycles.hpp"
#include "sparserank/errors.hpp"
#include "sparserank/generators.hpp"
#include "sparserank/graph.hpp"
#include "sparserank/harness.hpp"
#include "sparserank/io.hpp"
#include "sparserank/linalg.hpp"
#include "sparserank/matching.hpp"
#include "sparserank/peeling.hpp"
#include "sparserank/predictor.hpp"

namespace py = pybind11;
using namespace sparserank;

namespace {

py::dict prediction_dict(const Prediction& p) {
  py::dict d;
  d["predicted"] = p.predicted;
  d["i"] = p.i;
  d["i1"] = p.i1;
  d["i2"] = p.i2;
  d["s"] = p.s;
  d["s1"] = p.s1;
  d["s2"] = p.s2;
  d["q"] = p.q;
  d["core_vertices"] = p.core_vertices;
  d["core_edges"] = p.core_edges;
  d["lower_bound"] = p.lower_bound;
  d["exact_corank"] = p.exact_corank;
  d["defect"] = p.defect;
  return d;
}

py::dict rank_dict(const RankReport& r) {
  py::dict d;
  d["rank"] = r.rank;
  d["corank"] = r.corank;
  d["rows"] = r.rows;
  d["cols"] = r.cols;
  d["method"] = method_name(r.method);
  d["primes"] = r.primes;
  d["per_prime_ranks"] = r.per_prime_ranks;
  return d;
}

py::list cycle_list(const SpecialCycleReport& r) {
  py::list out;
  for (const SpecialCycle& c : r.cycles) {
    py::dict d;
    d["vertices"] = c.vertices;
    d["isolated"] = c.isolated;
    d["kind"] = c.kind == CycleKind::kSpecial        ? "special"
                : c.kind == CycleKind::kFirstSpecial ? "first"
                                                     : "second";
    out.append(d);
  }
  return out;
}

RankMethod method_of(const std::string& name) { return parse_method(name); }

}  // namespace

PYBIND11_MODULE(_sparserank, m) {
  m.doc() = "Rank of sparse random graphs via Karp-Sipser cores";

  static PyObject* error_type =
      py::exception<Error>(m, "SparserankError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string kind(error_kind_name(e.kind()));
      py::object exc = py::handle(error_type)(kind + ": " + e.what());
      exc.attr("kind") = kind;
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) {
             return build_graph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init([](std::size_t n1, std::size_t n2,
                       const std::vector<Edge>& edges) {
             return BipartiteGraph::from_edges(n1, n2, edges);
           }),
           py::arg("n1"), py::arg("n2"), py::arg("edges"))
      .def_property_readonly("n1", &BipartiteGraph::n1)
      .def_property_readonly("n2", &BipartiteGraph::n2)
      .def_property_readonly("num_edges", &BipartiteGraph::num_edges)
      .def_property_readonly("edges", &BipartiteGraph::local_edges)
      .def_property_readonly("graph", &BipartiteGraph::graph)
      .def("to_edge_list",
           [](const BipartiteGraph& b) { return to_edge_list(b); })
      .def(py::self == py::self)
      .def("__repr__", [](const BipartiteGraph& b) {
        return "BipartiteGraph(n1=" + std::to_string(b.n1()) +
               ", n2=" + std::to_string(b.n2()) +
               ", m=" + std::to_string(b.num_edges()) + ")";
      });

  m.def("read_graph", [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  });
  m.def("read_bipartite", [](const std::string& text) {
    std::istringstream in(text);
    return read_bipartite(in);
  });
  m.def("bipartite_double", &bipartite_double);

  m.def("sample_gnp", &sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("sample_bipartite_gnp", &sample_bipartite_gnp, py::arg("n1"),
        py::arg("n2"), py::arg("p"), py::arg("seed"));
  m.def("sample_min2", &sample_min2, py::arg("n"), py::arg("m"),
        py::arg("seed"), py::arg("cap") = kDefaultRejectionCap);
  m.def("sample_min2_bipartite", &sample_min2_bipartite, py::arg("n1"),
        py::arg("n2"), py::arg("m"), py::arg("seed"),
        py::arg("cap") = kDefaultRejectionCap);
  m.def(
      "sample_with_degree_sequence",
      [](const std::vector<std::size_t>& d, std::uint64_t seed,
         std::uint64_t cap) { return sample_with_degree_sequence(d, seed, cap); },
      py::arg("degrees"), py::arg("seed"), py::arg("cap") = kDefaultRejectionCap);

  m.def(
      "karp_sipser",
      [](const Graph& g, std::optional<std::uint64_t> order_seed) {
        KSOptions options;
        if (order_seed) options.order = LeafOrder::randomized(*order_seed);
        const KSResult r = karp_sipser(g, options);
        py::dict d;
        d["core"] = r.core.graph;
        d["original"] = r.core.original;
        d["isolated"] = r.isolated;
        d["steps"] = r.steps;
        return d;
      },
      py::arg("g"), py::arg("order_seed") = py::none());
  m.def("karp_sipser_bipartite", [](const BipartiteGraph& b) {
    const BipartiteKSResult r = karp_sipser(b);
    py::dict d;
    d["core"] = r.core;
    d["original"] = r.original;
    d["isolated_first"] = r.isolated_first;
    d["isolated_second"] = r.isolated_second;
    d["steps"] = r.steps;
    return d;
  });

  m.def(
      "special_cycles",
      [](const Graph& g, std::size_t max_length) {
        const SpecialCycleReport r = enumerate_special_cycles(g, max_length);
        py::dict d;
        d["s"] = r.s;
        d["truncated"] = r.truncated;
        d["cycles"] = cycle_list(r);
        return d;
      },
      py::arg("g"), py::arg("max_length") = 0);
  m.def(
      "special_cycles_bipartite",
      [](const BipartiteGraph& b, std::size_t max_length) {
        const SpecialCycleReport r = enumerate_special_cycles(b, max_length);
        py::dict d;
        d["s1"] = r.s1;
        d["s2"] = r.s2;
        d["truncated"] = r.truncated;
        d["cycles"] = cycle_list(r);
        return d;
      },
      py::arg("b"), py::arg("max_length") = 0);

  m.def(
      "rank",
      [](const Graph& g, const std::string& method) {
        return rank_dict(rank_adjacency(g, method_of(method)));
      },
      py::arg("g"), py::arg("method") = "modular");
  m.def(
      "rank_bipartite",
      [](const BipartiteGraph& b, const std::string& method) {
        return rank_dict(rank_biadjacency(b, method_of(method)));
      },
      py::arg("b"), py::arg("method") = "modular");
  m.def("is_prime", &is_prime);

  m.def("max_matching", py::overload_cast<const Graph&>(&max_matching));
  m.def("max_matching_bipartite",
        py::overload_cast<const BipartiteGraph&>(&max_matching));
  m.def("sigma", &sigma);

  m.def(
      "predict_corank",
      [](const Graph& g, bool with_exact) {
        Prediction p = predict_corank_adjacency(g);
        if (with_exact) attach_exact(g, p);
        return prediction_dict(p);
      },
      py::arg("g"), py::arg("with_exact") = false);
  m.def(
      "predict_corank_bipartite",
      [](const BipartiteGraph& b, bool with_exact) {
        Prediction p = predict_corank_biadjacency(b);
        if (with_exact) attach_exact(b, p);
        return prediction_dict(p);
      },
      py::arg("b"), py::arg("with_exact") = false);
  m.def("predict_matching_number", [](const Graph& g) {
    return prediction_dict(predict_matching_number(g));
  });

  m.def("solve_eta", &analytics::solve_eta);
  m.def("gamma", &analytics::gamma);
  m.def("gamma_dagger", &analytics::gamma_dagger);
  m.def("corank_params", [](double c) {
    const auto p = analytics::corank_distribution_params(c);
    py::dict d;
    d["c"] = p.c;
    d["supercritical"] = p.regime == analytics::Regime::kSupercritical;
    d["eta"] = p.eta;
    d["alpha_lo"] = p.alpha_lo;
    d["alpha_hi"] = p.alpha_hi;
    d["lambda_ks"] = p.lambda_ks;
    d["gamma_b"] = p.gamma_b;
    d["gamma_a"] = p.gamma_a;
    d["gamma_a_dagger"] = p.gamma_a_dagger;
    return d;
  });
  m.def("two_core_params", [](double c) {
    const auto t = analytics::two_core_params(c);
    py::dict d;
    d["lambda2"] = t.lambda2;
    d["nonsingular_prob"] = t.nonsingular_prob;
    d["mu"] = t.mu;
    return d;
  });
  m.def("truncated_poisson_from_mean", [](double mean) {
    const auto s = analytics::truncated_poisson_from_mean(mean);
    py::dict d;
    d["lambda"] = s.lambda;
    d["mean"] = s.mean;
    d["rho"] = s.rho;
    d["e2"] = s.e2;
    return d;
  });

  m.def(
      "run_experiment",
      [](const std::string& suite, std::size_t n, double c, std::size_t m_edges,
         std::size_t trials, std::uint64_t seed, bool bipartite,
         const std::vector<double>& grid, std::size_t threads) {
        harness::ExperimentConfig config;
        config.suite = harness::parse_suite(suite);
        config.n = n;
        config.c = c;
        config.m = m_edges;
        config.trials = trials;
        config.seed = seed;
        config.bipartite = bipartite;
        config.grid = grid;
        config.threads = threads;
        std::vector<harness::TrialRecord> records;
        {
          py::gil_scoped_release release;
          records = harness::run_trials(config);
        }
        std::ostringstream csv;
        harness::write_csv(csv, records);
        return py::make_tuple(csv.str(), harness::summary_json(config, records));
      },
      py::arg("suite"), py::arg("n") = 1000, py::arg("c") = 4.0,
      py::arg("m") = 0, py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("bipartite") = false, py::arg("grid") = std::vector<double>{},
      py::arg("threads") = 0);
}
