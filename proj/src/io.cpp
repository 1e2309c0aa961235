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

#include "sparserank/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "sparserank/errors.hpp"

namespace sparserank {

namespace {

// Strips comments and returns every whitespace-separated token as an
// unsigned integer.
std::vector<std::uint64_t> tokenize(std::istream& in) {
  std::vector<std::uint64_t> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      std::uint64_t value = 0;
      try {
        if (tok.front() == '-') throw std::invalid_argument(tok);
        value = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) +
                                                ": bad token '" + tok + "'");
      }
      values.push_back(value);
    }
  }
  return values;
}

std::vector<Edge> take_edges(const std::vector<std::uint64_t>& values,
                             std::size_t header, std::uint64_t m) {
  if (values.size() != header + 2 * m) {
    throw Error(ErrorKind::kParseError,
                "header announces " + std::to_string(m) + " edges but " +
                    std::to_string(values.size() - header) +
                    " endpoint values follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = header; i < values.size(); i += 2) {
    constexpr auto kMax = std::numeric_limits<Vertex>::max();
    if (values[i] > kMax || values[i + 1] > kMax) {
      throw Error(ErrorKind::kVertexOutOfRange, "vertex label too large");
    }
    edges.emplace_back(static_cast<Vertex>(values[i]),
                       static_cast<Vertex>(values[i + 1]));
  }
  return edges;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto values = tokenize(in);
  if (values.size() < 2) {
    throw Error(ErrorKind::kParseError, "missing `n m` header");
  }
  return Graph::from_edges(values[0], take_edges(values, 2, values[1]));
}

BipartiteGraph read_bipartite(std::istream& in) {
  const auto values = tokenize(in);
  if (values.size() < 3) {
    throw Error(ErrorKind::kParseError, "missing `n1 n2 m` header");
  }
  return BipartiteGraph::from_edges(values[0], values[1],
                                    take_edges(values, 3, values[2]));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_bipartite(std::ostream& out, const BipartiteGraph& b) {
  out << b.n1() << ' ' << b.n2() << ' ' << b.num_edges() << '\n';
  for (auto [u, w] : b.local_edges()) out << u << ' ' << w << '\n';
}

Graph read_graph_file(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

BipartiteGraph read_bipartite_file(const std::string& path) {
  auto in = open_in(path);
  return read_bipartite(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
}

void write_bipartite_file(const std::string& path, const BipartiteGraph& b) {
  auto out = open_out(path);
  write_bipartite(out, b);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string to_edge_list(const BipartiteGraph& b) {
  std::ostringstream os;
  write_bipartite(os, b);
  return os.str();
}

}  // namespace sparserank
