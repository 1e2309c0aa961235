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

#include <iosfwd>
#include <string>

#include "sparserank/graph.hpp"

namespace sparserank {

// Edge-list text format. Header `n m` (graph) or `n1 n2 m` (bipartite),
// then m lines `u v`, 0-indexed and whitespace separated. For bipartite
// files u indexes V1 and v indexes V2 locally. `#` starts a comment that
// runs to end of line. Writers emit the canonical sorted edge order, so a
// written file reads back and re-writes byte for byte.

Graph read_graph(std::istream& in);
BipartiteGraph read_bipartite(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
void write_bipartite(std::ostream& out, const BipartiteGraph& b);

Graph read_graph_file(const std::string& path);
BipartiteGraph read_bipartite_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
void write_bipartite_file(const std::string& path, const BipartiteGraph& b);

std::string to_edge_list(const Graph& g);
std::string to_edge_list(const BipartiteGraph& b);

}  // namespace sparserank
