// Copyright 2026 the homshift authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homshift/error.hpp"

namespace homshift {

// Vertex sequence by index into a Graph's canonical vertex order.
using VertexSeq = std::vector<int>;

// Finite undirected graph with optional self-loops. Vertices are named by
// strings and kept in lexicographic order, so every iteration over the graph
// is deterministic. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // `edges` pairs of vertex names; a pair {v,v} declares a self-loop.
  // `isolated` declares vertices with no incident edge.
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& isolated = {});

  // Text format: one edge per line "u v", isolated vertices as "vertex u",
  // '#' starts a comment line.
  static Graph parse_text(const std::string& text);
  std::string to_text() const;  // canonical: sorted lines

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const;
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  // Index of a named vertex, or nullopt.
  std::optional<int> find(const std::string& name) const;
  int require(const std::string& name) const;

  bool adjacent(int u, int v) const { return mat_[u][v] != 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_loop(int v) const { return mat_[v][v] != 0; }
  // Unordered edges {u,v} with u <= v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool same_vertices(const Graph& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<char>> mat_;
  std::vector<std::pair<int, int>> edges_;
};

// Rooted spanning tree. `parent[v]` is -1 at the root. Tree edges are a
// subset of the graph's edges; `path_from_root(v)` is the unique simple walk
// root -> v.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent;
  std::vector<int> depth;

  bool has_edge(int u, int v) const { return parent[u] == v || parent[v] == u; }
  VertexSeq path_from_root(int v) const;
  // The unique simple tree walk from `from` to `to` (through their meeting
  // point toward the root).
  VertexSeq tree_walk(int from, int to) const;
  std::vector<std::pair<int, int>> edge_set() const;  // {u,v}, u<v, sorted
};

bool is_connected(const Graph& g);

// Proper 2-coloring, or an odd closed walk witnessing non-bipartiteness.
struct BipartiteCertificate {
  bool bipartite = false;
  std::vector<int> coloring;  // valid when bipartite
  VertexSeq odd_cycle;        // valid when not; closed walk of odd length
};

BipartiteCertificate is_bipartite(const Graph& g);  // requires connected

struct BipartiteCover {
  Graph graph;
  // cover vertex index -> base vertex index
  std::vector<int> base_of;
  // lift of base vertex v at parity i in {0,1}
  std::vector<std::array<int, 2>> lift;
};

// The 2-lift with parity-swapping edges. Requires g connected and not
// bipartite (otherwise the cover is disconnected).
BipartiteCover bipartite_cover(const Graph& g);

// Graph of walks of length n-1 on g with pointwise adjacency. Vertex names
// join the underlying walk with '.', which is why '.' is banned in input
// vertex names.
struct StripGraph {
  Graph graph;
  std::vector<VertexSeq> walk_of;  // strip vertex -> walk on base graph
  std::optional<int> find_walk(const VertexSeq& w) const;
};

StripGraph strip_graph(const Graph& g, int n);

// BFS spanning tree from `a` with lexicographic tie-breaking.
SpanningTree spanning_tree(const Graph& g, int a);
// Validate that the given edge set is a spanning tree of g and orient it at
// `a`. Throws NotSpanningTree.
SpanningTree spanning_tree_from_edges(const Graph& g, int a,
                                      const std::vector<std::pair<int, int>>& edges);

// All non-backtracking closed walks of length 4 (both orientations, every
// basepoint), in canonical order. Includes degenerate squares through
// self-loops when adjacency permits.
std::vector<VertexSeq> enumerate_squares(const Graph& g);

// Built-in graphs: K3, K4, C4, C5, C6, hardcore, iceberg(M), kenkatabami,
// kenkatabami+loop, two-point. Throws ParseError for unknown names.
Graph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

// Load "builtin:<name>" or a file path.
Graph load_graph(const std::string& spec);

}  // namespace homshift
