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

#include "homshift/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace homshift {

const char* err_name(Err e) {
  switch (e) {
    case Err::ParseError: return "ParseError";
    case Err::NotConnected: return "NotConnected";
    case Err::AlreadyBipartite: return "AlreadyBipartite";
    case Err::EndpointMismatch: return "EndpointMismatch";
    case Err::TrivialCycle: return "TrivialCycle";
    case Err::NotAWalk: return "NotAWalk";
    case Err::NotACycle: return "NotACycle";
    case Err::NotSpanningTree: return "NotSpanningTree";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::NotAnEdge: return "NotAnEdge";
    case Err::OddLengthCycle: return "OddLengthCycle";
    case Err::NotARectangleBoundary: return "NotARectangleBoundary";
    case Err::InadmissibleInput: return "InadmissibleInput";
    case Err::InadmissiblePerturbation: return "InadmissiblePerturbation";
    case Err::InadmissibleBoundary: return "InadmissibleBoundary";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotGibbsEquivalent: return "NotGibbsEquivalent";
    case Err::DisagreeOnCore: return "DisagreeOnCore";
    case Err::NotOneMove: return "NotOneMove";
    case Err::LengthOrder: return "LengthOrder";
    case Err::TraceInvalid: return "TraceInvalid";
    case Err::RaggedWalk: return "RaggedWalk";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::BasepointMismatch: return "BasepointMismatch";
    case Err::DiagonalInadmissible: return "DiagonalInadmissible";
    case Err::Backtracking: return "Backtracking";
    case Err::HypothesisFails: return "HypothesisFails";
    case Err::BudgetExhausted: return "BudgetExhausted";
    case Err::PrerequisiteMissing: return "PrerequisiteMissing";
  }
  return "Error";
}

namespace {

void check_vertex_name(const std::string& name) {
  if (name.empty()) fail(Err::ParseError, "empty vertex name");
  for (char c : name) {
    if (c == '.' || c == ',' || c == '#' || c == ' ' || c == '\t' || c == '\n')
      fail(Err::ParseError, "vertex name '" + name + "' contains a reserved character");
  }
}

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& isolated) {
  std::set<std::string> names;
  for (const auto& [u, v] : edges) {
    check_vertex_name(u);
    check_vertex_name(v);
    names.insert(u);
    names.insert(v);
  }
  for (const auto& v : isolated) {
    check_vertex_name(v);
    names.insert(v);
  }
  Graph g;
  g.names_.assign(names.begin(), names.end());
  int n = g.vertex_count();
  g.mat_.assign(n, std::vector<char>(n, 0));
  auto idx = [&](const std::string& s) {
    return static_cast<int>(std::lower_bound(g.names_.begin(), g.names_.end(), s) -
                            g.names_.begin());
  };
  for (const auto& [u, v] : edges) {
    int a = idx(u), b = idx(v);
    g.mat_[a][b] = g.mat_[b][a] = 1;
  }
  g.adj_.assign(n, {});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.mat_[u][v]) g.adj_[u].push_back(v);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (g.mat_[u][v]) g.edges_.emplace_back(u, v);
  return g;
}

Graph Graph::parse_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a[0] == '#') continue;
    if (a == "vertex") {
      if (!(ls >> b)) fail(Err::ParseError, "expected vertex name after 'vertex'");
      isolated.push_back(b);
      continue;
    }
    if (!(ls >> b)) fail(Err::ParseError, "expected two vertex names on line: " + line);
    edges.emplace_back(a, b);
  }
  return from_edges(edges, isolated);
}

std::string Graph::to_text() const {
  std::vector<std::string> lines;
  for (auto [u, v] : edges_) lines.push_back(names_[u] + " " + names_[v]);
  for (int v = 0; v < vertex_count(); ++v)
    if (adj_[v].empty()) lines.push_back("vertex " + names_[v]);
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

int Graph::edge_count() const { return static_cast<int>(edges_.size()); }

std::optional<int> Graph::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int Graph::require(const std::string& name) const {
  auto v = find(name);
  if (!v) fail(Err::ParseError, "unknown vertex '" + name + "'");
  return *v;
}

VertexSeq SpanningTree::path_from_root(int v) const {
  VertexSeq path;
  for (int u = v; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSeq SpanningTree::tree_walk(int from, int to) const {
  VertexSeq up;
  int a = from, b = to;
  VertexSeq down;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      up.push_back(a);
      a = parent[a];
    } else {
      down.push_back(b);
      b = parent[b];
    }
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<std::pair<int, int>> SpanningTree::edge_set() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[v] != -1) out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push_back(w);
      }
  }
  return count == n;
}

BipartiteCertificate is_bipartite(const Graph& g) {
  if (!is_connected(g)) fail(Err::NotConnected, "bipartiteness needs a connected graph");
  int n = g.vertex_count();
  BipartiteCertificate cert;
  cert.coloring.assign(n, -1);
  std::vector<int> par(n, -1);
  std::deque<int> q;
  if (n > 0) {
    cert.coloring[0] = 0;
    q.push_back(0);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v)) {
      if (w == v) {
        // self-loop: odd cycle of length 1
        cert.bipartite = false;
        cert.odd_cycle = {v, v};
        cert.coloring.clear();
        return cert;
      }
      if (cert.coloring[w] == -1) {
        cert.coloring[w] = 1 - cert.coloring[v];
        par[w] = v;
        q.push_back(w);
      } else if (cert.coloring[w] == cert.coloring[v]) {
        // odd closed walk: path root->v, edge (v,w), reverse path w->root
        VertexSeq pv, pw;
        for (int u = v; u != -1; u = par[u]) pv.push_back(u);
        std::reverse(pv.begin(), pv.end());
        for (int u = w; u != -1; u = par[u]) pw.push_back(u);
        cert.bipartite = false;
        cert.odd_cycle = pv;
        cert.odd_cycle.insert(cert.odd_cycle.end(), pw.begin(), pw.end());
        cert.coloring.clear();
        return cert;
      }
    }
  }
  cert.bipartite = true;
  return cert;
}

BipartiteCover bipartite_cover(const Graph& g) {
  if (!is_connected(g)) fail(Err::NotConnected, "bipartite cover needs a connected graph");
  if (is_bipartite(g).bipartite)
    fail(Err::AlreadyBipartite, "cover of a bipartite graph is disconnected");
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(g.name(u) + "_0", g.name(v) + "_1");
    edges.emplace_back(g.name(u) + "_1", g.name(v) + "_0");
  }
  BipartiteCover cover;
  cover.graph = Graph::from_edges(edges);
  int n = cover.graph.vertex_count();
  cover.base_of.assign(n, -1);
  cover.lift.assign(g.vertex_count(), {-1, -1});
  for (int v = 0; v < n; ++v) {
    const std::string& nm = cover.graph.name(v);
    int parity = nm.back() - '0';
    int base = g.require(nm.substr(0, nm.size() - 2));
    cover.base_of[v] = base;
    cover.lift[base][parity] = v;
  }
  return cover;
}

StripGraph strip_graph(const Graph& g, int n) {
  if (n < 1) fail(Err::ParseError, "strip graph needs n >= 1");
  for (const auto& nm : g.vertex_names())
    if (nm.find('.') != std::string::npos)
      fail(Err::ParseError, "strip graph input must not use '.' in vertex names");
  // all walks of length n-1, lexicographic
  std::vector<VertexSeq> walks;
  VertexSeq cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      walks.push_back(cur);
      return;
    }
    for (int w : g.neighbors(cur.back())) {
      cur.push_back(w);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    cur = {v};
    rec(rec, n - 1);
  }
  auto walk_name = [&](const VertexSeq& w) {
    std::string s = g.name(w[0]);
    for (size_t i = 1; i < w.size(); ++i) s += "." + g.name(w[i]);
    return s;
  };
  auto pointwise = [&](const VertexSeq& a, const VertexSeq& b) {
    for (int i = 0; i < n; ++i)
      if (!g.adjacent(a[i], b[i])) return false;
    return true;
  };
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (size_t i = 0; i < walks.size(); ++i) {
    bool any = false;
    for (size_t j = i; j < walks.size(); ++j)
      if (pointwise(walks[i], walks[j])) {
        edges.emplace_back(walk_name(walks[i]), walk_name(walks[j]));
        any = true;
      }
    // pointwise adjacency to an earlier walk also counts
    if (!any) {
      for (size_t j = 0; j < i && !any; ++j) any = pointwise(walks[i], walks[j]);
      if (!any) isolated.push_back(walk_name(walks[i]));
    }
  }
  StripGraph sg;
  sg.graph = Graph::from_edges(edges, isolated);
  sg.walk_of.assign(sg.graph.vertex_count(), {});
  for (const auto& w : walks) sg.walk_of[sg.graph.require(walk_name(w))] = w;
  return sg;
}

std::optional<int> StripGraph::find_walk(const VertexSeq& w) const {
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (walk_of[v] == w) return v;
  return std::nullopt;
}

SpanningTree spanning_tree(const Graph& g, int a) {
  if (!is_connected(g)) fail(Err::NotConnected, "spanning tree needs a connected graph");
  int n = g.vertex_count();
  SpanningTree t;
  t.root = a;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<int> q{a};
  seen[a] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbors(v)) {  // neighbors are sorted: lexicographic tie-break
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = v;
        t.depth[w] = t.depth[v] + 1;
        q.push_back(w);
      }
    }
  }
  return t;
}

SpanningTree spanning_tree_from_edges(const Graph& g, int a,
                                      const std::vector<std::pair<int, int>>& edges) {
  int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != std::max(0, n - 1))
    fail(Err::NotSpanningTree, "a spanning tree has |V|-1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u == v || !g.adjacent(u, v)) fail(Err::NotSpanningTree, "edge not in graph");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  SpanningTree t;
  t.root = a;
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<int> q{a};
  seen[a] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        t.parent[w] = v;
        t.depth[w] = t.depth[v] + 1;
        q.push_back(w);
      }
  }
  if (count != n) fail(Err::NotSpanningTree, "edge set does not span the graph");
  return t;
}

std::vector<VertexSeq> enumerate_squares(const Graph& g) {
  std::vector<VertexSeq> out;
  for (int v0 = 0; v0 < g.vertex_count(); ++v0)
    for (int v1 : g.neighbors(v0))
      for (int v2 : g.neighbors(v1)) {
        if (v2 == v0) continue;
        for (int v3 : g.neighbors(v2)) {
          if (v3 == v1) continue;
          if (g.adjacent(v3, v0)) out.push_back({v0, v1, v2, v3, v0});
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graph builtin_graph(const std::string& name) {
  auto cycle = [](int n) {
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i)
      e.emplace_back(std::to_string(i), std::to_string((i + 1) % n));
    return Graph::from_edges(e);
  };
  auto complete = [](int n) {
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(std::to_string(i), std::to_string(j));
    return Graph::from_edges(e);
  };
  if (name == "K3") return complete(3);
  if (name == "K4") return complete(4);
  if (name == "C4") return cycle(4);
  if (name == "C5") return cycle(5);
  if (name == "C6") return cycle(6);
  if (name == "hardcore") return Graph::from_edges({{"0", "0"}, {"0", "1"}});
  if (name == "two-point") return Graph::from_edges({{"0", "1"}});
  if (name.rfind("iceberg(", 0) == 0 && name.back() == ')') {
    int m = 0;
    try {
      m = std::stoi(name.substr(8, name.size() - 9));
    } catch (...) {
      fail(Err::ParseError, "bad iceberg parameter in '" + name + "'");
    }
    if (m < 2) fail(Err::ParseError, "iceberg(M) needs M >= 2");
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = -m; i <= m; ++i)
      for (int j = i; j <= m; ++j)
        if (i != 0 && j != 0 && i * j < -1) e.emplace_back(std::to_string(i), std::to_string(j));
    return Graph::from_edges(e);
  }
  if (name == "kenkatabami" || name == "kenkatabami+loop") {
    // Figure-1 transcription: central w, middle ring m1..m6, inner corners
    // g1..g3 / d1..d3, exterior hexagon e1 g1 e2 g2 e3 g3.
    std::vector<std::pair<std::string, std::string>> e = {
        {"w", "m1"}, {"w", "m2"}, {"w", "m3"}, {"w", "m4"}, {"w", "m5"}, {"w", "m6"},
        {"m3", "g1"}, {"g1", "m2"}, {"m6", "g3"}, {"g3", "m1"}, {"m4", "g2"}, {"g2", "m5"},
        {"m2", "d1"}, {"d1", "m1"}, {"m3", "d2"}, {"d2", "m4"}, {"m6", "d3"}, {"d3", "m5"},
        {"g1", "e1"}, {"e1", "d1"}, {"e1", "g3"},
        {"g1", "e2"}, {"e2", "d2"}, {"e2", "g2"},
        {"g2", "e3"}, {"e3", "d3"}, {"e3", "g3"},
    };
    if (name == "kenkatabami+loop") e.emplace_back("w", "w");
    return Graph::from_edges(e);
  }
  fail(Err::ParseError, "unknown builtin graph '" + name + "'");
}

std::vector<std::string> builtin_graph_names() {
  return {"K3",         "K4",          "C4",     "C5",
          "C6",         "hardcore",    "iceberg(M)", "kenkatabami",
          "kenkatabami+loop", "two-point"};
}

Graph load_graph(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_graph(spec.substr(8));
  FILE* f = std::fopen(spec.c_str(), "rb");
  if (!f) fail(Err::ParseError, "cannot open graph file '" + spec + "'");
  std::string text;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
  std::fclose(f);
  return Graph::parse_text(text);
}

}  // namespace homshift
