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

#include "homshift/walk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace homshift {

void require_walk(const Graph& g, const VertexSeq& p) {
  if (p.empty()) fail(Err::NotAWalk, "walks are nonempty");
  for (int v : p)
    if (v < 0 || v >= g.vertex_count()) fail(Err::NotAWalk, "vertex index out of range");
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1]))
      fail(Err::NotAWalk, "step " + g.name(p[i]) + " -> " + g.name(p[i + 1]) + " is not an edge");
}

void require_cycle(const Graph& g, const VertexSeq& p) {
  require_walk(g, p);
  if (!is_closed(p)) fail(Err::NotACycle, "endpoints differ");
}

VertexSeq reverse_walk(const VertexSeq& p) { return VertexSeq(p.rbegin(), p.rend()); }

VertexSeq concat(const VertexSeq& p, const VertexSeq& q) {
  if (p.empty() || q.empty() || p.back() != q.front())
    fail(Err::EndpointMismatch, "concatenation endpoints do not chain");
  VertexSeq r = p;
  r.insert(r.end(), q.begin() + 1, q.end());
  return r;
}

VertexSeq reduce(const VertexSeq& p) {
  VertexSeq st;
  for (int v : p) {
    if (st.size() >= 2 && st[st.size() - 2] == v)
      st.pop_back();
    else
      st.push_back(v);
  }
  return st;
}

bool is_reduced(const VertexSeq& p) {
  for (size_t i = 0; i + 2 < p.size(); ++i)
    if (p[i] == p[i + 2]) return false;
  return true;
}

VertexSeq star(const Graph& g, const VertexSeq& p, const VertexSeq& q) {
  require_walk(g, p);
  require_walk(g, q);
  return reduce(concat(p, q));
}

VertexSeq circular_shift(const Graph& g, const VertexSeq& c) {
  require_cycle(g, c);
  if (walk_length(c) == 0) fail(Err::TrivialCycle, "cannot rotate a trivial cycle");
  VertexSeq r(c.begin() + 1, c.end());
  r.push_back(c[1]);
  return r;
}

bool is_square(const Graph& g, const VertexSeq& c) {
  if (c.size() != 5 || c.front() != c.back()) return false;
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!g.adjacent(c[i], c[i + 1])) return false;
  // cyclic non-backtracking: both diagonals non-degenerate
  return c[0] != c[2] && c[1] != c[3];
}

VertexSeq parse_walk(const Graph& g, const std::string& text) {
  VertexSeq p;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    // trim spaces
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) fail(Err::ParseError, "empty vertex in walk literal");
    p.push_back(g.require(tok.substr(a, b - a + 1)));
  }
  require_walk(g, p);
  return p;
}

std::string format_walk(const Graph& g, const VertexSeq& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += g.name(p[i]);
  }
  return s;
}

VertexSeq apply_move(const Graph& g, const VertexSeq& c, const SquareMove& m) {
  if (m.position < 0 || m.position > walk_length(c))
    fail(Err::TraceInvalid, "move position out of range");
  VertexSeq sq = m.insert ? m.square : reverse_walk(m.square);
  if (!is_square(g, sq)) fail(Err::TraceInvalid, "move square is not a square of the graph");
  if (sq.front() != c[m.position]) fail(Err::TraceInvalid, "move square not based at the splice point");
  VertexSeq u(c.begin(), c.begin() + m.position + 1);
  VertexSeq v(c.begin() + m.position, c.end());
  return reduce(concat(concat(u, sq), v));
}

void verify_trace(const Graph& g, const SquareTrace& t) {
  require_cycle(g, t.start);
  require_cycle(g, t.end);
  VertexSeq cur = reduce(t.start);
  if (cur.front() != t.basepoint) fail(Err::TraceInvalid, "trace basepoint mismatch");
  for (const auto& m : t.moves) cur = apply_move(g, cur, m);
  if (cur != reduce(t.end)) fail(Err::TraceInvalid, "trace replay does not reach the end cycle");
}

std::vector<std::pair<VertexSeq, SquareMove>> square_move_neighbors_with_moves(
    const Graph& g, const VertexSeq& c, int max_len) {
  require_cycle(g, c);
  if (!is_reduced(c)) fail(Err::NotAWalk, "neighbor enumeration expects a reduced cycle");
  // squares grouped by basepoint
  std::map<int, std::vector<VertexSeq>> by_base;
  for (auto& s : enumerate_squares(g)) by_base[s[0]].push_back(s);
  std::vector<std::pair<VertexSeq, SquareMove>> out;
  std::set<VertexSeq> seen;
  auto add = [&](const VertexSeq& n, const SquareMove& m) {
    if (walk_length(n) > max_len) return;
    if (seen.insert(n).second) out.emplace_back(n, m);
  };
  for (int i = 0; i <= walk_length(c); ++i) {
    auto it = by_base.find(c[i]);
    if (it == by_base.end()) continue;
    for (const auto& s : it->second) {
      SquareMove m{i, s, true};
      add(apply_move(g, c, m), m);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<VertexSeq> square_move_neighbors(const Graph& g, const VertexSeq& c, int max_len) {
  std::vector<VertexSeq> out;
  // splicing a backtrack pair reduces straight back to c, so c is always a
  // neighbor of itself
  if (walk_length(c) <= max_len) out.push_back(c);
  for (auto& [n, m] : square_move_neighbors_with_moves(g, c, max_len))
    if (n != c) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homshift
