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

#include <string>
#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

// Walks are nonempty vertex sequences whose consecutive vertices are
// adjacent; a cycle is a walk with equal endpoints. l(p) = |seq| - 1.

void require_walk(const Graph& g, const VertexSeq& p);
void require_cycle(const Graph& g, const VertexSeq& p);

inline int walk_length(const VertexSeq& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_closed(const VertexSeq& p) { return !p.empty() && p.front() == p.back(); }

VertexSeq reverse_walk(const VertexSeq& p);
// Concatenation p ⊙ q (endpoints must chain).
VertexSeq concat(const VertexSeq& p, const VertexSeq& q);
// Remove backtracks aba -> a until none remain; the result is independent of
// removal order.
VertexSeq reduce(const VertexSeq& p);
bool is_reduced(const VertexSeq& p);
// p ⋆ q = reduce(p ⊙ q).
VertexSeq star(const Graph& g, const VertexSeq& p, const VertexSeq& q);
// ω: rotate a nontrivial cycle by one step.
VertexSeq circular_shift(const Graph& g, const VertexSeq& c);
// Non-backtracking closed walk of length 4, wrap included.
bool is_square(const Graph& g, const VertexSeq& c);

// Walk literal "v1,v2,...": parse against g's vertex names.
VertexSeq parse_walk(const Graph& g, const std::string& text);
std::string format_walk(const Graph& g, const VertexSeq& p);

// One elementary square move: splice `square` (based at c[position]) into c
// at `position`, then freely reduce. `insert` is presentation sugar: a delete
// records the square that was cancelled; replay splices its reverse.
struct SquareMove {
  int position = 0;
  VertexSeq square;
  bool insert = true;
};

// Certificate that `start` and `end` are square-equivalent: replaying the
// moves (splice + reduce each time) transforms reduce(start) into
// reduce(end).
struct SquareTrace {
  int basepoint = 0;
  VertexSeq start;
  VertexSeq end;
  std::vector<SquareMove> moves;
};

// Apply one move to a reduced cycle. Throws TraceInvalid if the move does not
// fit (bad position, not a square of g, basepoint mismatch).
VertexSeq apply_move(const Graph& g, const VertexSeq& c, const SquareMove& m);
// Replay the whole trace; returns the final reduced cycle and checks it
// equals reduce(trace.end). Throws TraceInvalid.
void verify_trace(const Graph& g, const SquareTrace& t);

// All reduced cycles one elementary move away from reduced cycle c, of length
// <= max_len, deduplicated and sorted. Includes c itself (backtrack splices
// reduce back to c).
std::vector<VertexSeq> square_move_neighbors(const Graph& g, const VertexSeq& c, int max_len);

// Like square_move_neighbors but also reports the move that produced each
// neighbor.
std::vector<std::pair<VertexSeq, SquareMove>> square_move_neighbors_with_moves(
    const Graph& g, const VertexSeq& c, int max_len);

}  // namespace homshift
