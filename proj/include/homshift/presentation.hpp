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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/walk.hpp"

namespace homshift {

using BigInt = boost::multiprecision::cpp_int;

// A letter is a generator index with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);
Word free_reduce(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // for graph presentations: which edge each generator represents
  std::vector<std::pair<int, int>> generator_edges;

  int gen_index(const std::string& name) const;  // throws UnknownGenerator
};

// Serialization: first line "gens: a b c", then one relator per line in
// signed-letter syntax "a b- a" (trailing '-' means inverse). Round-trips.
std::string format_presentation(const GroupPresentation& p);
GroupPresentation parse_presentation(const std::string& text);
std::string format_word(const GroupPresentation& p, const Word& w);
Word parse_word(const GroupPresentation& p, const std::string& text);

// --- Graph group presentations -------------------------------------------

// Nielsen-Schreier presentation of the fundamental group at `a`: one free
// generator per non-tree edge (self-loops included; their e^2 relator is
// added by square_presentation, not here). Knows how to read a closed walk
// as a word.
struct GraphPresentation {
  GroupPresentation pres;
  const Graph* graph = nullptr;
  SpanningTree tree;
  int basepoint = 0;
  // generator index for a non-tree edge {u,v} (u<=v), -1 for tree edges
  std::map<std::pair<int, int>, int> gen_of_edge;

  // Word of a closed walk (based anywhere; tree conjugation contributes no
  // letters). Self-loop steps contribute their generator with exponent +1.
  Word word_of_cycle(const VertexSeq& c) const;
};

GraphPresentation fundamental_presentation(const Graph& g, int a, const SpanningTree& t);
// Fundamental presentation plus one relator per square orbit (rotation and
// reversal), plus e^2 = 1 for each self-loop generator.
GraphPresentation square_presentation(const Graph& g, int a, const SpanningTree& t);
GraphPresentation square_presentation(const Graph& g);  // canonical basepoint/tree

// Even square group: equals the square presentation for bipartite graphs;
// otherwise the square presentation of the bipartite cover at lift (a,0).
struct EvenSquarePresentation {
  GraphPresentation pres;       // presentation of the even square group
  std::optional<BipartiteCover> cover;  // set when g was not bipartite
};
EvenSquarePresentation even_square_presentation(const Graph& g, int a);

// --- Abelianization --------------------------------------------------------

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // >= 2, divisibility order
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

// Quotient Z^g / (relator row lattice), with the change of basis needed to
// map words into canonical coordinates.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const GroupPresentation& p);
  const AbelianInvariants& invariants() const { return inv_; }
  // Coordinates of a word's image: torsion coords (mod d_i) then free coords.
  std::vector<BigInt> image(const Word& w) const;
  bool is_zero(const Word& w) const;
  std::string image_string(const Word& w) const;

 private:
  int num_gens_;
  AbelianInvariants inv_;
  std::vector<std::vector<BigInt>> basis_change_;  // V: column ops applied to Z^g
  std::vector<BigInt> diag_;                       // SNF diagonal (may include 1s/0s)
};

AbelianInvariants abelianize(const GroupPresentation& p);
// Exponent-sum image of w in the abelianization of p; zero iff trivial there.
std::vector<BigInt> word_image_abelian(const Word& w, const GroupPresentation& p);

// Smith normal form diag of an integer matrix (rows = relations); exposed for
// tests.
std::vector<BigInt> smith_normal_form_diag(std::vector<std::vector<BigInt>> m);

// --- Coset enumeration ------------------------------------------------------

struct CosetResult {
  bool finite = false;
  std::uint64_t order = 0;        // valid when finite
  std::uint64_t cosets_used = 0;  // peak table size
};

// Todd-Coxeter (HLT) over the trivial subgroup with deterministic scanning.
// Not finite within max_cosets => overflow result, never an error.
CosetResult coset_enumeration(const GroupPresentation& p, std::uint64_t max_cosets);

// --- Square-decomposability -------------------------------------------------

struct SearchBudget {
  int max_len = 16;
  std::uint64_t max_states = 100000;
};

struct BudgetReport {
  std::uint64_t states_explored = 0;
  int frontier_len_cap = 0;
  bool exhausted_states = false;
};

struct DecompositionVerdict {
  enum class Kind { Decomposable, RefutedOddLength, RefutedAbelian, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<SquareTrace> trace;       // Decomposable
  std::string abelian_obstruction;        // RefutedAbelian: nonzero image, printed
  BudgetReport budget;
};

// Decide square-decomposability of cycle c on g: odd length refutes; a
// nonzero abelian image in the square group refutes; BFS over elementary
// square moves within budget finds a replayable trace; otherwise Unknown.
DecompositionVerdict square_decomposable(const Graph& g, const VertexSeq& c,
                                         const SearchBudget& budget);

// --- Two-point obstructions (free group on alpha, beta) ---------------------

struct TransferObstruction {
  bool solvable = false;
  // when unsolvable: which exponent (0 = alpha, 1 = beta) forces 2*delta = odd
  int witness_component = -1;
  BigInt witness_rhs = 0;  // the odd number that 2*delta would have to equal
  std::string witness;     // human-readable "2*d = 1"-style equation
};

// Decide, in the abelianized free group on {alpha, beta}, whether b_x, b_y, h
// exist with u = b_y^-1 h b_x and v = b_x^-1 h b_y.
TransferObstruction two_point_transfer_obstruction(const Word& u, const Word& v);

// Bounded rewriting: starting from `word`, insert/delete conjugates of
// relators plus free reduction, searching for `target`. BFS, at most
// max_steps expansions.
bool verify_relation_rewrite(const Word& word, const std::vector<Word>& relators,
                             const Word& target, int max_steps);

}  // namespace homshift
