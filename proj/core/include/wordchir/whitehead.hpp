#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordchir/endomorphism.hpp"
#include "wordchir/word.hpp"

namespace wordchir {

// A generator of Aut(F_n) in Whitehead's generating set. Type I moves are
// the signed permutations of the generators; a type II move is determined
// by a multiplier letter a and a cut set A with a in A and a^{-1} not in A,
// sending each generator x (other than a^{+-1}) to x, xa, a^{-1}x or
// a^{-1}xa according to which of x, x^{-1} lie in A.
struct WhiteheadMove {
  enum class Kind { TypeI, TypeII };
  Kind kind = Kind::TypeI;

  // TypeI: x_i -> x_{perm[i-1]}^{signs[i-1]}.
  std::vector<int> perm;
  std::vector<int> signs;

  // TypeII:
  Letter multiplier{1};
  std::vector<Letter> cut;  // sorted by letter_ord

  Automorphism automorphism(int rank) const;
  WhiteheadMove inverted() const;
  std::string str() const;
};

// All moves for the given rank: 2^rank * rank! type I moves and
// 2*rank * 2^(2*rank-2) type II descriptors (the trivial cut {a} included).
std::vector<WhiteheadMove> enumerate_moves(int rank);

// The move's action on the conjugacy class of w: applies the automorphism,
// cyclically reduces, and returns the least rotation. w must be cyclically
// reduced.
Word apply_move(const WhiteheadMove& m, const Word& w, int rank);
inline Word apply_move(const WhiteheadMove& m, const Word& w) {
  return apply_move(m, w, w.rank());
}

struct MinimizationResult {
  Word minimal;                      // canonical: least rotation
  std::vector<WhiteheadMove> trace;  // replay from the canonical core
};

// Greedy descent: while some type II move shortens the cyclic word, apply
// the one with the shortlex-least image. The end state has minimal length
// over the whole automorphism orbit of the conjugacy class.
MinimizationResult minimize(const Word& w);

// replay_trace(w, r.trace) == r.minimal for r = minimize(w).
Word replay_trace(const Word& w, const std::vector<WhiteheadMove>& trace);

enum class SearchStatus {
  Found,
  NotFound,        // definitive: the level graph component was exhausted
  BudgetExceeded,  // indeterminate
};

struct OrbitSearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t peak_frontier = 0;
  int minimal_length = 0;
};

struct OrbitSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  // Present iff status == Found; maps the source word to the target exactly.
  std::optional<Automorphism> automorphism;
  std::vector<WhiteheadMove> move_trace;
  OrbitSearchStats stats;

  bool found() const { return status == SearchStatus::Found; }
  bool definitive() const { return status != SearchStatus::BudgetExceeded; }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// Decides whether some automorphism of F_rank maps u to v. Minimizes both
// words, then searches the graph of minimal-length cyclic words connected
// by length-preserving moves. On success the composed automorphism is
// repaired by an inner automorphism so that it sends u to v letter for
// letter.
OrbitSearchResult orbit_equivalent(const Word& u, const Word& v,
                                   std::uint64_t budget = kDefaultSearchBudget);

// orbit_equivalent(w, w^{-1}): is some automorphism inverting w?
OrbitSearchResult aut_inverts(const Word& w, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace wordchir
