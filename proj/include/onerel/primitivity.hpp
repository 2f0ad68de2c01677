#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "onerel/automorphisms.hpp"
#include "onerel/words.hpp"

namespace onerel {

// A Whitehead automorphism.
//
// Type I: a signed permutation of the generators, x_i -> letter_images[i-1].
// Type II: multiplier letter a and a set A of letters with a in A and a^-1
// not in A.  Every letter y other than a^{+-1} is sent to
//   (a^-1 if y^-1 in A) y (a if y in A),
// and a is fixed.  A is a bitmask over Letter::key().
struct WhiteheadMove {
  enum class Kind { TypeI, TypeII };
  Kind kind = Kind::TypeII;
  std::vector<Letter> letter_images;  // Type I
  Letter multiplier{};                // Type II
  std::uint64_t subset = 0;           // Type II

  static WhiteheadMove type_one(std::vector<Letter> images);
  // Throws PreconditionError unless a in A and a^-1 not in A.
  static WhiteheadMove type_two(Letter multiplier, std::uint64_t subset);

  bool contains(Letter l) const { return (subset >> l.key()) & 1U; }
  Endomorphism as_endomorphism(int rank) const;

  friend bool operator==(const WhiteheadMove&, const WhiteheadMove&) = default;
};

Word apply(const WhiteheadMove& move, const Word& w);

// All 2n * 2^(2n-2) Type II moves, in a fixed order.  Includes the trivial
// ones (A = {a}).
std::vector<WhiteheadMove> type_two_moves(int rank);

struct MinimizationStep {
  WhiteheadMove move;
  Word result;  // cyclically reduced
  std::size_t length = 0;
};

struct MinimizationTrace {
  Word start;  // cyclically reduced input
  std::vector<MinimizationStep> steps;
  Word minimal;

  std::size_t minimal_length() const { return minimal.size(); }
};

// Greedy descent with the move that shortens the cyclic length most (first
// in move order on ties).  Peak reduction makes the greedy terminal length
// the minimum over the automorphism orbit.
MinimizationTrace whitehead_minimize(const Word& w);

// Primitive iff the orbit minimum has length 1.  Throws PreconditionError for
// the empty word.
bool is_primitive(const Word& w);

// True iff the cyclic Whitehead graph is NOT 2-connected, the necessary
// condition satisfied by every cyclically reduced primitive of length >= 2.
// Throws PreconditionError unless w is cyclically reduced with |w| >= 2.
bool cut_vertex_condition(const Word& w);

struct Syllable {
  int index = 1;
  long long exponent = 0;
};

// Maximal runs of a single generator, read cyclically after cyclic reduction
// (a run straddling the end and start is merged into the first syllable).
std::vector<Syllable> cyclic_syllables(const Word& w);

// Rank 2 only: some generator occurs, and all of its syllable exponents are
// +1 or all are -1.  Throws RankError for rank != 2, PreconditionError for
// the empty word.
bool f2_necessary_condition(const Word& w);

struct CommutatorSweepReport {
  std::size_t max_length = 0;
  std::size_t total = 0;                // c enumerated with zero abelianization
  std::size_t cyclically_reduced = 0;   // x1 c cyclically reduced
  std::size_t cyclically_reducible = 0; // skipped: x1 c conjugate to a shorter word
  std::size_t primitive = 0;            // primitive survivors, c = 1 included
  std::vector<Word> counterexamples;    // c != 1 with x1 c cyclically reduced and primitive

  bool pass() const { return counterexamples.empty(); }
};

// Enumerates every freely reduced c in F2 with |c| <= max_length and
// abelianize(c) = 0 (in F2 this is exactly c in [F2, F2]) and tests whether
// x1 c can be a cyclically reduced primitive element with c != 1.
CommutatorSweepReport verify_commutator_primitives(std::size_t max_length);

// Calls `visit` on every freely reduced word of the given rank and exact
// length, in lexicographic letter order.
template <typename Visit>
void for_each_reduced_word(int rank, std::size_t length, Visit&& visit) {
  std::vector<Letter> buf(length);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == length) {
      visit(Word(buf, rank));
      return;
    }
    for (int key = 0; key < 2 * rank; ++key) {
      const Letter l = Letter::from_key(key);
      if (pos > 0 && buf[pos - 1] == l.inverse()) continue;
      buf[pos] = l;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace onerel
