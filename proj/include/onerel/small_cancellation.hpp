#pragma once

// One-relator presentations <x1..xn | r>, metric small cancellation and
// Dehn's algorithm for membership in the normal closure R of r.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "onerel/words.hpp"

namespace onerel {

using Rational = boost::rational<long long>;

// One element of the symmetrized set: rotate(r^exponent, offset), where r is
// the canonical rotation of the relator.
struct SymmetrizedElement {
  Word word;
  int exponent = 1;
  std::size_t offset = 0;
};

class Presentation {
 public:
  // Cyclically reduces `relator`.  Throws PreconditionError when the rank is
  // below 2 or the relator is trivial.
  explicit Presentation(const Word& relator);

  int rank() const noexcept { return relator_.rank(); }
  const CyclicWord& relator() const noexcept { return relator_; }
  const Word& relator_word() const noexcept { return relator_.word(); }
  std::size_t relator_length() const noexcept { return relator_.size(); }

  // Distinct rotations of r and r^-1, sorted by word.
  const std::vector<SymmetrizedElement>& symmetrized() const noexcept { return symmetrized_; }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.relator_ == b.relator_;
  }

 private:
  CyclicWord relator_;
  std::vector<SymmetrizedElement> symmetrized_;
};

std::vector<Word> symmetrized_set(const Presentation& p);

struct PieceAnalysis {
  std::size_t relator_length = 0;
  std::size_t max_piece = 0;
  // Two distinct symmetrized elements sharing a prefix of length max_piece.
  std::optional<std::pair<Word, Word>> witness;

  // Feasible lambda lie in the interval (lower, upper].
  Rational lower() const { return {static_cast<long long>(max_piece),
                                   static_cast<long long>(relator_length)}; }
  static Rational upper() { return {1, 6}; }
  bool feasible() const { return 6 * max_piece < relator_length; }
  // A rational strictly inside the interval, close enough to `lower` that
  // the subword-length threshold ceil((1 - 3 lambda)|r|) equals |r| - 3m.
  std::optional<Rational> witness_lambda() const;
};

PieceAnalysis analyze_pieces(const Presentation& p);
std::size_t max_piece_length(const Presentation& p);

// C'(lambda): every piece is strictly shorter than lambda * |r|.
// Throws PreconditionError unless 0 < lambda <= 1.
bool certify_c_prime(const Presentation& p, const Rational& lambda);

struct DehnStep {
  enum class Kind { Conjugate, Rewrite };
  Kind kind = Kind::Rewrite;

  // Conjugate: current = conjugator * next * conjugator^-1.
  Word conjugator;

  // Rewrite: current[position, position + |fragment|) = fragment, where
  // fragment * replacement^-1 is the symmetrized element `relator_rotation`.
  std::size_t position = 0;
  Word fragment;
  Word replacement;
  Word relator_rotation;
  int exponent = 1;
  std::size_t offset = 0;

  std::size_t length_after = 0;
};

struct DehnTrace {
  Word input;
  std::vector<DehnStep> steps;
  Word residual;
};

// Throws NotSmallCancellation unless p satisfies C'(1/6).
DehnTrace dehn_reduce(const Word& w, const Presentation& p);
bool in_normal_closure(const Word& w, const Presentation& p);

// g * r^exponent * g^-1, with r the canonical relator word.
struct ConjugateFactor {
  Word conjugator;
  int exponent = 1;
};

struct DehnReplay {
  // Every step applied cleanly and the residual was reproduced.
  bool steps_consistent = false;
  // input = product(factors) * outer * residual * outer^-1 holds in F_n.
  bool product_matches = false;
  std::vector<ConjugateFactor> factors;
  Word outer_conjugator;

  bool ok() const { return steps_consistent && product_matches; }
};

// Re-executes a trace from its input and rebuilds the input as an explicit
// product of conjugates of r^{+-1} times a conjugate of the residual.
DehnReplay replay(const DehnTrace& trace, const Presentation& p);
Word evaluate(const std::vector<ConjugateFactor>& factors, const Presentation& p);

struct RelatorFragment {
  Word fragment;
  std::size_t length = 0;
  std::size_t position = 0;
};

// Longest subword of w that is also a subword of a symmetrized element;
// leftmost on ties.
RelatorFragment longest_relator_fragment(const Word& w, const Presentation& p);

struct LengthVerdict {
  std::size_t length = 0;
  std::size_t subwords = 0;
  bool all_two_connected = true;
  std::optional<Word> witness;  // first subword whose graph is not 2-connected
};

struct HypothesisReport {
  int rank = 0;
  bool rank_ok = false;
  std::size_t relator_length = 0;
  PieceAnalysis pieces;
  bool lambda_feasible = false;
  std::optional<Rational> lambda;
  std::vector<LengthVerdict> lengths;
  bool subwords_ok = false;
  bool pass = false;
  // One entry per failed condition, e.g. "rank", "lambda", "subword-length-5".
  std::vector<std::string> failures;
};

// Checks the hypotheses of the kernel theorem for one-relator groups: rank at
// least 3, C'(lambda) for some lambda <= 1/6, and 2-connected Whitehead graphs
// for every cyclic subword of length >= (1 - 3 lambda)|r|.
HypothesisReport check_hypotheses(const Presentation& p);

}  // namespace onerel
