#include "onerel/primitivity.hpp"

#include <algorithm>

#include "onerel/errors.hpp"
#include "onerel/whitehead_graph.hpp"

namespace onerel {

WhiteheadMove WhiteheadMove::type_one(std::vector<Letter> images) {
  std::vector<bool> seen(images.size(), false);
  for (Letter l : images) {
    if (l.index < 1 || static_cast<std::size_t>(l.index) > images.size() || seen[l.index - 1]) {
      throw PreconditionError("Type I move must be a signed permutation");
    }
    seen[l.index - 1] = true;
  }
  WhiteheadMove m;
  m.kind = Kind::TypeI;
  m.letter_images = std::move(images);
  return m;
}

WhiteheadMove WhiteheadMove::type_two(Letter multiplier, std::uint64_t subset) {
  WhiteheadMove m;
  m.kind = Kind::TypeII;
  m.multiplier = multiplier;
  m.subset = subset;
  if (!m.contains(multiplier) || m.contains(multiplier.inverse())) {
    throw PreconditionError("Type II move needs a in A and a^-1 outside A");
  }
  return m;
}

Endomorphism WhiteheadMove::as_endomorphism(int rank) const {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(apply(*this, Word::generator(i, rank)));
  return Endomorphism(std::move(images));
}

Word apply(const WhiteheadMove& move, const Word& w) {
  const int rank = w.rank();
  std::vector<Letter> raw;
  raw.reserve(3 * w.size());
  if (move.kind == WhiteheadMove::Kind::TypeI) {
    if (static_cast<int>(move.letter_images.size()) != rank) throw RankError("Type I move rank mismatch");
    for (Letter l : w) {
      const Letter img = move.letter_images[static_cast<std::size_t>(l.index - 1)];
      raw.push_back(l.sign > 0 ? img : img.inverse());
    }
    return Word(raw, rank);
  }
  const Letter a = move.multiplier;
  if (a.index > rank) throw RankError("Type II multiplier outside rank");
  for (Letter y : w) {
    if (y.index == a.index) {
      raw.push_back(y);
      continue;
    }
    if (move.contains(y.inverse())) raw.push_back(a.inverse());
    raw.push_back(y);
    if (move.contains(y)) raw.push_back(a);
  }
  return Word(raw, rank);
}

std::vector<WhiteheadMove> type_two_moves(int rank) {
  if (2 * rank > 64) throw RankError("Type II enumeration supports rank <= 32");
  std::vector<WhiteheadMove> out;
  const int letters = 2 * rank;
  for (int ak = 0; ak < letters; ++ak) {
    const Letter a = Letter::from_key(ak);
    std::vector<int> free_keys;
    for (int k = 0; k < letters; ++k) {
      if (k != a.key() && k != a.inverse().key()) free_keys.push_back(k);
    }
    const std::uint64_t combos = std::uint64_t{1} << free_keys.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      std::uint64_t subset = std::uint64_t{1} << a.key();
      for (std::size_t i = 0; i < free_keys.size(); ++i) {
        if ((bits >> i) & 1U) subset |= std::uint64_t{1} << free_keys[i];
      }
      out.push_back(WhiteheadMove::type_two(a, subset));
    }
  }
  return out;
}

MinimizationTrace whitehead_minimize(const Word& w) {
  MinimizationTrace trace;
  trace.start = cyclic_reduce(w).reduced;
  Word cur = trace.start;
  const auto moves = type_two_moves(w.rank());
  while (cur.size() > 1) {
    const WhiteheadMove* best = nullptr;
    Word best_word;
    for (const auto& m : moves) {
      Word image = cyclic_reduce(apply(m, cur)).reduced;
      if (image.size() < (best ? best_word.size() : cur.size())) {
        best = &m;
        best_word = std::move(image);
      }
    }
    if (best == nullptr) break;
    cur = best_word;
    trace.steps.push_back({*best, std::move(best_word), cur.size()});
  }
  trace.minimal = std::move(cur);
  return trace;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw PreconditionError("primitivity of the empty word is undefined");
  return whitehead_minimize(w).minimal_length() == 1;
}

bool cut_vertex_condition(const Word& w) {
  if (w.size() < 2 || !is_cyclically_reduced(w)) {
    throw PreconditionError("cut-vertex condition needs a cyclically reduced word of length >= 2");
  }
  return !is_two_connected(wh_graph_cyclic(CyclicWord(w)));
}

std::vector<Syllable> cyclic_syllables(const Word& w) {
  const Word core = cyclic_reduce(w).reduced;
  std::vector<Syllable> out;
  for (Letter l : core) {
    if (!out.empty() && out.back().index == l.index) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.index, l.sign});
    }
  }
  // Cyclically reduced, so a shared generator at both ends has one sign.
  if (out.size() > 1 && out.front().index == out.back().index) {
    out.front().exponent += out.back().exponent;
    out.pop_back();
  }
  return out;
}

bool f2_necessary_condition(const Word& w) {
  if (w.rank() != 2) throw RankError("the F2 criterion needs rank 2");
  if (w.empty()) throw PreconditionError("the F2 criterion needs a nonempty word");
  const auto syllables = cyclic_syllables(w);
  for (int gen = 1; gen <= 2; ++gen) {
    bool occurs = false;
    bool all_plus = true;
    bool all_minus = true;
    for (const auto& s : syllables) {
      if (s.index != gen) continue;
      occurs = true;
      all_plus = all_plus && s.exponent == 1;
      all_minus = all_minus && s.exponent == -1;
    }
    if (occurs && (all_plus || all_minus)) return true;
  }
  return false;
}

CommutatorSweepReport verify_commutator_primitives(std::size_t max_length) {
  CommutatorSweepReport report;
  report.max_length = max_length;
  const Word x1 = Word::generator(1, 2);
  for (std::size_t len = 0; len <= max_length; ++len) {
    for_each_reduced_word(2, len, [&](const Word& c) {
      if (!abelianize(c).is_zero()) return;
      ++report.total;
      const Word u = x1 * c;
      if (!is_cyclically_reduced(u)) {
        ++report.cyclically_reducible;
        return;
      }
      ++report.cyclically_reduced;
      if (!is_primitive(u)) return;
      ++report.primitive;
      if (!c.empty()) report.counterexamples.push_back(c);
    });
  }
  return report;
}

}  // namespace onerel
