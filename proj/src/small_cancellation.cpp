#include "onerel/small_cancellation.hpp"

#include <algorithm>

#include "onerel/errors.hpp"
#include "onerel/whitehead_graph.hpp"

namespace onerel {

namespace {

std::size_t common_prefix(std::span<const Letter> a, std::span<const Letter> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

Word relator_power(const Presentation& p, int exponent) {
  return exponent > 0 ? p.relator_word() : invert(p.relator_word());
}

void require_c_prime_sixth(const Presentation& p) {
  if (!certify_c_prime(p, Rational(1, 6))) {
    throw NotSmallCancellation("relator " + to_string(p.relator_word()) +
                               " does not satisfy C'(1/6); Dehn membership would be one-sided");
  }
}

}  // namespace

Presentation::Presentation(const Word& relator) {
  if (relator.rank() < 2) throw PreconditionError("presentation rank must be at least 2");
  relator_ = cyclic_reduce(relator).core;
  if (relator_.empty()) throw PreconditionError("relator reduces to the empty word");

  for (int exponent : {1, -1}) {
    const Word base = exponent > 0 ? relator_.word() : invert(relator_.word());
    for (std::size_t k = 0; k < base.size(); ++k) {
      symmetrized_.push_back({rotate(base, k), exponent, k});
    }
  }
  std::stable_sort(symmetrized_.begin(), symmetrized_.end(),
                   [](const auto& a, const auto& b) { return a.word < b.word; });
  symmetrized_.erase(std::unique(symmetrized_.begin(), symmetrized_.end(),
                                 [](const auto& a, const auto& b) { return a.word == b.word; }),
                     symmetrized_.end());
}

std::vector<Word> symmetrized_set(const Presentation& p) {
  std::vector<Word> out;
  out.reserve(p.symmetrized().size());
  for (const auto& e : p.symmetrized()) out.push_back(e.word);
  return out;
}

std::optional<Rational> PieceAnalysis::witness_lambda() const {
  if (!feasible()) return std::nullopt;
  const auto m = static_cast<long long>(max_piece);
  const auto len = static_cast<long long>(relator_length);
  return Rational(6 * m + 1, 6 * len);
}

PieceAnalysis analyze_pieces(const Presentation& p) {
  PieceAnalysis out;
  out.relator_length = p.relator_length();
  // The set is sorted and deduplicated, so the longest common prefix over all
  // pairs of distinct elements is attained by a pair of neighbours.
  const auto& sym = p.symmetrized();
  for (std::size_t i = 0; i + 1 < sym.size(); ++i) {
    const std::size_t lcp = common_prefix(sym[i].word.letters(), sym[i + 1].word.letters());
    if (lcp > out.max_piece) {
      out.max_piece = lcp;
      out.witness = std::make_pair(sym[i].word, sym[i + 1].word);
    }
  }
  return out;
}

std::size_t max_piece_length(const Presentation& p) { return analyze_pieces(p).max_piece; }

bool certify_c_prime(const Presentation& p, const Rational& lambda) {
  if (lambda <= 0 || lambda > 1) throw PreconditionError("lambda must lie in (0, 1]");
  const auto m = static_cast<long long>(max_piece_length(p));
  const auto len = static_cast<long long>(p.relator_length());
  return m * lambda.denominator() < lambda.numerator() * len;
}

DehnTrace dehn_reduce(const Word& w, const Presentation& p) {
  if (w.rank() != p.rank()) throw RankError("word and presentation ranks differ");
  require_c_prime_sixth(p);

  const auto& sym = p.symmetrized();
  std::vector<std::vector<std::size_t>> by_first(static_cast<std::size_t>(2 * p.rank()));
  for (std::size_t i = 0; i < sym.size(); ++i) by_first[sym[i].word.front().key()].push_back(i);

  DehnTrace trace;
  trace.input = w;
  std::vector<Letter> cur(w.begin(), w.end());
  std::vector<Letter> next;
  for (;;) {
    std::size_t lo = 0;
    std::size_t hi = cur.size();
    while (hi - lo >= 2 && cur[lo] == cur[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    if (lo > 0) {
      DehnStep step;
      step.kind = DehnStep::Kind::Conjugate;
      step.conjugator = Word(std::span<const Letter>(cur).first(lo), w.rank());
      step.length_after = hi - lo;
      trace.steps.push_back(std::move(step));
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(hi), cur.end());
      cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(lo));
    }

    // Leftmost position admitting a more-than-half overlap; longest there.
    std::size_t best_pos = 0;
    std::size_t best_len = 0;
    const SymmetrizedElement* best = nullptr;
    const std::span<const Letter> letters(cur);
    for (std::size_t pos = 0; pos < cur.size() && best == nullptr; ++pos) {
      for (std::size_t idx : by_first[letters[pos].key()]) {
        const auto& e = sym[idx];
        const std::size_t lcp = common_prefix(letters.subspan(pos), e.word.letters());
        if (2 * lcp > e.word.size() && lcp > best_len) {
          best_pos = pos;
          best_len = lcp;
          best = &e;
        }
      }
    }
    if (best == nullptr) break;

    const auto rel = best->word.letters();
    DehnStep step;
    step.kind = DehnStep::Kind::Rewrite;
    step.position = best_pos;
    step.fragment = Word(letters.subspan(best_pos, best_len), w.rank());
    step.replacement = invert(Word(rel.subspan(best_len), w.rank()));
    step.relator_rotation = best->word;
    step.exponent = best->exponent;
    step.offset = best->offset;

    next.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(best_pos));
    auto push = [&next](Letter l) {
      if (!next.empty() && next.back() == l.inverse()) next.pop_back();
      else next.push_back(l);
    };
    for (Letter l : step.replacement) push(l);
    for (std::size_t i = best_pos + best_len; i < cur.size(); ++i) push(cur[i]);
    step.length_after = next.size();
    trace.steps.push_back(std::move(step));
    std::swap(cur, next);
  }
  trace.residual = Word(cur, w.rank());
  return trace;
}

bool in_normal_closure(const Word& w, const Presentation& p) {
  return dehn_reduce(w, p).residual.empty();
}

namespace {

void append(std::vector<Letter>& raw, std::span<const Letter> letters) {
  raw.insert(raw.end(), letters.begin(), letters.end());
}

void append_inverse(std::vector<Letter>& raw, std::span<const Letter> letters) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) raw.push_back(it->inverse());
}

void append_conjugate(std::vector<Letter>& raw, const Word& x, const Word& by) {
  append(raw, by.letters());
  append(raw, x.letters());
  append_inverse(raw, by.letters());
}

}  // namespace

Word evaluate(const std::vector<ConjugateFactor>& factors, const Presentation& p) {
  std::vector<Letter> raw;
  for (const auto& f : factors) {
    if (f.exponent > 0) {
      append_conjugate(raw, p.relator_word(), f.conjugator);
    } else {
      append(raw, f.conjugator.letters());
      append_inverse(raw, p.relator_word().letters());
      append_inverse(raw, f.conjugator.letters());
    }
  }
  return Word(raw, p.rank());
}

DehnReplay replay(const DehnTrace& trace, const Presentation& p) {
  DehnReplay out;
  out.outer_conjugator = Word(p.rank());
  std::vector<Letter> cur(trace.input.begin(), trace.input.end());
  bool consistent = true;
  auto matches = [&cur](std::size_t pos, const Word& w) {
    return pos + w.size() <= cur.size() &&
           std::equal(w.begin(), w.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
  };

  for (const auto& step : trace.steps) {
    if (step.kind == DehnStep::Kind::Conjugate) {
      const std::size_t g = step.conjugator.size();
      if (2 * g > cur.size() || !matches(0, step.conjugator) ||
          !matches(cur.size() - g, invert(step.conjugator))) {
        consistent = false;
        break;
      }
      cur.erase(cur.end() - static_cast<std::ptrdiff_t>(g), cur.end());
      cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(g));
      out.outer_conjugator = out.outer_conjugator * step.conjugator;
    } else {
      const std::size_t len = step.fragment.size();
      const Word relator = relator_power(p, step.exponent);
      if (!matches(step.position, step.fragment) ||
          step.fragment * invert(step.replacement) != step.relator_rotation ||
          rotate(relator, step.offset) != step.relator_rotation) {
        consistent = false;
        break;
      }
      const std::span<const Letter> letters(cur);
      const Word prefix(letters.first(step.position), p.rank());
      const Word q = subword(relator, 0, step.offset);
      out.factors.push_back({out.outer_conjugator * prefix * invert(q), step.exponent});
      std::vector<Letter> raw(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(step.position));
      append(raw, step.replacement.letters());
      append(raw, letters.subspan(step.position + len));
      const Word reduced(raw, p.rank());
      cur.assign(reduced.begin(), reduced.end());
    }
    if (cur.size() != step.length_after) {
      consistent = false;
      break;
    }
  }
  out.steps_consistent = consistent && std::equal(cur.begin(), cur.end(), trace.residual.begin(),
                                                  trace.residual.end());

  const Word product = evaluate(out.factors, p);
  std::vector<Letter> raw(product.begin(), product.end());
  append_conjugate(raw, trace.residual, out.outer_conjugator);
  out.product_matches = Word(raw, p.rank()) == trace.input;
  return out;
}

RelatorFragment longest_relator_fragment(const Word& w, const Presentation& p) {
  if (w.rank() != p.rank()) throw RankError("word and presentation ranks differ");
  RelatorFragment out{Word(w.rank()), 0, 0};
  const auto letters = w.letters();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& e : p.symmetrized()) {
      const std::size_t lcp = common_prefix(letters.subspan(pos), e.word.letters());
      if (lcp > out.length) {
        out.length = lcp;
        out.position = pos;
      }
    }
  }
  out.fragment = subword(w, out.position, out.length);
  return out;
}

HypothesisReport check_hypotheses(const Presentation& p) {
  HypothesisReport r;
  r.rank = p.rank();
  r.rank_ok = p.rank() >= 3;
  r.relator_length = p.relator_length();
  r.pieces = analyze_pieces(p);
  r.lambda_feasible = r.pieces.feasible();
  r.lambda = r.pieces.witness_lambda();

  if (!r.rank_ok) r.failures.push_back("rank");
  if (!r.lambda_feasible) {
    r.failures.push_back("lambda");
  } else {
    const std::size_t len = r.relator_length;
    const std::size_t shortest = len - 3 * r.pieces.max_piece;
    r.subwords_ok = true;
    for (std::size_t l = shortest; l <= len; ++l) {
      LengthVerdict v;
      v.length = l;
      const auto subs = cyclic_subwords(p.relator(), l);
      v.subwords = subs.size();
      for (const auto& s : subs) {
        if (!is_two_connected(wh_graph(s))) {
          v.all_two_connected = false;
          v.witness = s;
          break;
        }
      }
      if (!v.all_two_connected) {
        r.subwords_ok = false;
        r.failures.push_back("subword-length-" + std::to_string(l));
      }
      r.lengths.push_back(std::move(v));
    }
  }
  r.pass = r.rank_ok && r.lambda_feasible && r.subwords_ok;
  return r;
}

}  // namespace onerel
