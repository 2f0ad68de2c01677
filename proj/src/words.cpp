#include "onerel/words.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "onerel/errors.hpp"

namespace onerel {

namespace {

void check_letter(Letter l, int rank) {
  if (l.index < 1 || l.index > rank) {
    throw RankError("generator index " + std::to_string(l.index) +
                    " outside rank " + std::to_string(rank));
  }
  if (l.sign != 1 && l.sign != -1) {
    throw RankError("letter sign must be +1 or -1");
  }
}

void check_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw RankError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
  }
}

// Least rotation offset by direct comparison; words here are short.
std::size_t least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[(k + i) % n];
      Letter b = w[(best + i) % n];
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Word::Word(std::span<const Letter> letters, int rank) : rank_(rank) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(int index, int rank) { return Word({gen(index)}, rank); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word free_reduce(std::span<const Letter> raw, int rank) { return Word(raw, rank); }

Word multiply(const Word& a, const Word& b) {
  check_same_rank(a, b);
  std::vector<Letter> raw(a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  return Word(raw, a.rank());
}

Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

Word invert(const Word& a) {
  std::vector<Letter> raw;
  raw.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return Word(raw, a.rank());
}

Word power(const Word& a, long long k) {
  const Word base = k < 0 ? invert(a) : a;
  const unsigned long long times = k < 0 ? -static_cast<unsigned long long>(k) : k;
  std::vector<Letter> raw;
  raw.reserve(base.size() * times);
  for (unsigned long long t = 0; t < times; ++t) {
    raw.insert(raw.end(), base.begin(), base.end());
  }
  return Word(raw, a.rank());
}

Word conjugate(const Word& x, const Word& y) { return y * x * invert(y); }

Word commutator(const Word& x, const Word& y) {
  return invert(x) * invert(y) * x * y;
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
  if (pos > w.size() || len > w.size() - pos) {
    throw PreconditionError("subword range out of bounds");
  }
  return Word(w.letters().subspan(pos, len), w.rank());
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> raw(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  raw.insert(raw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(raw, w.rank());
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicWord::CyclicWord(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw PreconditionError("word " + to_string(w) + " is not cyclically reduced");
  }
  core_ = rotate(w, least_rotation(w.letters()));
}

Word CyclicReduction::canonical_conjugator() const {
  const std::size_t k = reduced.empty() ? 0 : least_rotation(reduced.letters());
  return conjugator * subword(reduced, 0, k);
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator = subword(w, 0, lo);
  out.reduced = subword(w, lo, hi - lo);
  out.core = CyclicWord(out.reduced);
  return out;
}

std::vector<Word> rotations(const CyclicWord& c) {
  std::vector<Word> out;
  out.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(rotate(c.word(), k));
  return out;
}

std::vector<Word> cyclic_subwords(const CyclicWord& c, std::size_t length) {
  if (length > c.size()) {
    throw PreconditionError("subword length " + std::to_string(length) +
                            " exceeds cyclic word length " + std::to_string(c.size()));
  }
  std::vector<Word> out;
  if (c.empty()) {
    out.emplace_back(c.rank());
    return out;
  }
  const auto letters = c.word().letters();
  std::vector<Letter> buf(length);
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < length; ++i) buf[i] = letters[(k + i) % c.size()];
    out.emplace_back(buf, c.rank());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AbelianVector& AbelianVector::operator+=(const AbelianVector& other) {
  if (sums.size() != other.sums.size()) throw RankError("abelian vector rank mismatch");
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += other.sums[i];
  return *this;
}

bool AbelianVector::is_zero() const {
  return std::all_of(sums.begin(), sums.end(), [](long long v) { return v == 0; });
}

bool AbelianVector::is_multiple_of(const AbelianVector& base) const {
  if (sums.size() != base.sums.size()) throw RankError("abelian vector rank mismatch");
  auto pivot = std::find_if(base.sums.begin(), base.sums.end(),
                            [](long long v) { return v != 0; });
  if (pivot == base.sums.end()) return is_zero();
  const auto p = static_cast<std::size_t>(pivot - base.sums.begin());
  if (sums[p] % base.sums[p] != 0) return false;
  const long long k = sums[p] / base.sums[p];
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != k * base.sums[i]) return false;
  }
  return true;
}

AbelianVector abelianize(const Word& w) {
  AbelianVector v{std::vector<long long>(static_cast<std::size_t>(w.rank()), 0)};
  for (Letter l : w) v.sums[static_cast<std::size_t>(l.index - 1)] += l.sign;
  return v;
}

std::string to_string(Letter l) {
  return "x" + std::to_string(l.index) + (l.sign < 0 ? "^-1" : "");
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long exponent = static_cast<long long>(j - i) * w[i].sign;
    if (!first) os << ' ';
    os << 'x' << w[i].index;
    if (exponent != 1) os << '^' << exponent;
    first = false;
    i = j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

std::ostream& operator<<(std::ostream& os, const CyclicWord& c) {
  return os << '(' << to_string(c.word()) << ")~";
}

}  // namespace onerel
