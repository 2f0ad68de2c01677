#pragma once

// Free-group words over generators x1..xn.
//
// A Word is always freely reduced: every constructor path goes through
// free_reduce, so no value of type Word ever holds an adjacent pair a a^-1.
// The ambient rank is carried explicitly and checked by every binary
// operation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace onerel {

struct Letter {
  int index = 1;  // 1-based generator index
  int sign = 1;   // +1 or -1

  constexpr Letter inverse() const noexcept { return {index, -sign}; }

  // Dense key in [0, 2n): x1 -> 0, x1^-1 -> 1, x2 -> 2, ...  This is also the
  // total order used for canonical rotations and for Whitehead graph vertices.
  constexpr int key() const noexcept { return 2 * (index - 1) + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_key(int key) noexcept {
    return {key / 2 + 1, key % 2 == 0 ? 1 : -1};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.key() <=> b.key();
  }
};

inline constexpr Letter gen(int index) noexcept { return {index, 1}; }
inline constexpr Letter inv(int index) noexcept { return {index, -1}; }

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  // Freely reduces `letters`; throws RankError on an out-of-range index or
  // malformed sign.
  Word(std::span<const Letter> letters, int rank);
  Word(std::initializer_list<Letter> letters, int rank)
      : Word(std::span<const Letter>(letters.begin(), letters.size()), rank) {}

  static Word generator(int index, int rank);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  // Rank first, then lexicographic on letters (shorter prefix first).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw, int rank);

Word multiply(const Word& a, const Word& b);
Word operator*(const Word& a, const Word& b);
Word invert(const Word& a);
Word power(const Word& a, long long k);

// Conjugation in the convention x^y = y x y^-1 (the conjugator stands on the
// left).  Note this is the opposite of the x^y = y^-1 x y convention common
// in other texts.
Word conjugate(const Word& x, const Word& y);

// [x, y] = x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);

Word subword(const Word& w, std::size_t pos, std::size_t len);

// Left rotation: rotate(w, k) = w[k..] w[..k].  Operates on the letter
// sequence; the result is freely reduced again, which only matters when w is
// not cyclically reduced.
Word rotate(const Word& w, std::size_t k);

bool is_cyclically_reduced(const Word& w);

// A cyclically reduced word up to rotation, stored as its least rotation
// under the letter order.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(int rank) : core_(rank) {}

  // Throws PreconditionError if `w` is not cyclically reduced.
  explicit CyclicWord(const Word& w);

  const Word& word() const noexcept { return core_; }
  int rank() const noexcept { return core_.rank(); }
  std::size_t size() const noexcept { return core_.size(); }
  bool empty() const noexcept { return core_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.core_ <=> b.core_;
  }

 private:
  Word core_;
};

struct CyclicReduction {
  // The cyclically reduced middle part, in its original rotation.
  Word reduced;
  // The stripped prefix g, so that input = g * reduced * g^-1.
  Word conjugator;
  CyclicWord core;

  // h with input = h * core.word() * h^-1 (accounts for the canonical
  // rotation on top of the stripped prefix).
  Word canonical_conjugator() const;
};

CyclicReduction cyclic_reduce(const Word& w);

// All |c| rotations as linear words, duplicates retained.
std::vector<Word> rotations(const CyclicWord& c);

// Distinct length-`length` reads around the circle, sorted.
std::vector<Word> cyclic_subwords(const CyclicWord& c, std::size_t length);

// Exponent sums per generator.
struct AbelianVector {
  std::vector<long long> sums;

  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;
  AbelianVector& operator+=(const AbelianVector& other);
  friend AbelianVector operator+(AbelianVector a, const AbelianVector& b) { return a += b; }
  bool is_zero() const;
  // True iff this vector equals k * base for some integer k.
  bool is_multiple_of(const AbelianVector& base) const;
};

AbelianVector abelianize(const Word& w);

std::string to_string(Letter l);
// Syllable form, e.g. "x1^2 x2^-1 x3"; the empty word prints as "1".
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const CyclicWord& c);

}  // namespace onerel
