#include <doctest.h>

#include <random>

#include "onerel/errors.hpp"
#include "onerel/text_format.hpp"
#include "onerel/words.hpp"
#include "oracle.hpp"

using namespace onerel;

namespace {
Word W(const char* text, int rank) { return parse_word(text, rank); }
}  // namespace

TEST_CASE("free_reduce cancels inverse pairs") {
  CHECK(free_reduce(std::vector<Letter>{gen(1), inv(1)}, 2).empty());
  CHECK(free_reduce(std::vector<Letter>{gen(1), gen(2), inv(2), gen(1)}, 2) ==
        Word({gen(1), gen(1)}, 2));
  CHECK_THROWS_AS(free_reduce(std::vector<Letter>{gen(3)}, 2), RankError);
}

TEST_CASE("free_reduce on the non-orientable kernel image") {
  // x1 (x1^-2 (x1^2 x2^2 x3^2)^-1 x1^2), spelled out letter by letter.
  std::vector<Letter> raw{gen(1), inv(1), inv(1), inv(3), inv(3), inv(2), inv(2),
                          inv(1), inv(1), gen(1), gen(1)};
  CHECK(free_reduce(raw, 3) == Word({inv(1), inv(3), inv(3), inv(2), inv(2)}, 3));
}

TEST_CASE("multiply, invert") {
  CHECK(multiply(W("x1", 3), W("x1^-1", 3)).empty());
  CHECK(multiply(W("x1 x2", 3), W("x2^-1 x3", 3)) == W("x1 x3", 3));
  CHECK(multiply(W("x1", 3), Word(3)) == W("x1", 3));
  CHECK_THROWS_AS(multiply(W("x1", 2), W("x1", 3)), RankError);

  CHECK(invert(W("x1 x2", 2)) == Word({inv(2), inv(1)}, 2));
  CHECK(invert(Word(2)).empty());
  CHECK(invert(W("x1^2 x2^2 x3^2", 3)) == W("x3^-2 x2^-2 x1^-2", 3));
}

TEST_CASE("conjugate uses x^y = y x y^-1") {
  const Word x = W("x1 x2^-1", 2);
  CHECK(conjugate(x, Word(2)) == x);
  CHECK(conjugate(W("x1", 2), W("x2", 2)) == Word({gen(2), gen(1), inv(2)}, 2));
  CHECK(conjugate(W("x1^2 x2^2 x3^2", 3), W("x1^-2", 3)) == W("x2^2 x3^2 x1^2", 3));
}

TEST_CASE("commutator uses [x,y] = x^-1 y^-1 x y") {
  CHECK(commutator(W("x1", 2), W("x1", 2)).empty());
  CHECK(commutator(W("x1", 2), W("x2", 2)) == Word({inv(1), inv(2), gen(1), gen(2)}, 2));
  // x2^-1 x1^-1 x2^-1 x1 x2 x2, reduced by the oracle.
  const oracle::Seq expected = oracle::reduce({-2, -1, -2, 1, 2, 2});
  CHECK(oracle::to_seq(commutator(W("x1 x2", 2), W("x2", 2))) == expected);
  CHECK(commutator(W("x1 x2", 2), W("x2", 2)) == W("x2^-1 x1^-1 x2^-1 x1 x2^2", 2));
}

TEST_CASE("cyclic_reduce") {
  auto a = cyclic_reduce(W("x2 x1 x2^-1", 2));
  CHECK(a.core.word() == W("x1", 2));
  CHECK(a.conjugator == W("x2", 2));

  auto b = cyclic_reduce(W("x1 x2", 2));
  CHECK(b.core.word() == W("x1 x2", 2));
  CHECK(b.conjugator.empty());

  auto c = cyclic_reduce(W("x1^-1 x2 x1 x1", 2));
  CHECK(c.reduced == W("x2 x1", 2));
  CHECK(c.core.word() == W("x1 x2", 2));
  CHECK(c.conjugator == W("x1^-1", 2));
  CHECK(conjugate(c.reduced, c.conjugator) == W("x1^-1 x2 x1 x1", 2));
  CHECK(conjugate(c.core.word(), c.canonical_conjugator()) == W("x1^-1 x2 x1 x1", 2));

  CHECK_THROWS_AS(CyclicWord(W("x1 x2 x1^-1", 2)), PreconditionError);
}

TEST_CASE("rotations") {
  auto r = rotations(CyclicWord(W("x1 x2", 2)));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == W("x1 x2", 2));
  CHECK(r[1] == W("x2 x1", 2));

  auto p = rotations(CyclicWord(W("(x1 x2)^2", 2)));
  CHECK(p.size() == 4);
  std::set<Word> distinct(p.begin(), p.end());
  CHECK(distinct.size() == 2);

  CHECK(rotations(CyclicWord(Word(2))).empty());
}

TEST_CASE("cyclic_subwords") {
  const CyclicWord c(W("x1^2 x2^2 x3^2", 3));
  auto full = cyclic_subwords(c, 6);
  CHECK(full.size() == 6);
  CHECK(std::find(full.begin(), full.end(), W("x1 x1 x2 x2 x3 x3", 3)) != full.end());
  CHECK(std::find(full.begin(), full.end(), W("x1 x2 x2 x3 x3 x1", 3)) != full.end());

  auto ones = cyclic_subwords(CyclicWord(W("x1 x2", 2)), 1);
  CHECK(ones == std::vector<Word>{W("x1", 2), W("x2", 2)});

  auto per = cyclic_subwords(CyclicWord(W("(x1 x2)^2", 2)), 4);
  CHECK(per == std::vector<Word>{W("x1 x2 x1 x2", 2), W("x2 x1 x2 x1", 2)});

  CHECK_THROWS_AS(cyclic_subwords(c, 7), PreconditionError);
}

TEST_CASE("abelianize") {
  CHECK(abelianize(W("x1^2 x2^2 x3^2", 3)).sums == std::vector<long long>{2, 2, 2});
  CHECK(abelianize(W("[x1,x2]", 2)).is_zero());
  CHECK(abelianize(W("x1^-1 x3^-2 x2^-2", 3)).sums == std::vector<long long>{-1, -2, -2});
  CHECK(abelianize(W("x1^4 x2^4", 2)).is_multiple_of(abelianize(W("x1^2 x2^2", 2))));
  CHECK_FALSE(abelianize(W("x1^3 x2^2", 2)).is_multiple_of(abelianize(W("x1^2 x2^2", 2))));
}

TEST_CASE("word properties on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int rank = 2 + trial % 3;
    const oracle::Seq sa = oracle::random_reduced(rng, rank, 12);
    const oracle::Seq sb = oracle::random_reduced(rng, rank, 12);
    const Word a = oracle::to_word(sa, rank);
    const Word b = oracle::to_word(sb, rank);

    // Reduction agrees with the naive oracle and is idempotent.
    const oracle::Seq raw = oracle::concat(sa, sb);
    const Word ab = multiply(a, b);
    CHECK(oracle::to_seq(ab) == oracle::reduce(raw));
    CHECK(free_reduce(ab.letters(), rank) == ab);
    CHECK(ab.size() <= raw.size());

    CHECK(multiply(a, invert(a)).empty());

    auto cr = cyclic_reduce(ab);
    CHECK(conjugate(cr.reduced, cr.conjugator) == ab);
    CHECK(conjugate(cr.core.word(), cr.canonical_conjugator()) == ab);
    CHECK(oracle::to_seq(cr.core.word()) == oracle::canonical(oracle::cyclic_core(raw)));

    CHECK(abelianize(ab) == abelianize(a) + abelianize(b));
    CHECK(abelianize(conjugate(a, b)) == abelianize(a));

    for (std::size_t len = 1; len <= cr.core.size(); ++len) {
      CHECK(cyclic_subwords(cr.core, len).size() <= cr.core.size());
    }
  }
}
