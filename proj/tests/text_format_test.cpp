#include <doctest.h>

#include <random>

#include "onerel/errors.hpp"
#include "onerel/text_format.hpp"
#include "oracle.hpp"

using namespace onerel;

TEST_CASE("word grammar") {
  CHECK(parse_word("x1 x2^-1", 2) == Word({gen(1), inv(2)}, 2));
  CHECK(parse_word("x1*x2*x2^-1", 2) == Word({gen(1)}, 2));
  CHECK(parse_word("(x1 x2)^2", 2) == Word({gen(1), gen(2), gen(1), gen(2)}, 2));
  CHECK(parse_word("(x1 x2)^-1", 2) == Word({inv(2), inv(1)}, 2));
  CHECK(parse_word("[x1,x2]", 2) == Word({inv(1), inv(2), gen(1), gen(2)}, 2));
  CHECK(parse_word("x1^(x2)", 2) == Word({gen(2), gen(1), inv(2)}, 2));
  CHECK(parse_word("x1^0", 2).empty());
  CHECK(parse_word("1", 2).empty());
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("  x1  ^ 3 ", 2) == Word({gen(1), gen(1), gen(1)}, 2));
  CHECK(parse_word("x12", 12) == Word::generator(12, 12));

  CHECK(parse_word("x3 x1").rank() == 3);
  CHECK(parse_word("").rank() == 1);
}

TEST_CASE("word parse errors carry a position") {
  auto column_of = [](const char* text, int rank) -> std::size_t {
    try {
      parse_word(text, rank);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("x1 y2", 2) == 4);
  CHECK(column_of("x1 x3", 2) == 4);
  CHECK(column_of("(x1", 2) == 4);
  CHECK(column_of("x1^", 2) == 4);
  CHECK(column_of("x", 2) == 2);
  CHECK(column_of("[x1 x2]", 2) == 7);
  CHECK(column_of("x1 *", 2) == 5);
  CHECK(column_of("x1^9999999", 2) == 4);
  CHECK(column_of("(x1^1000000)^1000", 2) == 14);
}

TEST_CASE("to_string and parse_word round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int rank = 1 + trial % 5;
    const Word w = oracle::to_word(oracle::random_reduced(rng, rank, 20), rank);
    CHECK(parse_word(to_string(w), rank) == w);
  }
  CHECK(to_string(parse_word("x1^2 x2^-3 x1", 2)) == "x1^2 x2^-3 x1");
  CHECK(to_string(Word(2)) == "1");
}

TEST_CASE("presentation files") {
  const auto f = parse_presentation_file("# surface\nrank 3\n\nrelator (x1^2 x2^2 x3^2)^2\n");
  CHECK(f.rank == 3);
  CHECK(f.relator.size() == 12);
  CHECK(parse_presentation("rank 4\r\nrelator [x1,x2][x3,x4]\r\n").relator_length() == 8);

  CHECK(format_presentation(3, f.relator) == "rank 3\nrelator x1^2 x2^2 x3^2 x1^2 x2^2 x3^2\n");
  CHECK(parse_presentation_file(format_presentation(3, f.relator)).relator == f.relator);

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_presentation_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("rank two\nrelator x1\n") == 1);
  CHECK(line_of("rank 2\n") == 2);
  CHECK(line_of("rank 2\n# c\nrelator x1 x3\n") == 3);
  CHECK(line_of("rank 2\nrelator x1\nrelator x2\n") == 3);
  CHECK(line_of("relator x1\nrank 2\n") == 1);
  CHECK_THROWS_AS(parse_presentation("rank 1\nrelator x1^2\n"), PreconditionError);
}

TEST_CASE("automorphism files") {
  const Endomorphism e = parse_endomorphism("rank 3\nx2 -> x2\nx1 -> x1^-1 x3^-2 x2^-2\nx3 -> x3\n");
  CHECK(e.image(1) == parse_word("x1^-1 x3^-2 x2^-2", 3));
  CHECK(format_endomorphism(e) == "rank 3\nx1 -> x1^-1 x3^-2 x2^-2\nx2 -> x2\nx3 -> x3\n");
  CHECK(parse_endomorphism(format_endomorphism(e)) == e);
  CHECK(parse_endomorphism("rank 2\nx1 -> 1\nx2 -> x2\n").image(1).empty());

  CHECK_THROWS_AS(parse_endomorphism("rank 2\nx1 -> x1\n"), ParseError);
  CHECK_THROWS_AS(parse_endomorphism("rank 2\nx1 -> x1\nx1 -> x2\n"), ParseError);
  CHECK_THROWS_AS(parse_endomorphism("rank 2\nx1 -> x1\nx3 -> x2\n"), ParseError);
  CHECK_THROWS_AS(parse_endomorphism("rank 2\nx1 = x1\nx2 -> x2\n"), ParseError);
  CHECK_THROWS_AS(parse_endomorphism("rank 2\nx1 -> x1\nx2 -> x5\n"), ParseError);
}

TEST_CASE("read_file reports missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/onerel/file"), Error);
}
