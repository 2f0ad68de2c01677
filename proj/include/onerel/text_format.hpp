#pragma once

// Text forms of words, presentations and endomorphisms.
//
// Word grammar (whitespace or '*' between factors):
//   word   := factor { ['*'] factor }
//   factor := atom [ '^' integer ] | atom '^' '(' word ')'
//   atom   := 'x' digits | '1' | '(' word ')' | '[' word ',' word ']'
// a^(b) is the conjugate b a b^-1 and [a,b] = a^-1 b^-1 a b.  The empty
// string and "1" both denote the identity.
//
// Presentation file:           Automorphism file:
//   rank 4                       rank 4
//   relator x1^2 x2^2 ...        x1 -> x1^-1 x4^-2 x3^-2 x2^-2
//                                x2 -> x2
//                                ...
// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <string>
#include <string_view>

#include "onerel/automorphisms.hpp"
#include "onerel/small_cancellation.hpp"
#include "onerel/words.hpp"

namespace onerel {

// Throws ParseError (line is `line`, column is 1-based within `text`).
Word parse_word(std::string_view text, int rank, std::size_t line = 1);
// Rank is the largest generator index mentioned (at least 1).
Word parse_word(std::string_view text);

struct PresentationFile {
  int rank = 0;
  Word relator;  // as written, before cyclic normalization
};

PresentationFile parse_presentation_file(std::string_view text);
Presentation parse_presentation(std::string_view text);
Endomorphism parse_endomorphism(std::string_view text);

std::string format_presentation(int rank, const Word& relator);
std::string format_endomorphism(const Endomorphism& e);

std::string read_file(const std::string& path);

}  // namespace onerel
