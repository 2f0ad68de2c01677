#include "onerel/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "onerel/errors.hpp"

namespace onerel {

namespace {

constexpr long long kMaxExponent = 1'000'000;
constexpr std::size_t kMaxLetters = 10'000'000;

class WordParser {
 public:
  WordParser(std::string_view text, int rank, std::size_t line, std::size_t column_offset)
      : text_(text), rank_(rank), line_(line), offset_(column_offset) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == 'x' || c == '(' || c == '[' || c == '1';
  }

  Word word() {
    Word w(rank_);
    bool first = true;
    for (;;) {
      if (!first && peek('*')) {
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after '*'");
      }
      if (!at_factor_start()) break;
      w = w * factor();
      first = false;
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    if (!peek('^')) return base;
    ++pos_;
    if (peek('(')) {
      ++pos_;
      Word by = word();
      expect(')');
      return conjugate(base, by);
    }
    const std::size_t at = pos_;
    const long long k = integer();
    if (base.size() * static_cast<std::size_t>(k < 0 ? -k : k) > kMaxLetters) {
      pos_ = at;
      fail("power would exceed " + std::to_string(kMaxLetters) + " letters");
    }
    return power(base, k);
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits_start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) {
        pos_ = start;
        fail("exponent magnitude exceeds " + std::to_string(kMaxExponent));
      }
      ++pos_;
    }
    if (pos_ == digits_start) fail("expected an integer exponent or '('");
    return negative ? -value : value;
  }

  Word atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Word(rank_);
    }
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    // 'x' digits
    const std::size_t start = pos_;
    ++pos_;
    long long index = 0;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = std::min<long long>(index * 10 + (text_[pos_] - '0'), std::numeric_limits<int>::max());
      ++pos_;
    }
    if (pos_ == digits_start) fail("expected generator digits after 'x'");
    if (index < 1 || index > rank_) {
      pos_ = start;
      fail("generator x" + std::to_string(index) + " outside rank " + std::to_string(rank_));
    }
    return Word::generator(static_cast<int>(index), rank_);
  }

  std::string_view text_;
  int rank_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

// "keyword <rest>" -> offset of rest, or nullopt.
std::optional<std::size_t> after_keyword(const std::string& line, std::string_view keyword) {
  const auto first = line.find_first_not_of(" \t");
  if (line.compare(first, keyword.size(), keyword) != 0) return std::nullopt;
  const std::size_t end = first + keyword.size();
  if (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) return std::nullopt;
  return end;
}

int parse_rank_line(const Line& line) {
  auto rest = after_keyword(line.text, "rank");
  if (!rest) throw ParseError("expected 'rank <n>'", line.number, 1);
  std::istringstream in(line.text.substr(*rest));
  int rank = 0;
  std::string trailing;
  if (!(in >> rank) || (in >> trailing) || rank < 1) {
    throw ParseError("rank must be a positive integer", line.number, *rest + 1);
  }
  return rank;
}

}  // namespace

Word parse_word(std::string_view text, int rank, std::size_t line) {
  return WordParser(text, rank, line, 0).parse();
}

Word parse_word(std::string_view text) {
  int rank = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    long long index = 0;
    for (std::size_t j = i + 1; j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])); ++j) {
      index = std::min<long long>(index * 10 + (text[j] - '0'), 1'000'000);
    }
    rank = static_cast<int>(std::max<long long>(rank, index));
  }
  return parse_word(text, rank);
}

PresentationFile parse_presentation_file(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty presentation file", 1, 1);
  PresentationFile out;
  out.rank = parse_rank_line(lines[0]);
  if (lines.size() < 2) throw ParseError("missing 'relator <word>' line", lines[0].number + 1, 1);
  const Line& rel = lines[1];
  auto rest = after_keyword(rel.text, "relator");
  if (!rest) throw ParseError("expected 'relator <word>'", rel.number, 1);
  out.relator = WordParser(std::string_view(rel.text).substr(*rest), out.rank, rel.number, *rest).parse();
  if (lines.size() > 2) throw ParseError("unexpected content after relator", lines[2].number, 1);
  return out;
}

Presentation parse_presentation(std::string_view text) {
  return Presentation(parse_presentation_file(text).relator);
}

Endomorphism parse_endomorphism(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("empty automorphism file", 1, 1);
  const int rank = parse_rank_line(lines[0]);
  std::vector<std::optional<Word>> images(static_cast<std::size_t>(rank));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'x<i> -> <word>'", line.number, 1);
    const std::string lhs = line.text.substr(0, arrow);
    const auto first = lhs.find_first_not_of(" \t");
    const auto last = lhs.find_last_not_of(" \t");
    if (first == std::string::npos || lhs[first] != 'x') {
      throw ParseError("expected a generator before '->'", line.number, 1);
    }
    const std::string digits = lhs.substr(first + 1, last - first);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("malformed generator '" + lhs.substr(first, last - first + 1) + "'",
                       line.number, first + 1);
    }
    const long long index = digits.size() > 9 ? 0 : std::stoll(digits);
    if (index < 1 || index > rank) {
      throw ParseError("generator x" + digits + " outside rank " + std::to_string(rank), line.number,
                       first + 1);
    }
    auto& slot = images[static_cast<std::size_t>(index - 1)];
    if (slot) throw ParseError("duplicate image for x" + digits, line.number, first + 1);
    slot = WordParser(std::string_view(line.text).substr(arrow + 2), rank, line.number, arrow + 2).parse();
  }
  std::vector<Word> out;
  for (int i = 0; i < rank; ++i) {
    if (!images[static_cast<std::size_t>(i)]) {
      throw ParseError("missing image for x" + std::to_string(i + 1), lines.back().number, 1);
    }
    out.push_back(*images[static_cast<std::size_t>(i)]);
  }
  return Endomorphism(std::move(out));
}

std::string format_presentation(int rank, const Word& relator) {
  return "rank " + std::to_string(rank) + "\nrelator " + to_string(relator) + "\n";
}

std::string format_endomorphism(const Endomorphism& e) {
  std::string out = "rank " + std::to_string(e.rank()) + "\n";
  for (int i = 1; i <= e.rank(); ++i) {
    out += "x" + std::to_string(i) + " -> " + to_string(e.image(i)) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace onerel
