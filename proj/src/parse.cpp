#include "serret/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace serret {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " +
                         what),
      position_(position) {}

namespace {

// Cursor over the input; every primitive reports failures with the
// current position.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  void expect_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word)
      throw ParseError("expected '" + std::string(word) + "'", pos_);
    pos_ += word.size();
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t i = pos_;
    if (i < text_.size() && (text_[i] == '-' || text_[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer", pos_);
    pos_ = i;
    return Integer(std::string(text_.substr(start, i - start)), 10);
  }

  void expect_end() {
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Integer> comma_separated_integers(Scanner& s, char terminator) {
  std::vector<Integer> out;
  out.push_back(s.integer());
  while (s.try_consume(',')) out.push_back(s.integer());
  s.expect(terminator);
  return out;
}

}  // namespace

QuadraticIrrational parse_qi(std::string_view text) {
  Scanner s(text);
  Integer p = 0;
  Integer q = 1;
  bool parenthesized = s.try_consume('(');
  if (parenthesized) {
    p = s.integer();
    s.expect('+');
  }
  s.expect_keyword("sqrt");
  s.expect('(');
  Integer d = s.integer();
  s.expect(')');
  if (parenthesized) {
    s.expect(')');
    s.expect('/');
    q = s.integer();
  }
  s.expect_end();
  return {std::move(p), std::move(d), std::move(q)};
}

PeriodicCF parse_periodic_cf(std::string_view text) {
  Scanner s(text);
  s.expect('[');
  std::vector<Integer> pre;
  if (!s.try_consume(';')) {
    pre.push_back(s.integer());
    s.expect(';');
  }
  while (!s.try_consume('(')) {
    pre.push_back(s.integer());
    s.expect(',');
  }
  std::vector<Integer> per = comma_separated_integers(s, ')');
  s.expect(']');
  s.expect_end();
  return {std::move(pre), std::move(per)};
}

FiniteCF parse_finite_cf(std::string_view text) {
  Scanner s(text);
  s.expect('[');
  std::vector<Integer> terms;
  terms.push_back(s.integer());
  if (s.try_consume(';')) {
    if (!s.try_consume(']')) {
      terms.push_back(s.integer());
      while (s.try_consume(',')) terms.push_back(s.integer());
      s.expect(']');
    }
  } else {
    s.expect(']');
  }
  s.expect_end();
  return FiniteCF(std::move(terms));
}

UniModMatrix parse_matrix(std::string_view text) {
  Scanner s(text);
  s.expect('[');
  s.expect('[');
  Integer a = s.integer();
  s.expect(',');
  Integer b = s.integer();
  s.expect(']');
  s.expect(',');
  s.expect('[');
  Integer c = s.integer();
  s.expect(',');
  Integer d = s.integer();
  s.expect(']');
  s.expect(']');
  s.expect_end();
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

FreeWord parse_word(std::string_view text) {
  FreeWord word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    const std::string_view token = text.substr(start, i - start);
    if (token == "U") {
      word.letters.push_back(FreeLetter::u());
    } else if (token == "V") {
      word.letters.push_back(FreeLetter::v());
    } else if (token == "T") {
      word.letters.push_back(FreeLetter::t(1));
    } else if (token.size() >= 3 && token[0] == 'T' && token[1] == '^') {
      std::size_t j = 2;
      if (token[j] == '-' || token[j] == '+') ++j;
      bool ok = j < token.size();
      for (; j < token.size() && ok; ++j)
        ok = std::isdigit(static_cast<unsigned char>(token[j])) != 0;
      if (!ok)
        throw ParseError("bad exponent in '" + std::string(token) + "'",
                         start + 2);
      word.letters.push_back(
          FreeLetter::t(Integer(std::string(token.substr(2)), 10)));
    } else {
      throw ParseError("unknown word token '" + std::string(token) + "'",
                       start);
    }
  }
  return word;
}

}  // namespace serret
