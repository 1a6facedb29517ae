#pragma once

#include <countfn/brooks.hpp>
#include <countfn/counting_function.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace countfn {

// Expression grammar (whitespace between tokens is ignored):
//
//   expr  := '0' | [sign] term (sign term)*
//   term  := [coef '*'] atom
//   coef  := integer ['/' integer]
//   atom  := ('p' | 'phi') '[' word ']'
//   word  := '' | '1' | letter+ | '<' index ('.' index)* '>'
//
// letter: a..z is a_1..a_26, A..Z the inverse. index: optional '-' then a
// positive integer, for ranks past 26.

namespace detail {

class Parser {
 public:
  struct Term {
    Rational coefficient;
    bool phi;
    Word word;
    std::size_t position;
  };

  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  std::vector<Term> expression() {
    std::vector<Term> terms;
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return terms;
      pos_ = save;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
      skip_ws();
    }
    return terms;
  }

  /// The whole input is a single word.
  Word bare_word() {
    skip_ws();
    Word w = word('\0');
    skip_ws();
    if (!at_end()) fail("unexpected character in word");
    return w;
  }

 private:
  Term term(bool negative) {
    skip_ws();
    Rational coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Rational(integer());
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        Integer den = integer();
        if (den == 0) fail("zero denominator", at);
        coefficient /= Rational(den);
        skip_ws();
      }
      if (peek() != '*') fail("expected '*' after coefficient");
      ++pos_;
      skip_ws();
    }
    if (negative) coefficient = -coefficient;
    const std::size_t at = pos_;
    bool phi = false;
    if (text_.substr(pos_, 3) == "phi") {
      phi = true;
      pos_ += 3;
    } else if (peek() == 'p') {
      ++pos_;
    } else {
      fail("expected 'p[' or 'phi['");
    }
    skip_ws();
    if (peek() != '[') fail("expected '['");
    ++pos_;
    Word w = word(']');
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return {coefficient, phi, std::move(w), at};
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Word word(char terminator) {
    const std::size_t start = pos_;
    std::vector<Letter> letters;
    if (peek() == '<') {
      ++pos_;
      while (true) {
        const std::size_t at = pos_;
        bool negative = false;
        if (peek() == '-') {
          negative = true;
          ++pos_;
        }
        const Integer index = integer();
        if (index < 1 || index > alphabet_.rank())
          throw Error(ErrorKind::LetterOutOfRank, "letter index " + index.str() + " exceeds rank " + std::to_string(alphabet_.rank()), at);
        letters.push_back(add_letter(Letter(static_cast<int>(index), negative ? Sign::Negative : Sign::Positive), at));
        if (peek() == '.') {
          ++pos_;
          continue;
        }
        if (peek() != '>') fail("expected '.' or '>'");
        ++pos_;
        break;
      }
    } else if (peek() == '1') {
      ++pos_;
    } else {
      while (!at_end() && peek() != terminator && std::isalpha(static_cast<unsigned char>(peek()))) {
        const char c = peek();
        const bool lower = std::islower(static_cast<unsigned char>(c)) != 0;
        const int index = (lower ? c - 'a' : c - 'A') + 1;
        if (index > alphabet_.rank())
          throw Error(ErrorKind::LetterOutOfRank,
                      std::string("letter '") + c + "' exceeds rank " + std::to_string(alphabet_.rank()), pos_);
        letters.push_back(add_letter(Letter(index, lower ? Sign::Positive : Sign::Negative), pos_));
        ++pos_;
      }
    }
    Word w(std::move(letters));
    if (alphabet_.is_group() && !is_reduced(w.letters()))
      throw Error(ErrorKind::UnreducedWord, "word " + format_word(w) + " is not reduced", start);
    return w;
  }

  Letter add_letter(Letter s, std::size_t at) {
    if (!alphabet_.is_group() && !s.positive())
      throw Error(ErrorKind::InverseInMonoid, "inverse letters are not allowed in monoid mode", at);
    return s;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(at), at);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

inline std::string term_text(const Rational& c, bool first, const std::string& atom) {
  std::string out;
  const Rational magnitude = abs(c);
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (magnitude != 1) out += to_string(magnitude) + "*";
  return out + atom;
}

inline std::string bracket_word(const Word& w) { return w.empty() ? "" : format_word(w); }

}  // namespace detail

inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return detail::Parser(text, alphabet).bare_word();
}

/// Parses a p[...] expression. phi terms are rejected.
inline CountingFunction parse_counting(std::string_view text, const Alphabet& alphabet) {
  CountingFunction f(alphabet);
  for (const auto& t : detail::Parser(text, alphabet).expression()) {
    if (t.phi) throw Error(ErrorKind::AtomModeMismatch, "phi[...] terms need brooks mode", t.position);
    f.add_term(t.word, t.coefficient);
  }
  return f;
}

/// Parses a phi[...] expression over a group alphabet. p terms are rejected.
inline BrooksFunction parse_brooks(std::string_view text, const Alphabet& alphabet) {
  BrooksFunction f(alphabet);
  for (const auto& t : detail::Parser(text, alphabet).expression()) {
    if (!t.phi) throw Error(ErrorKind::AtomModeMismatch, "brooks mode accepts only phi[...] terms", t.position);
    if (t.word.empty()) throw Error(ErrorKind::PhiEpsilon, "phi[] is identically zero", t.position);
    f.add_phi(t.word, t.coefficient);
  }
  return f;
}

/// "3*p[ab] - 1/2*p[aB] + p[]", terms in shortlex order; "0" when empty.
inline std::string to_text(const CountingFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    out += detail::term_text(c, first, "p[" + detail::bracket_word(w) + "]");
    first = false;
  }
  return out;
}

inline std::string to_text(const BrooksFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    out += detail::term_text(c, first, "phi[" + detail::bracket_word(w) + "]");
    first = false;
  }
  return out;
}

}  // namespace countfn
