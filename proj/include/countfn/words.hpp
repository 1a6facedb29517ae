#pragma once

#include <countfn/error.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace countfn {

enum class Mode : std::uint8_t { Monoid, Group };

inline const char* to_string(Mode mode) { return mode == Mode::Monoid ? "monoid" : "group"; }

enum class Sign : std::uint8_t { Positive = 0, Negative = 1 };

/// A generator a_i or its inverse. Internally a single code 2(i-1)+sign, so
/// code order is (index, sign) with Positive < Negative, and the inverse is
/// the code with its low bit flipped.
class Letter {
 public:
  constexpr Letter(int index, Sign sign = Sign::Positive)
      : code_(static_cast<std::uint32_t>(2 * (index - 1) + static_cast<int>(sign))) {}

  static constexpr Letter from_code(int code) {
    return Letter(code / 2 + 1, (code & 1) ? Sign::Negative : Sign::Positive);
  }

  constexpr int index() const { return static_cast<int>(code_ / 2) + 1; }
  constexpr Sign sign() const { return (code_ & 1U) ? Sign::Negative : Sign::Positive; }
  constexpr int code() const { return static_cast<int>(code_); }
  constexpr bool positive() const { return sign() == Sign::Positive; }
  constexpr Letter inverse() const { return from_code(static_cast<int>(code_ ^ 1U)); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_;
};

/// a_i.
constexpr Letter gen(int index) { return Letter(index, Sign::Positive); }
/// a_i^{-1}.
constexpr Letter inv(int index) { return Letter(index, Sign::Negative); }

/// Rank n >= 2 plus the monoid/group switch. Group alphabets carry both
/// signs of every generator.
class Alphabet {
 public:
  Alphabet(int rank, Mode mode) : rank_(rank), mode_(mode) {
    if (rank < 2) throw Error(ErrorKind::InvalidRank, "rank must be at least 2, got " + std::to_string(rank));
  }

  static Alphabet monoid(int rank) { return {rank, Mode::Monoid}; }
  static Alphabet group(int rank) { return {rank, Mode::Group}; }

  int rank() const { return rank_; }
  Mode mode() const { return mode_; }
  bool is_group() const { return mode_ == Mode::Group; }

  /// |S| in monoid mode, |S̄| = 2n in group mode.
  int letter_count() const { return is_group() ? 2 * rank_ : rank_; }

  /// Letters in code order. Monoid: a_1..a_n. Group: a_1, a_1^{-1}, a_2, ...
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(letter_count()));
    for (int i = 1; i <= rank_; ++i) {
      out.push_back(gen(i));
      if (is_group()) out.push_back(inv(i));
    }
    return out;
  }

  bool contains(Letter s) const {
    if (s.index() < 1 || s.index() > rank_) return false;
    return is_group() || s.positive();
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
  Mode mode_;
};

/// A finite letter sequence. Ordered shortlex: by length, then
/// lexicographically by letter code. Whether a Word is reduced is a property
/// checked against an Alphabet (see `validate`), not stored.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Letters [pos, pos+count).
  Word slice(std::size_t pos, std::size_t count) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + count)));
  }
  Word drop_front(std::size_t count = 1) const { return slice(count, size() - count); }
  Word drop_back(std::size_t count = 1) const { return slice(0, size() - count); }

  /// Raw prepend/append, no reduction.
  Word prepended(Letter s) const {
    std::vector<Letter> out;
    out.reserve(size() + 1);
    out.push_back(s);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
  }
  Word appended(Letter s) const {
    Word out = *this;
    out.letters_.push_back(s);
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
    if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(),
                                                  rhs.letters_.begin(), rhs.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

/// Text form used everywhere for display: a..z for a_1..a_26, A..Z for their
/// inverses, "1" for the empty word, and `<i.j.-k>` when a letter is past z.
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  const bool alpha = std::all_of(w.begin(), w.end(), [](Letter s) { return s.index() <= 26; });
  std::string out;
  if (alpha) {
    for (Letter s : w) out += static_cast<char>((s.positive() ? 'a' : 'A') + s.index() - 1);
    return out;
  }
  out = "<";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    if (!w[i].positive()) out += '-';
    out += std::to_string(w[i].index());
  }
  return out + ">";
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

inline std::size_t length(const Word& w) { return w.size(); }

inline bool is_reduced(std::span<const Letter> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1].inverse()) return false;
  return true;
}

/// Throws unless every letter belongs to the alphabet and, in group mode,
/// the word is reduced.
inline void validate(const Alphabet& alphabet, const Word& w) {
  for (Letter s : w) {
    if (s.index() < 1 || s.index() > alphabet.rank())
      throw Error(ErrorKind::LetterOutOfRank, "letter index " + std::to_string(s.index()) + " exceeds rank " +
                                                  std::to_string(alphabet.rank()));
    if (!alphabet.is_group() && !s.positive())
      throw Error(ErrorKind::InverseInMonoid, "inverse letter in monoid word " + format_word(w));
  }
  if (alphabet.is_group() && !is_reduced(w.letters()))
    throw Error(ErrorKind::UnreducedWord, "word " + format_word(w) + " is not reduced");
}

/// Free reduction. Single left-to-right pass with a stack; in monoid mode the
/// sequence is returned unchanged.
inline Word reduce(std::span<const Letter> seq, const Alphabet& alphabet) {
  if (!alphabet.is_group()) return Word(std::vector<Letter>(seq.begin(), seq.end()));
  std::vector<Letter> stack;
  stack.reserve(seq.size());
  for (Letter s : seq) {
    if (!stack.empty() && stack.back() == s.inverse())
      stack.pop_back();
    else
      stack.push_back(s);
  }
  return Word(std::move(stack));
}

/// w^{-1}: reversed, every sign flipped.
inline Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

/// Concatenation; reduced afterwards in group mode.
inline Word concat(const Alphabet& alphabet, const Word& u, const Word& v) {
  std::vector<Letter> seq(u.begin(), u.end());
  seq.insert(seq.end(), v.begin(), v.end());
  return reduce(seq, alphabet);
}

/// w^k. In group mode w^k (k >= 2) is only defined for w_1 != w_fin^{-1}.
inline Word power(const Alphabet& alphabet, const Word& w, std::size_t k) {
  if (alphabet.is_group() && k >= 2 && !w.empty() && w.front() == w.back().inverse())
    throw Error(ErrorKind::NonCyclicallyReduced, "power of " + format_word(w) + " is not reduced");
  std::vector<Letter> out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return Word(std::move(out));
}

/// p_v(w): number of (possibly overlapping) occurrences of v in w, with
/// p_ε(w) = |w|.
inline std::size_t occurrences(const Word& v, const Word& w) {
  if (v.empty()) return w.size();
  if (v.size() > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i)
    if (std::equal(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  return count;
}

/// 1 iff v is a prefix of w.
inline int delta1(const Word& v, const Word& w) {
  return v.size() <= w.size() && std::equal(v.begin(), v.end(), w.begin()) ? 1 : 0;
}

/// 1 iff v is a suffix of w.
inline int deltafin(const Word& v, const Word& w) {
  return v.size() <= w.size() && std::equal(v.begin(), v.end(), w.end() - static_cast<std::ptrdiff_t>(v.size()))
             ? 1
             : 0;
}

}  // namespace countfn
