#pragma once

#include <countfn/error.hpp>
#include <countfn/rational.hpp>
#include <countfn/words.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

namespace countfn {

/// An element of C(M_n) or C(F_n): a finite formal sum Σ x_w p_w with exact
/// rational x_w != 0. p_ε is a legal term. Iteration order is shortlex.
class CountingFunction {
 public:
  using Terms = std::map<Word, Rational>;

  explicit CountingFunction(Alphabet alphabet) : alphabet_(alphabet) {}

  static CountingFunction elementary(const Alphabet& alphabet, const Word& w, const Rational& coefficient = 1) {
    CountingFunction f(alphabet);
    f.add_term(w, coefficient);
    return f;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c·p_w. Validates w against the alphabet and drops the entry if the
  /// coefficient cancels.
  void add_term(const Word& w, const Rational& c) {
    validate(alphabet_, w);
    add_unchecked(w, c);
  }

  CountingFunction& operator+=(const CountingFunction& g) {
    require_same_alphabet(g);
    for (const auto& [w, c] : g.terms_) add_unchecked(w, c);
    return *this;
  }
  CountingFunction& operator-=(const CountingFunction& g) {
    require_same_alphabet(g);
    for (const auto& [w, c] : g.terms_) add_unchecked(w, -c);
    return *this;
  }
  CountingFunction& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
  }

  friend CountingFunction operator+(CountingFunction f, const CountingFunction& g) { return f += g; }
  friend CountingFunction operator-(CountingFunction f, const CountingFunction& g) { return f -= g; }
  friend CountingFunction operator-(CountingFunction f) { return f *= Rational(-1); }
  friend CountingFunction operator*(const Rational& c, CountingFunction f) { return f *= c; }

  friend bool operator==(const CountingFunction&, const CountingFunction&) = default;

 private:
  void add_unchecked(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_same_alphabet(const CountingFunction& g) const {
    if (!(alphabet_ == g.alphabet_)) throw Error(ErrorKind::AlphabetMismatch, "counting functions over different alphabets");
  }

  Alphabet alphabet_;
  Terms terms_;
};

inline CountingFunction add(const CountingFunction& f, const CountingFunction& g) { return f + g; }
inline CountingFunction sub(const CountingFunction& f, const CountingFunction& g) { return f - g; }
inline CountingFunction scale(const Rational& c, const CountingFunction& f) { return c * f; }

/// f(w) = Σ x_v p_v(w).
inline Rational evaluate(const CountingFunction& f, const Word& w) {
  Rational value = 0;
  if (w.empty()) return value;
  for (const auto& [v, x] : f.terms()) {
    if (v.size() > w.size()) break;  // shortlex: every later key is longer
    if (auto n = occurrences(v, w); n != 0) value += x * n;
  }
  return value;
}

/// Coordinates over the elementary functions of non-empty words: p_ε is
/// replaced by Σ_{|s|=1} p_s. Two functions are equal as maps M -> Q iff their
/// expansions are equal.
inline CountingFunction expand_epsilon(const CountingFunction& f) {
  const Rational x = f.coefficient(Word{});
  if (x == 0) return f;
  CountingFunction out = f;
  out.add_term(Word{}, -x);
  for (Letter s : f.alphabet().letters()) out.add_term(Word{s}, x);
  return out;
}

/// Formal equality in the basis of non-empty elementary functions.
inline bool formally_equal(const CountingFunction& f, const CountingFunction& g) {
  return expand_epsilon(f) == expand_epsilon(g);
}

/// Maximum key length in the non-empty-word coordinates, where the
/// representation is unique: depth(p_ε) = 1, depth(p_ε − Σ p_s) = 0.
inline std::size_t depth(const CountingFunction& f) {
  const CountingFunction g = expand_epsilon(f);
  return g.is_zero() ? 0 : g.terms().rbegin()->first.size();
}

/// l_w = p_w − Σ p_{sw}; in group mode s ranges over S̄ \ {w_1^{-1}}.
inline CountingFunction left_relation(const Alphabet& alphabet, const Word& w) {
  validate(alphabet, w);
  CountingFunction f(alphabet);
  f.add_term(w, 1);
  for (Letter s : alphabet.letters()) {
    if (alphabet.is_group() && !w.empty() && s == w.front().inverse()) continue;
    f.add_term(w.prepended(s), -1);
  }
  return f;
}

/// r_w = p_w − Σ p_{ws}; in group mode s ranges over S̄ \ {w_fin^{-1}}.
inline CountingFunction right_relation(const Alphabet& alphabet, const Word& w) {
  validate(alphabet, w);
  CountingFunction f(alphabet);
  f.add_term(w, 1);
  for (Letter s : alphabet.letters()) {
    if (alphabet.is_group() && !w.empty() && s == w.back().inverse()) continue;
    f.add_term(w.appended(s), -1);
  }
  return f;
}

inline void require_group_nonempty(const Alphabet& alphabet, const Word& w, const char* what) {
  if (!alphabet.is_group()) throw Error(ErrorKind::WrongMode, std::string(what) + " is defined on free groups only");
  if (w.empty()) throw Error(ErrorKind::EmptyWord, std::string(what) + " needs a non-empty word");
}

/// s_w = p_w + p_{w^{-1}}.
inline CountingFunction symmetry_relation(const Alphabet& alphabet, const Word& w) {
  require_group_nonempty(alphabet, w, "symmetry relation");
  CountingFunction f(alphabet);
  f.add_term(w, 1);
  f.add_term(inverse(w), 1);
  return f;
}

/// se_w = l_w − r_{w^{-1}}.
inline CountingFunction symmetrized_extension(const Alphabet& alphabet, const Word& w) {
  require_group_nonempty(alphabet, w, "symmetrized extension");
  return left_relation(alphabet, w) - right_relation(alphabet, inverse(w));
}

}  // namespace countfn
