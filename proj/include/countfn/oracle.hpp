#pragma once

#include <countfn/brooks.hpp>
#include <countfn/counting_function.hpp>

#include <boost/integer/common_factor_rt.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace countfn {

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

template <class Visit>
void enumerate_exact(const std::vector<Letter>& letters, bool group, std::size_t len, std::vector<Letter>& buf,
                     Visit& visit) {
  if (buf.size() == len) {
    visit(buf);
    return;
  }
  for (Letter s : letters) {
    if (group && !buf.empty() && s == buf.back().inverse()) continue;
    buf.push_back(s);
    enumerate_exact(letters, group, len, buf, visit);
    buf.pop_back();
  }
}

}  // namespace detail

/// Calls visit(std::span<const Letter>) for every word (reduced word in group
/// mode) of length <= max_len, in shortlex order.
template <class Visit>
void for_each_word(const Alphabet& alphabet, std::size_t max_len, Visit&& visit) {
  const auto letters = alphabet.letters();
  std::vector<Letter> buf;
  buf.reserve(max_len);
  auto leaf = [&](const std::vector<Letter>& w) { visit(std::span<const Letter>(w)); };
  for (std::size_t len = 0; len <= max_len; ++len) detail::enumerate_exact(letters, alphabet.is_group(), len, buf, leaf);
}

/// All words of length <= max_len in shortlex order. Monoid rank n has n^L
/// words of length L; group rank n has 2n(2n-1)^{L-1}.
inline std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for_each_word(alphabet, max_len,
                [&](std::span<const Letter> w) { out.emplace_back(std::vector<Letter>(w.begin(), w.end())); });
  return out;
}

// ---------------------------------------------------------------------------
// Incremental evaluation

namespace detail {

/// f scaled by a common denominator D so that values are integers. Appending
/// a letter to a word w raises D·f by the scaled coefficients of the support
/// words that are suffixes of the extended word (plus D·x_ε).
template <class Value>
class ScaledEvaluator {
 public:
  ScaledEvaluator(const CountingFunction& f, const Integer& denominator) : denominator_(denominator) {
    by_last_.resize(static_cast<std::size_t>(2 * f.alphabet().rank()));
    for (const auto& [w, x] : f.terms()) {
      const Integer scaled = boost::multiprecision::numerator(x) * (denominator / boost::multiprecision::denominator(x));
      const Value v = static_cast<Value>(scaled);
      if (w.empty()) {
        epsilon_ = v;
        continue;
      }
      Term t;
      for (Letter s : w) t.codes.push_back(s.code());
      t.coefficient = v;
      by_last_[static_cast<std::size_t>(w.back().code())].push_back(std::move(t));
    }
  }

  /// D·(f(buf) − f(buf without its last letter)).
  Value step(const std::vector<int>& buf) const {
    Value delta = epsilon_;
    for (const Term& t : by_last_[static_cast<std::size_t>(buf.back())]) {
      if (t.codes.size() > buf.size()) continue;
      if (std::equal(t.codes.rbegin(), t.codes.rend(), buf.rbegin())) delta += t.coefficient;
    }
    return delta;
  }

  /// D·f at every prefix of `word`; entry i is the value on the first i letters.
  std::vector<Value> prefix_values(const Word& word) const {
    std::vector<Value> out;
    out.reserve(word.size() + 1);
    out.push_back(Value(0));
    std::vector<int> buf;
    buf.reserve(word.size());
    for (Letter s : word) {
      buf.push_back(s.code());
      out.push_back(out.back() + step(buf));
    }
    return out;
  }

  const Integer& denominator() const { return denominator_; }

 private:
  struct Term {
    std::vector<int> codes;
    Value coefficient;
  };
  Integer denominator_;
  std::vector<std::vector<Term>> by_last_;
  Value epsilon_ = Value(0);
};

inline Integer common_denominator(const CountingFunction& f) {
  Integer d = 1;
  for (const auto& [w, x] : f.terms()) d = boost::integer::lcm(d, Integer(boost::multiprecision::denominator(x)));
  return d;
}

/// True when every D·f value on words of length <= max_len fits in int64.
inline bool fits_int64(const CountingFunction& f, const Integer& d, std::size_t max_len) {
  Integer total = 0;
  for (const auto& [w, x] : f.terms()) total += boost::multiprecision::abs(boost::multiprecision::numerator(x)) * (d / boost::multiprecision::denominator(x));
  return total * (max_len + 1) < Integer(std::numeric_limits<std::int64_t>::max() / 4);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sup-norm

struct SupNorm {
  Rational value;
  Word argmax;
};

namespace detail {

template <class Value>
SupNorm sup_norm_impl(const CountingFunction& f, std::size_t max_len, const Integer& d) {
  const ScaledEvaluator<Value> eval(f, d);
  const auto letters = f.alphabet().letters();
  const bool group = f.alphabet().is_group();
  Value best = Value(0);
  std::vector<int> best_word;  // ε
  std::vector<int> buf;
  buf.reserve(max_len);

  auto better = [&](const Value& mag) {
    if (mag > best) return true;
    if (mag < best) return false;
    if (buf.size() != best_word.size()) return buf.size() < best_word.size();
    return buf < best_word;
  };

  auto dfs = [&](auto& self, const Value& value) -> void {
    if (buf.size() == max_len) return;
    for (Letter s : letters) {
      if (group && !buf.empty() && s.code() == (buf.back() ^ 1)) continue;
      buf.push_back(s.code());
      const Value next = value + eval.step(buf);
      const Value mag = next < 0 ? Value(-next) : next;
      if (mag >= best && better(mag)) {
        best = mag;
        best_word = buf;
      }
      self(self, next);
      buf.pop_back();
    }
  };
  dfs(dfs, Value(0));

  std::vector<Letter> argmax;
  for (int c : best_word) argmax.push_back(Letter::from_code(c));
  return {Rational(Integer(best), d), Word(std::move(argmax))};
}

}  // namespace detail

/// Exact max |f(w)| over all words of length <= max_len, with the shortlex
/// first maximizer. A lower bound for the true sup-norm.
inline SupNorm sup_norm_estimate(const CountingFunction& f, std::size_t max_len) {
  const Integer d = detail::common_denominator(f);
  if (detail::fits_int64(f, d, max_len)) return detail::sup_norm_impl<std::int64_t>(f, max_len, d);
  return detail::sup_norm_impl<Integer>(f, max_len, d);
}

// ---------------------------------------------------------------------------
// Witness families

/// w_1, w_fin ∉ {a_1, a_1^{-1}}.
inline bool clean(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "clean() needs a non-empty word");
  auto a1_like = [](Letter s) { return s.index() == 1; };
  return !a1_like(w.front()) && !a1_like(w.back());
}

enum class WitnessMode { Monoid, Group, Brooks };

/// Which unboundedness construction produced a family.
enum class WitnessConstruction {
  PowerOfA1,            // a_1^k
  PowerOfA1Inverse,     // a_1^{-k}
  ShortestWordThenA1,   // (w a_1^L)^k, w shortest support word (monoid)
  CleanThenA1,          // (w a_1^L)^k, w clean
  A1InverseThenClean,   // (a_1^{-L} w)^k
  CleanConjugatedA2,    // (w a_1^L a_2 a_1^{-L})^k
  CleanDoubled,         // (w a_1^L w a_1^{-L})^k
  A2ConjugatedA2,       // (a_2 a_1^L a_2 a_1^{-L})^k
  A2Commutator,         // (a_2 a_1^L a_2^{-1} a_1^{-L})^k
};

inline const char* to_string(WitnessConstruction c) {
  switch (c) {
    case WitnessConstruction::PowerOfA1: return "power_of_a1";
    case WitnessConstruction::PowerOfA1Inverse: return "power_of_a1_inverse";
    case WitnessConstruction::ShortestWordThenA1: return "shortest_word_then_a1";
    case WitnessConstruction::CleanThenA1: return "clean_then_a1";
    case WitnessConstruction::A1InverseThenClean: return "a1_inverse_then_clean";
    case WitnessConstruction::CleanConjugatedA2: return "clean_conjugated_a2";
    case WitnessConstruction::CleanDoubled: return "clean_doubled";
    case WitnessConstruction::A2ConjugatedA2: return "a2_conjugated_a2";
    case WitnessConstruction::A2Commutator: return "a2_commutator";
  }
  return "?";
}

/// k ↦ prefix · period^k, on which f grows with constant nonzero slope.
struct WitnessFamily {
  Word prefix;
  Word period;
  WitnessConstruction construction;
  Rational slope;
  std::size_t tested_range;
};

inline Word family_member(const Alphabet& alphabet, const WitnessFamily& family, std::size_t k) {
  return concat(alphabet, family.prefix, power(alphabet, family.period, k));
}

namespace detail {

template <class Value>
std::optional<Rational> affine_slope(const ScaledEvaluator<Value>& eval, const Alphabet& alphabet, const Word& prefix,
                                     const Word& period, std::size_t k_max) {
  const Word long_word = concat(alphabet, prefix, power(alphabet, period, k_max));
  std::vector<Value> values;  // values[k-1] = D·f(prefix·period^k)
  if (long_word.size() == prefix.size() + k_max * period.size()) {
    const auto prefix_vals = eval.prefix_values(long_word);
    for (std::size_t k = 1; k <= k_max; ++k) values.push_back(prefix_vals[prefix.size() + k * period.size()]);
  } else {
    for (std::size_t k = 1; k <= k_max; ++k)
      values.push_back(eval.prefix_values(concat(alphabet, prefix, power(alphabet, period, k))).back());
  }
  const Value slope = values[1] - values[0];
  if (slope == Value(0)) return std::nullopt;
  for (std::size_t i = 2; i < values.size(); ++i)
    if (values[i] - values[i - 1] != slope) return std::nullopt;
  return Rational(Integer(slope), eval.denominator());
}

inline Word repeat(Letter s, std::size_t n) { return Word(std::vector<Letter>(n, s)); }

inline Word join(std::initializer_list<Word> parts) {
  std::vector<Letter> out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return Word(std::move(out));
}

struct Candidate {
  Word period;
  WitnessConstruction construction;
};

inline std::vector<Candidate> catalog(const CountingFunction& f, WitnessMode mode) {
  const Alphabet& alphabet = f.alphabet();
  const std::size_t L = std::max<std::size_t>(1, depth(f));
  const Letter a1 = gen(1), A1 = inv(1), a2 = gen(2), A2 = inv(2);
  const Word a1L = repeat(a1, L);
  std::vector<Candidate> out;
  out.push_back({Word{a1}, WitnessConstruction::PowerOfA1});

  if (mode == WitnessMode::Monoid) {
    std::size_t shortest = 0;
    for (const auto& [w, x] : f.terms()) {
      if (w.empty()) continue;
      if (shortest == 0) shortest = w.size();
      if (w.size() != shortest) break;
      out.push_back({join({w, a1L}), WitnessConstruction::ShortestWordThenA1});
    }
    return out;
  }

  out.push_back({Word{A1}, WitnessConstruction::PowerOfA1Inverse});
  const Word A1L = repeat(A1, L);

  std::vector<Word> clean_words;
  std::vector<Word> cleanings;
  for (const auto& [w, x] : f.terms()) {
    if (w.empty()) continue;
    if (clean(w)) {
      clean_words.push_back(w);
      continue;
    }
    for (const Word& c : {join({Word{a2}, w}), join({w, Word{A2}}), join({Word{a2}, w, Word{A2}})}) {
      if (is_reduced(c.letters()) && clean(c) && std::find(cleanings.begin(), cleanings.end(), c) == cleanings.end())
        cleanings.push_back(c);
    }
  }
  auto clean_families = [&](const std::vector<Word>& words) {
    for (const Word& w : words) {
      out.push_back({join({w, a1L}), WitnessConstruction::CleanThenA1});
      out.push_back({join({A1L, w}), WitnessConstruction::A1InverseThenClean});
    }
    for (const Word& w : words) out.push_back({join({w, a1L, Word{a2}, A1L}), WitnessConstruction::CleanConjugatedA2});
    for (const Word& w : words) out.push_back({join({w, a1L, w, A1L}), WitnessConstruction::CleanDoubled});
  };
  clean_families(clean_words);
  clean_families(cleanings);

  if (mode == WitnessMode::Brooks) {
    out.push_back({join({Word{a2}, a1L, Word{a2}, A1L}), WitnessConstruction::A2ConjugatedA2});
    out.push_back({join({Word{a2}, a1L, Word{A2}, A1L}), WitnessConstruction::A2Commutator});
  }

  std::erase_if(out, [&](const Candidate& c) {
    return !is_reduced(c.period.letters()) || (alphabet.is_group() && c.period.front() == c.period.back().inverse());
  });
  return out;
}

template <class Value>
std::optional<WitnessFamily> search(const CountingFunction& f, WitnessMode mode, std::size_t k_range,
                                    const Integer& d) {
  const ScaledEvaluator<Value> eval(f, d);
  for (const Candidate& c : catalog(f, mode)) {
    auto slope = affine_slope(eval, f.alphabet(), Word{}, c.period, k_range);
    if (!slope) continue;
    auto doubled = affine_slope(eval, f.alphabet(), Word{}, c.period, 2 * k_range);
    if (!doubled || *doubled != *slope) continue;
    return WitnessFamily{Word{}, c.period, c.construction, *slope, k_range};
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches the unboundedness constructions, in the order the independence
/// argument uses them, for a family k ↦ v^k with constant nonzero forward
/// difference f(v^{k+1}) − f(v^k) over k = 1..k_range (re-checked over
/// 1..2·k_range). f should be a nonzero canonical base. Throws NoWitnessFound
/// when the catalog is exhausted.
inline WitnessFamily witness(const CountingFunction& f, WitnessMode mode, std::size_t k_range = 50) {
  if ((mode == WitnessMode::Monoid) == f.alphabet().is_group())
    throw Error(ErrorKind::WrongMode, "witness mode does not match the alphabet");
  if (k_range < 3) k_range = 3;
  const Integer d = detail::common_denominator(f);
  std::size_t longest = 0;
  for (const auto& c : detail::catalog(f, mode)) longest = std::max(longest, c.period.size());
  const std::optional<WitnessFamily> found =
      detail::fits_int64(f, d, 2 * k_range * longest)
          ? detail::search<std::int64_t>(f, mode, k_range, d)
          : detail::search<Integer>(f, mode, k_range, d);
  if (!found) throw Error(ErrorKind::NoWitnessFound, "no witness family in the catalog for a nonzero function");
  return *found;
}

/// Witness for a Brooks combination, evaluated through φ_w = p_w − p_{w^{-1}}.
inline WitnessFamily witness(const BrooksFunction& F, std::size_t k_range = 50) {
  return witness(brooks_to_counting(F), WitnessMode::Brooks, k_range);
}

}  // namespace countfn
