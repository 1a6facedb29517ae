#pragma once

#include <countfn/canon_monoid.hpp>
#include <countfn/rewrite.hpp>

#include <optional>
#include <string_view>

namespace countfn {

/// Leading patterns from P = {a_1, a_2a_1^{-1}} and trailing patterns from
/// P' = {a_1a_2^{-1}, a_1^{-1}} of a reduced word.
struct DefectProfile {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t k_prime = 0;
  std::size_t m_prime = 0;

  std::size_t p_norm() const { return k + m; }
  std::size_t p_prime_norm() const { return k_prime + m_prime; }
  std::size_t defect() const { return p_norm() + p_prime_norm(); }

  friend bool operator==(const DefectProfile&, const DefectProfile&) = default;
};

/// Greedy scans. Taking the whole a_1-run as k is optimal: any shorter
/// choice leaves a_1 as the next letter, which cannot start a_2a_1^{-1}, so m
/// would be 0. The suffix side is the mirror image, and the two sides are
/// scanned independently (they may share a letter).
inline DefectProfile defect(const Word& w) {
  const Letter a1 = gen(1), a2 = gen(2), A1 = inv(1), A2 = inv(2);
  DefectProfile d;
  d.k = detail::leading_run(w, a1);
  std::size_t pos = d.k;
  while (pos + 2 <= w.size() && w[pos] == a2 && w[pos + 1] == A1) {
    ++d.m;
    pos += 2;
  }
  d.k_prime = detail::trailing_run(w, A1);
  std::size_t end = w.size() - d.k_prime;  // one past the unconsumed suffix
  while (end >= 2 && w[end - 2] == a1 && w[end - 1] == A2) {
    ++d.m_prime;
    end -= 2;
  }
  return d;
}

/// Name of the first basis condition w violates, if any. The basis set is
/// W̄' with a_1^{-1} added and a_2 removed.
inline std::optional<std::string_view> basis_failure_group(const Word& w) {
  const Letter a1 = gen(1), a2 = gen(2), A1 = inv(1), A2 = inv(2);
  if (w == Word{A1}) return std::nullopt;
  if (w == Word{a2}) return "w = a_2";
  if (w.empty()) return std::nullopt;
  if (w.front() == a1) return "w_1 = a_1";
  if (w.size() >= 2 && w[0] == a2 && w[1] == A1) return "w_1 w_2 = a_2 a_1^-1";
  if (w.back() == A1) return "w_fin = a_1^-1";
  if (w.size() >= 2 && w[w.size() - 2] == a1 && w.back() == A2) return "w_fin-1 w_fin = a_1 a_2^-1";
  return std::nullopt;
}

/// w ∈ W̄.
inline bool in_basis_group(const Word& w) { return !basis_failure_group(w).has_value(); }

struct A2Elimination {
  CountingFunction function;
  KernelCertificate certificate;  // expands exactly to `function`
};

/// f = Σ_{s ∉ {a_1, a_1^{-1}}} p_s − Σ_{s_1 ≠ a_1, s_2 ∉ {a_1^{-1}, s_1^{-1}}} p_{s_1 s_2},
/// a bounded function whose only non-basis term is p_{a_2}, together with
/// f = Σ_{s ∉ {a_1, a_1^{-1}}} l_s + l_{a_1} − r_{a_1}.
inline A2Elimination a2_elimination(const Alphabet& alphabet) {
  detail::require_mode(alphabet, Mode::Group, "a2_elimination");
  const Letter a1 = gen(1), A1 = inv(1);
  A2Elimination out{CountingFunction(alphabet), {}};
  for (Letter s : alphabet.letters()) {
    if (s == a1 || s == A1) continue;
    out.function.add_term(Word{s}, 1);
    out.certificate.add(1, RelationKind::L, Word{s});
  }
  for (Letter s1 : alphabet.letters()) {
    if (s1 == a1) continue;
    for (Letter s2 : alphabet.letters()) {
      if (s2 == A1 || s2 == s1.inverse()) continue;
      out.function.add_term(Word{s1, s2}, -1);
    }
  }
  out.certificate.add(1, RelationKind::L, Word{a1});
  out.certificate.add(-1, RelationKind::R, Word{a1});
  return out;
}

/// Coordinates of f over {p_w : w ∈ W̄} plus an {l_w, r_w} certificate.
/// Cases, first match wins: a bare a_2 is eliminated with a2_elimination;
/// k > 0 peels the leading a_1; k' > 0 peels the trailing a_1^{-1}; m > 0
/// peels the a_2 of a leading a_2a_1^{-1}; m' > 0 peels the a_2^{-1} of a
/// trailing a_1a_2^{-1}. Each rule strictly lowers the defect of every
/// non-basis word it produces.
inline Canonicalization canonicalize_group(const CountingFunction& f, RewriteTrace* trace = nullptr) {
  detail::require_mode(f.alphabet(), Mode::Group, "canonicalize_group");
  const Alphabet& alphabet = f.alphabet();
  const Word a2_word{gen(2)};
  auto rule = [&](const Word& w) {
    if (w == a2_word) {
      const A2Elimination elim = a2_elimination(alphabet);
      Rewrite rw;
      for (const auto& [u, c] : elim.function.terms())
        if (u != a2_word) rw.replacement.emplace_back(u, -c);
      rw.certificate = elim.certificate.items;
      return rw;
    }
    const DefectProfile d = defect(w);
    if (d.k > 0) return peel_left(alphabet, w);
    if (d.k_prime > 0) return peel_right(alphabet, w);
    if (d.m > 0) return peel_left(alphabet, w);
    if (d.m_prime > 0) return peel_right(alphabet, w);
    throw std::logic_error("no rewrite rule for " + format_word(w));
  };
  auto measure = [](const Word& w) { return defect(w).defect(); };
  return run_worklist(f, BasisKind::GroupBbar, measure, in_basis_group, rule, trace);
}

inline bool is_bounded_group(const CountingFunction& f) { return canonicalize_group(f).base().is_zero(); }

inline bool equivalent_group(const CountingFunction& f, const CountingFunction& g) { return is_bounded_group(f - g); }

}  // namespace countfn
