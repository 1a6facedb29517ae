#pragma once

#include <countfn/rewrite.hpp>

#include <optional>
#include <string_view>

namespace countfn {

namespace detail {

inline void require_mode(const Alphabet& alphabet, Mode mode, const char* what) {
  if (alphabet.mode() != mode)
    throw Error(ErrorKind::WrongMode, std::string(what) + " expects a " + to_string(mode) + " alphabet");
}

inline std::size_t leading_run(const Word& w, Letter s) {
  std::size_t k = 0;
  while (k < w.size() && w[k] == s) ++k;
  return k;
}

inline std::size_t trailing_run(const Word& w, Letter s) {
  std::size_t k = 0;
  while (k < w.size() && w[w.size() - 1 - k] == s) ++k;
  return k;
}

}  // namespace detail

/// ||w|| = k + m for w = a_1^k v a_1^m with v_1, v_fin != a_1; ||a_1^d|| = d.
inline std::size_t monoid_norm(const Word& w) {
  const std::size_t k = detail::leading_run(w, gen(1));
  if (k == w.size()) return k;
  return k + detail::trailing_run(w, gen(1));
}

/// Name of the first basis condition w violates, if any.
inline std::optional<std::string_view> basis_failure_monoid(const Word& w) {
  if (w.empty()) return std::nullopt;
  if (w.front() == gen(1)) return "w_1 = a_1";
  if (w.back() == gen(1)) return "w_fin = a_1";
  return std::nullopt;
}

/// w ∈ W: ε, or neither first nor last letter is a_1.
inline bool in_basis_monoid(const Word& w) { return !basis_failure_monoid(w).has_value(); }

/// Coordinates of f over {p_w : w ∈ W} plus an {l_w, r_w} certificate for the
/// difference. Words a_1^k v a_1^m are peeled from the left while k > 0 and
/// from the right otherwise; a_1^d counts as k = 1.
inline Canonicalization canonicalize_monoid(const CountingFunction& f, RewriteTrace* trace = nullptr) {
  detail::require_mode(f.alphabet(), Mode::Monoid, "canonicalize_monoid");
  const Alphabet& alphabet = f.alphabet();
  auto rule = [&](const Word& w) {
    if (w.front() == gen(1)) return peel_left(alphabet, w);
    return peel_right(alphabet, w);
  };
  return run_worklist(f, BasisKind::MonoidB, monoid_norm, in_basis_monoid, rule, trace);
}

inline bool is_bounded_monoid(const CountingFunction& f) { return canonicalize_monoid(f).base().is_zero(); }

inline bool equivalent_monoid(const CountingFunction& f, const CountingFunction& g) { return is_bounded_monoid(f - g); }

}  // namespace countfn
