#pragma once

#include <countfn/certificate.hpp>

#include <cstddef>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace countfn {

/// One rewrite rule instance: p_w = Σ replacement + Σ certificate, exactly.
struct Rewrite {
  std::vector<std::pair<Word, Rational>> replacement;
  std::vector<CertificateItem> certificate;
};

/// Result of canonicalizing a counting function: f = base + expand(certificate).
struct Canonicalization {
  CanonicalForm<CountingFunction> form;
  KernelCertificate certificate;

  const CountingFunction& base() const { return form.base; }
};

/// One processed worklist entry: the measure of the rewritten word and the
/// largest measure among non-basis words it produced (-1 if none).
struct RewriteStep {
  Word word;
  std::size_t measure;
  long long max_produced;
};

using RewriteTrace = std::vector<RewriteStep>;

/// Shared worklist loop. Always rewrites the pending non-basis word of
/// largest (measure, shortlex) key. Throws std::logic_error if a rule ever
/// produces a non-basis word whose measure is not strictly smaller, since
/// termination rests on that.
template <class Measure, class InBasis, class RuleFor>
Canonicalization run_worklist(const CountingFunction& f, BasisKind kind, Measure measure, InBasis in_basis,
                              RuleFor rule_for, RewriteTrace* trace) {
  CountingFunction::Terms current = f.terms();
  std::set<std::pair<std::size_t, Word>> pending;
  for (const auto& [w, x] : current)
    if (!in_basis(w)) pending.emplace(measure(w), w);

  KernelCertificate certificate;
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    const auto [m, w] = *last;
    pending.erase(last);
    auto found = current.find(w);
    if (found == current.end()) continue;  // cancelled meanwhile
    const Rational x = found->second;
    current.erase(found);

    Rewrite rw = rule_for(w);
    long long max_produced = -1;
    for (const auto& [u, c] : rw.replacement) {
      auto [slot, inserted] = current.try_emplace(u, x * c);
      if (!inserted) {
        slot->second += x * c;
        if (slot->second == 0) {
          current.erase(slot);
          continue;
        }
      }
      if (in_basis(u)) continue;
      const std::size_t mu = measure(u);
      if (mu >= m) throw std::logic_error("rewrite of " + format_word(w) + " did not decrease the measure");
      max_produced = std::max(max_produced, static_cast<long long>(mu));
      pending.emplace(mu, u);
    }
    for (const auto& item : rw.certificate) certificate.add(x * item.coefficient, item.kind, item.word);
    if (trace) trace->push_back({w, m, max_produced});
  }

  CountingFunction base(f.alphabet());
  for (const auto& [w, x] : current) base.add_term(w, x);
  certificate.collect();
  return {{std::move(base), kind}, std::move(certificate)};
}

/// p_{ty} = p_y − Σ_{s ∉ {t, y_1^{-1}}} p_{sy} − l_y  (no inverse exclusion in
/// monoid mode).
inline Rewrite peel_left(const Alphabet& alphabet, const Word& w) {
  const Letter t = w.front();
  const Word y = w.drop_front();
  Rewrite rw;
  rw.replacement.emplace_back(y, 1);
  for (Letter s : alphabet.letters()) {
    if (s == t) continue;
    if (alphabet.is_group() && !y.empty() && s == y.front().inverse()) continue;
    rw.replacement.emplace_back(y.prepended(s), -1);
  }
  rw.certificate.push_back({-1, RelationKind::L, y});
  return rw;
}

/// p_{yt} = p_y − Σ_{s ∉ {t, y_fin^{-1}}} p_{ys} − r_y.
inline Rewrite peel_right(const Alphabet& alphabet, const Word& w) {
  const Letter t = w.back();
  const Word y = w.drop_back();
  Rewrite rw;
  rw.replacement.emplace_back(y, 1);
  for (Letter s : alphabet.letters()) {
    if (s == t) continue;
    if (alphabet.is_group() && !y.empty() && s == y.back().inverse()) continue;
    rw.replacement.emplace_back(y.appended(s), -1);
  }
  rw.certificate.push_back({-1, RelationKind::R, y});
  return rw;
}

}  // namespace countfn
