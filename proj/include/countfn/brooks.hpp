#pragma once

#include <countfn/canon_group.hpp>

#include <optional>
#include <string_view>

namespace countfn {

/// The length-lex smaller of w and w^{-1}.
inline Word representative(const Word& w) {
  Word w_inv = inverse(w);
  return w_inv < w ? w_inv : w;
}

/// An element of Br(F_n): Σ x_w φ_w with φ_w = p_w − p_{w^{-1}}. Keys are
/// always representatives; φ_{w^{-1}} = −φ_w is folded into the sign.
class BrooksFunction {
 public:
  using Terms = std::map<Word, Rational>;

  explicit BrooksFunction(Alphabet alphabet) : alphabet_(alphabet) {
    detail::require_mode(alphabet, Mode::Group, "BrooksFunction");
  }

  static BrooksFunction phi(const Alphabet& alphabet, const Word& w, const Rational& coefficient = 1) {
    BrooksFunction f(alphabet);
    f.add_phi(w, coefficient);
    return f;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of φ_w, for either orientation of w.
  Rational coefficient(const Word& w) const {
    const Word key = representative(w);
    auto it = terms_.find(key);
    if (it == terms_.end()) return 0;
    return key == w ? it->second : Rational(-it->second);
  }

  void add_phi(const Word& w, const Rational& c) {
    if (w.empty()) throw Error(ErrorKind::PhiEpsilon, "phi of the empty word is identically zero");
    validate(alphabet_, w);
    if (c == 0) return;
    const Word key = representative(w);
    const Rational signed_c = key == w ? c : Rational(-c);
    auto [it, inserted] = terms_.try_emplace(key, signed_c);
    if (!inserted) {
      it->second += signed_c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BrooksFunction& operator+=(const BrooksFunction& g) {
    for (const auto& [w, c] : g.terms_) add_phi(w, c);
    return *this;
  }
  BrooksFunction& operator-=(const BrooksFunction& g) {
    for (const auto& [w, c] : g.terms_) add_phi(w, -c);
    return *this;
  }
  BrooksFunction& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [w, x] : terms_) x *= c;
    return *this;
  }

  friend BrooksFunction operator+(BrooksFunction f, const BrooksFunction& g) { return f += g; }
  friend BrooksFunction operator-(BrooksFunction f, const BrooksFunction& g) { return f -= g; }
  friend BrooksFunction operator*(const Rational& c, BrooksFunction f) { return f *= c; }

  friend bool operator==(const BrooksFunction&, const BrooksFunction&) = default;

 private:
  Alphabet alphabet_;
  Terms terms_;
};

/// W_Br' = W̄ ∪ {a_1, a_2} \ {ε}.
inline bool in_brooks_prime(const Word& w) {
  return !w.empty() && (in_basis_group(w) || w == Word{gen(1)} || w == Word{gen(2)});
}

/// Name of the condition that keeps w out of W_Br, if any. W_Br keeps the
/// representative when both w and w^{-1} lie in W_Br', otherwise the member
/// that does.
inline std::optional<std::string_view> basis_failure_brooks(const Word& w) {
  if (w.empty()) return "w = epsilon";
  if (!in_brooks_prime(w)) return "w not in W_Br'";
  if (in_brooks_prime(inverse(w)) && representative(w) != w) return "w^-1 is the chosen representative";
  return std::nullopt;
}

inline bool in_basis_brooks(const Word& w) { return !basis_failure_brooks(w).has_value(); }

/// Whether a stored (representative) key is a canonical coordinate, i.e. its
/// class {w, w^{-1}} meets W_Br.
inline bool brooks_key_in_basis(const Word& key) { return in_basis_brooks(key) || in_basis_brooks(inverse(key)); }

/// σ_1: p_w ↦ φ_w, with p_ε ↦ 0.
inline BrooksFunction sigma1(const CountingFunction& f) {
  BrooksFunction out(f.alphabet());
  for (const auto& [w, x] : f.terms())
    if (!w.empty()) out.add_phi(w, x);
  return out;
}

/// Σ x_w (p_w − p_{w^{-1}}); its values are the values of F.
inline CountingFunction brooks_to_counting(const BrooksFunction& F) {
  CountingFunction out(F.alphabet());
  for (const auto& [w, x] : F.terms()) {
    out.add_term(w, x);
    out.add_term(inverse(w), -x);
  }
  return out;
}

/// Σ x_w p_w over the stored keys: the preimage of F under σ_1 used by the
/// certificates.
inline CountingFunction lift(const BrooksFunction& F) {
  CountingFunction out(F.alphabet());
  for (const auto& [w, x] : F.terms()) out.add_term(w, x);
  return out;
}

inline Rational evaluate(const BrooksFunction& F, const Word& w) { return evaluate(brooks_to_counting(F), w); }

/// Result of canonicalize_brooks. The certificate items are Sym / SymExt and
/// expand to lift(F) − lift(base) in non-empty-word coordinates; applying
/// σ_1 to that expansion gives F − base.
struct BrooksCanonicalization {
  CanonicalForm<BrooksFunction> form;
  KernelCertificate certificate;

  const BrooksFunction& base() const { return form.base; }
};

/// Upper bound for sup|F − base| from a Brooks certificate: each SymExt item
/// contributes 2·se_w to the function values, and |se_w| <= 2.
inline Rational brooks_certificate_bound(const KernelCertificate& certificate) { return 2 * certificate.bound(); }

/// Terms already on a basis key are kept. The rest, R, is canonicalized as
/// lift(R) = Σ x_w p_w in C(F_n) and mapped through σ_1. With
/// h = base_h + Σ c l_v + Σ c' r_u, inversion gives
///   h − h^{-1} = (base_h − base_h^{-1}) + Σ c se_v − Σ c' se_{u^{-1}},
/// and p_w = (φ_w + s_w)/2 turns that into the Sym/SymExt certificate. l_ε
/// and r_ε vanish identically and are dropped.
inline BrooksCanonicalization canonicalize_brooks(const BrooksFunction& F) {
  BrooksFunction kept(F.alphabet());
  BrooksFunction rest(F.alphabet());
  for (const auto& [w, x] : F.terms()) (brooks_key_in_basis(w) ? kept : rest).add_phi(w, x);

  const Canonicalization group = canonicalize_group(lift(rest));
  BrooksFunction base = sigma1(group.base());

  KernelCertificate certificate;
  const Rational half(1, 2);
  for (const auto& item : group.certificate.items) {
    if (item.word.empty()) continue;
    if (item.kind == RelationKind::L)
      certificate.add(half * item.coefficient, RelationKind::SymExt, item.word);
    else
      certificate.add(-half * item.coefficient, RelationKind::SymExt, inverse(item.word));
  }
  for (const auto& [w, x] : rest.terms()) certificate.add(half * x, RelationKind::Sym, w);
  for (const auto& [w, x] : base.terms()) certificate.add(-half * x, RelationKind::Sym, w);
  certificate.collect();
  base += kept;
  return {{std::move(base), BasisKind::BrooksBBr}, std::move(certificate)};
}

inline bool is_bounded_brooks(const BrooksFunction& F) { return canonicalize_brooks(F).base().is_zero(); }

inline bool equivalent_brooks(const BrooksFunction& F, const BrooksFunction& G) { return is_bounded_brooks(F - G); }

}  // namespace countfn
