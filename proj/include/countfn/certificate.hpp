#pragma once

#include <countfn/counting_function.hpp>

#include <map>
#include <utility>
#include <vector>

namespace countfn {

/// Spanning relations of the kernels: l_w, r_w for K(M_n) and K(F_n);
/// s_w, se_w for K_Br.
enum class RelationKind { L, R, Sym, SymExt };

inline const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::L: return "L";
    case RelationKind::R: return "R";
    case RelationKind::Sym: return "Sym";
    case RelationKind::SymExt: return "SymExt";
  }
  return "?";
}

inline CountingFunction relation(const Alphabet& alphabet, RelationKind kind, const Word& w) {
  switch (kind) {
    case RelationKind::L: return left_relation(alphabet, w);
    case RelationKind::R: return right_relation(alphabet, w);
    case RelationKind::Sym: return symmetry_relation(alphabet, w);
    case RelationKind::SymExt: return symmetrized_extension(alphabet, w);
  }
  return CountingFunction(alphabet);
}

/// Sup-norm of a single relation on its domain: |l_w|, |r_w| <= 1 and
/// |se_w| <= 2. s_w is unbounded as a counting function; it only vanishes
/// after σ_1, so callers treat Sym items separately.
inline int relation_sup_bound(RelationKind kind) {
  switch (kind) {
    case RelationKind::L:
    case RelationKind::R: return 1;
    case RelationKind::SymExt: return 2;
    case RelationKind::Sym: return 0;
  }
  return 0;
}

struct CertificateItem {
  Rational coefficient;
  RelationKind kind;
  Word word;

  friend bool operator==(const CertificateItem&, const CertificateItem&) = default;
};

/// A combination Σ c_i·rel_i of kernel relations. For the counting-function
/// canonicalizers it expands exactly to f − base.
struct KernelCertificate {
  std::vector<CertificateItem> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }

  void add(const Rational& c, RelationKind kind, const Word& w) {
    if (c != 0) items.push_back({c, kind, w});
  }

  /// Merges repeated (kind, word) items, keeping first-appearance order, and
  /// drops items that cancel.
  void collect() {
    std::map<std::pair<RelationKind, Word>, std::size_t> slot;
    std::vector<CertificateItem> merged;
    for (auto& item : items) {
      auto [it, inserted] = slot.try_emplace({item.kind, item.word}, merged.size());
      if (inserted)
        merged.push_back(std::move(item));
      else
        merged[it->second].coefficient += item.coefficient;
    }
    std::erase_if(merged, [](const CertificateItem& item) { return item.coefficient == 0; });
    items = std::move(merged);
  }

  /// Σ |c_i|·sup|rel_i|: an upper bound for the sup-norm of the expansion.
  Rational bound() const {
    Rational total = 0;
    for (const auto& item : items) total += abs(item.coefficient) * relation_sup_bound(item.kind);
    return total;
  }

  friend bool operator==(const KernelCertificate&, const KernelCertificate&) = default;
};

inline CountingFunction expand(const Alphabet& alphabet, const KernelCertificate& certificate) {
  CountingFunction out(alphabet);
  for (const auto& item : certificate.items) out += item.coefficient * relation(alphabet, item.kind, item.word);
  return out;
}

enum class BasisKind { MonoidB, GroupBbar, BrooksBBr };

/// A function whose support lies in the basis set named by `kind`.
template <class Function>
struct CanonicalForm {
  Function base;
  BasisKind kind;
};

}  // namespace countfn
