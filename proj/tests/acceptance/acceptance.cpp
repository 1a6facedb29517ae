// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N]

#include "support/oracles.hpp"

#include <countfn/countfn.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace countfn;
using namespace countfn::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

// ---------------------------------------------------------------------------
// 1. l_w, r_w against delta over all v up to length 12.

// Pointwise l_w(v) and r_w(v) for many w at once: one DFS over v, with every
// relation term indexed by the word it counts.
struct RelationSweep {
  struct Hit {
    std::size_t relation;
    int coefficient;
  };

  const Alphabet alphabet;
  std::vector<Word> words;            // w, in order
  std::vector<CountingFunction> rel;  // l_w for w in words, then r_w
  std::vector<int> epsilon;           // x_eps per relation
  std::vector<std::vector<Hit>> index;
  std::size_t base = 0;
  std::size_t max_term = 0;

  std::size_t key(const std::vector<int>& codes, std::size_t from, std::size_t len) const {
    std::size_t k = 0, offset = 0, power = 1;
    for (std::size_t l = 1; l < len; ++l) {
      power *= base;
      offset += power;
    }
    for (std::size_t i = 0; i < len; ++i) k = k * base + static_cast<std::size_t>(codes[from + i]);
    return offset + k;
  }

  explicit RelationSweep(Alphabet a, std::size_t max_w) : alphabet(a) {
    base = static_cast<std::size_t>(2 * alphabet.rank());
    words = enumerate_words(alphabet, max_w);
    for (const Word& w : words) rel.push_back(left_relation(alphabet, w));
    for (const Word& w : words) rel.push_back(right_relation(alphabet, w));
    max_term = max_w + 1;
    std::size_t size = 0, power = 1;
    for (std::size_t l = 0; l <= max_term; ++l) {
      size += power;
      power *= base;
    }
    index.resize(size + 1);
    epsilon.assign(rel.size(), 0);
    for (std::size_t r = 0; r < rel.size(); ++r) {
      for (const auto& [u, x] : rel[r].terms()) {
        const int c = static_cast<int>(boost::multiprecision::numerator(x));
        if (u.empty()) {
          epsilon[r] += c;
          continue;
        }
        std::vector<int> codes;
        for (Letter s : u) codes.push_back(s.code());
        index[key(codes, 0, codes.size())].push_back({r, c});
      }
    }
  }

  struct Result {
    std::size_t nodes = 0;
    std::size_t mismatches = 0;
    std::size_t nonempty_mismatches = 0;  // pairs with w != empty word
    std::string first_mismatch;
    std::vector<int> max_abs;  // per relation
  };

  Result run(std::size_t max_v) const {
    Result res;
    res.max_abs.assign(rel.size(), 0);
    const std::size_t n = words.size();
    std::vector<std::vector<int>> values(max_v + 1, std::vector<int>(rel.size(), 0));
    std::vector<int> buf;
    const auto letters = alphabet.letters();

    auto compare = [&](const std::vector<int>& vals) {
      ++res.nodes;
      for (std::size_t i = 0; i < n; ++i) {
        const Word& w = words[i];
        const std::size_t len = w.size();
        bool prefix = len <= buf.size(), suffix = len <= buf.size();
        for (std::size_t j = 0; j < len && (prefix || suffix); ++j) {
          const int c = w[j].code();
          prefix = prefix && buf[j] == c;
          suffix = suffix && buf[buf.size() - len + j] == c;
        }
        for (int side = 0; side < 2; ++side) {
          const std::size_t r = i + static_cast<std::size_t>(side) * n;
          const int v = vals[r];
          res.max_abs[r] = std::max(res.max_abs[r], std::abs(v));
          if (v != int(side == 0 ? prefix : suffix)) {
            if (len > 0) ++res.nonempty_mismatches;
            if (res.mismatches++ == 0) {
              std::vector<Letter> vv;
              for (int c : buf) vv.push_back(Letter::from_code(c));
              res.first_mismatch = std::string(side == 0 ? "l_" : "r_") + format_word(w) + "(" +
                                   format_word(Word(vv)) + ") = " + std::to_string(v);
            }
          }
        }
      }
    };

    compare(values[0]);
    auto dfs = [&](auto& self) -> void {
      if (buf.size() == max_v) return;
      for (Letter s : letters) {
        if (alphabet.is_group() && !buf.empty() && s.code() == (buf.back() ^ 1)) continue;
        buf.push_back(s.code());
        std::vector<int>& vals = values[buf.size()];
        vals = values[buf.size() - 1];
        for (std::size_t r = 0; r < rel.size(); ++r) vals[r] += epsilon[r];
        for (std::size_t len = 1; len <= std::min(buf.size(), max_term); ++len)
          for (const Hit& h : index[key(buf, buf.size() - len, len)]) vals[h.relation] += h.coefficient;
        compare(vals);
        self(self);
        buf.pop_back();
      }
    };
    dfs(dfs);
    return res;
  }
};

Outcome criterion1() {
  Outcome o;
  std::size_t nodes = 0, failing_words = 0, nonempty_mismatches = 0, nonempty_bad = 0;
  std::string failing;
  for (const Alphabet& alphabet : {Alphabet::monoid(2), Alphabet::group(2)}) {
    const RelationSweep sweep(alphabet, 4);
    // Spot-check the incremental values against the library evaluator.
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      const std::size_t r = rng() % sweep.rel.size();
      const Word v = random_word(rng, alphabet, 12);
      const Word& w = sweep.words[r % sweep.words.size()];
      const int expect = r < sweep.words.size() ? delta1(w, v) : deltafin(w, v);
      if (!w.empty()) o.check(evaluate(sweep.rel[r], v) == expect, "library evaluate disagrees with delta");
    }
    const auto res = sweep.run(12);
    nodes += res.nodes;
    nonempty_mismatches += res.nonempty_mismatches;
    std::set<std::string> bad;
    for (std::size_t r = 0; r < sweep.rel.size(); ++r) {
      const Word& w = sweep.words[r % sweep.words.size()];
      const std::string name = std::string(alphabet.is_group() ? "group " : "monoid ") +
                               (r < sweep.words.size() ? "l_" : "r_") + format_word(w);
      if (res.max_abs[r] != 1) {
        bad.insert(name + " sup " + std::to_string(res.max_abs[r]));
        if (!w.empty()) ++nonempty_bad;
      }
    }
    if (res.mismatches > 0) {
      o.check(false, std::string(alphabet.is_group() ? "group" : "monoid") + " " + res.first_mismatch +
                         " (" + std::to_string(res.mismatches) + " mismatching pairs)");
    }
    for (const auto& b : bad) {
      ++failing_words;
      if (failing.size() < 120) failing += (failing.empty() ? "" : ", ") + b;
    }
    o.check(bad.empty(), "sup != 1 for " + std::string(alphabet.is_group() ? "group" : "monoid") + " relations");
  }
  o.detail << nodes << " words v checked; 1 denotes the empty word";
  if (failing_words > 0) o.detail << "; relations with sup != 1: " << failing;
  o.detail << "; failures with nonempty w: " << nonempty_mismatches << " pointwise, " << nonempty_bad << " sup";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion2() {
  Outcome o;
  const auto g = Alphabet::group(2);
  const auto e = a2_elimination(g);
  o.check(formally_equal(e.function, expand(g, e.certificate)), "certificate does not expand to f");
  o.check(expand(g, e.certificate) == e.function, "certificate does not expand to f term by term");
  const SupNorm sup = sup_norm_estimate(e.function, 10);
  const Rational bound = e.certificate.bound();
  o.check(sup.value <= bound, "sup exceeds certificate bound");
  o.check(brute_sup(e.function, 6) == sup_norm_estimate(e.function, 6).value, "sup estimate disagrees with brute force");
  o.detail << "sup over |v| <= 10 = " << to_string(sup.value) << " at " << format_word(sup.argmax)
           << ", certificate bound " << to_string(bound);
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::size_t checked = 0, terms = 0;
  for (const Alphabet& alphabet : {Alphabet::monoid(2), Alphabet::group(2)}) {
    for (int i = 0; i < 500; ++i) {
      const auto f = random_function(rng, alphabet, 4);
      const auto c = alphabet.is_group() ? canonicalize_group(f) : canonicalize_monoid(f);
      const auto rebuilt = c.base() + expand(alphabet, c.certificate);
      o.check(rebuilt == f, to_text(f) + " is not base + certificate");
      terms += c.certificate.size();
      ++checked;
    }
  }
  const auto g = Alphabet::group(2);
  for (int i = 0; i < 100; ++i) {
    const auto F = random_brooks(rng, g, 4);
    const auto c = canonicalize_brooks(F);
    const auto expanded = expand(g, c.certificate);
    o.check(c.base() + sigma1(expanded) == F, to_text(F) + " is not base + sigma1(certificate)");
    o.check(formally_equal(expanded, lift(F) - lift(c.base())), to_text(F) + " certificate is not lift(F - base)");
    terms += c.certificate.size();
    ++checked;
  }
  o.detail << checked << " inputs, " << terms << " certificate items";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  const auto m = Alphabet::monoid(2);
  const auto g = Alphabet::group(2);
  std::vector<Word> W, Wbar, Wbr;
  for (const Word& w : enumerate_words(m, 3))
    if (in_basis_monoid(w)) W.push_back(w);
  for (const Word& w : enumerate_words(g, 3)) {
    if (in_basis_group(w)) Wbar.push_back(w);
    if (in_basis_brooks(w)) Wbr.push_back(w);
  }

  for (const Word& w : W) {
    const auto c = canonicalize_monoid(CountingFunction::elementary(m, w));
    o.check(c.base() == CountingFunction::elementary(m, w) && c.certificate.empty(), "monoid " + format_word(w) + " moved");
  }
  for (const Word& w : Wbar) {
    const auto c = canonicalize_group(CountingFunction::elementary(g, w));
    o.check(c.base() == CountingFunction::elementary(g, w) && c.certificate.empty(), "group " + format_word(w) + " moved");
  }
  for (const Word& w : Wbr) {
    const auto c = canonicalize_brooks(BrooksFunction::phi(g, w));
    o.check(c.base() == BrooksFunction::phi(g, w) && c.certificate.empty(), "brooks " + format_word(w) + " moved");
  }

  auto pick = [&](const std::vector<Word>& pool) {
    std::vector<Word> chosen;
    const std::size_t n = 1 + rng() % 5;
    while (chosen.size() < n) {
      const Word& w = pool[rng() % pool.size()];
      if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) chosen.push_back(w);
    }
    return chosen;
  };

  std::size_t combos = 0, exact_slopes = 0;
  for (int i = 0; i < 200; ++i) {
    CountingFunction f(m);
    for (const Word& w : pick(W)) f.add_term(w, random_rational(rng));
    o.check(canonicalize_monoid(f).base() == f, "monoid combination not canonical");
    try {
      const auto fam = witness(f, WitnessMode::Monoid);
      const Rational x_eps = f.coefficient(Word{});
      Rational predicted = x_eps;
      if (x_eps == 0) {
        for (const auto& [w, x] : f.terms()) {
          predicted = x;
          break;
        }
      }
      o.check(fam.slope == predicted, "monoid slope " + to_string(fam.slope) + " != " + to_string(predicted) + " for " + to_text(f));
      ++exact_slopes;
    } catch (const Error& e) {
      o.check(false, "no witness for " + to_text(f));
    }
    ++combos;
  }
  for (int i = 0; i < 200; ++i) {
    CountingFunction f(g);
    for (const Word& w : pick(Wbar)) f.add_term(w, random_rational(rng));
    o.check(canonicalize_group(f).base() == f, "group combination not canonical");
    try {
      const auto fam = witness(f, WitnessMode::Group);
      const Rational step = naive_evaluate(f, family_member(g, fam, 31)) - naive_evaluate(f, family_member(g, fam, 30));
      o.check(fam.slope != 0 && step == fam.slope, "group slope not reproduced for " + to_text(f));
    } catch (const Error& e) {
      o.check(false, "no witness for " + to_text(f));
    }
    ++combos;
  }
  for (int i = 0; i < 200; ++i) {
    BrooksFunction F(g);
    for (const Word& w : pick(Wbr)) F.add_phi(w, random_rational(rng));
    o.check(canonicalize_brooks(F).base() == F, "brooks combination not canonical");
    try {
      const auto fam = witness(F);
      const auto values = brooks_to_counting(F);
      const Rational step = naive_evaluate(values, family_member(g, fam, 31)) - naive_evaluate(values, family_member(g, fam, 30));
      o.check(fam.slope != 0 && step == fam.slope, "brooks slope not reproduced for " + to_text(F));
    } catch (const Error& e) {
      o.check(false, "no witness for " + to_text(F));
    }
    ++combos;
  }
  o.detail << W.size() << "/" << Wbar.size() << "/" << Wbr.size() << " basis words fixed; " << combos
           << " combinations with witnesses, " << exact_slopes << " monoid slopes equal to the predicted coefficient";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  const auto g = Alphabet::group(2);
  o.check(!in_basis_group(Word{gen(2)}), "a_2 is in the group basis");
  o.check(in_basis_group(Word{inv(1)}), "a_1^-1 is not in the group basis");
  const auto pb = CountingFunction::elementary(g, Word{gen(2)});
  const auto c = canonicalize_group(pb);
  const auto expected = parse_counting("-p[B] + p[Ab] + p[AB] + p[ba] + p[bb] + p[Ba] + p[BB]", g);
  o.check(c.base() == expected, "canonical form of p[b] is " + to_text(c.base()));
  o.check(c.base() + expand(g, c.certificate) == pb, "certificate is not exact");
  const SupNorm sup = sup_norm_estimate(pb - c.base(), 10);
  o.check(sup.value <= c.certificate.bound(), "difference exceeds certificate bound");
  o.detail << "p[b] ~ " << to_text(c.base()) << "; sup |difference| over |v| <= 10 = " << to_string(sup.value)
           << " <= " << to_string(c.certificate.bound());
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  const auto m = Alphabet::monoid(2);
  const auto g = Alphabet::group(2);
  std::size_t bounded = 0, unbounded = 0;

  auto judge = [&](const CountingFunction& values, bool base_zero, const Rational& bound,
                   const std::function<WitnessFamily()>& find, std::size_t sup_len, const std::string& name) {
    bool bounded_ok = false;
    if (base_zero) bounded_ok = sup_norm_estimate(values, sup_len).value <= bound;
    bool witness_ok = false;
    try {
      const WitnessFamily fam = find();
      witness_ok = fam.slope != 0;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoWitnessFound) throw;
    }
    o.check(bounded_ok != witness_ok, name + ": bounded " + std::to_string(bounded_ok) + ", witness " + std::to_string(witness_ok));
    (bounded_ok ? bounded : unbounded) += 1;
  };

  for (int i = 0; i < 300; ++i) {
    const int mode = i % 3;
    const int shape = (i / 3) % 3;  // 0 generic, 1 kernel element, 2 basis word plus kernel element
    if (mode < 2) {
      const Alphabet& a = mode == 0 ? m : g;
      CountingFunction f = shape == 0 ? random_function(rng, a, 3) : random_kernel_element(rng, a, 2);
      if (shape == 2) f += random_function(rng, a, 3, 1);
      const auto c = mode == 0 ? canonicalize_monoid(f) : canonicalize_group(f);
      const WitnessMode wm = mode == 0 ? WitnessMode::Monoid : WitnessMode::Group;
      const auto base = c.base();
      judge(f, base.is_zero(), c.certificate.bound(),
            [&] {
              if (!base.is_zero()) return witness(base, wm);
              return witness(f, wm);
            },
            mode == 0 ? 12 : 10, to_text(f));
    } else {
      BrooksFunction F(g);
      if (shape != 0) {
        for (int j = 0; j < 2; ++j) F += random_rational(rng) * sigma1(symmetrized_extension(g, random_word(rng, g, 2, 1)));
      }
      if (shape != 1) F += random_brooks(rng, g, 3);
      const auto c = canonicalize_brooks(F);
      const auto base = c.base();
      judge(brooks_to_counting(F), base.is_zero(), brooks_certificate_bound(c.certificate),
            [&] { return base.is_zero() ? witness(F) : witness(base); }, 10, to_text(F));
    }
  }
  o.detail << bounded << " bounded with sup <= certificate bound, " << unbounded << " with a growing witness";
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  const auto g = Alphabet::group(2);
  std::size_t n = 0;
  for (const Word& w : enumerate_words(g, 5)) {
    if (w.empty()) continue;
    ++n;
    const auto phi = BrooksFunction::phi(g, w);
    const auto phi_inv = BrooksFunction::phi(g, inverse(w));
    o.check(phi_inv == -1 * phi, "phi_" + format_word(inverse(w)) + " != -phi_" + format_word(w));
    o.check(brooks_to_counting(phi_inv) == -brooks_to_counting(phi), "expansion of phi_w^-1 is not -phi_w");
    o.check(sigma1(symmetry_relation(g, w)).is_zero(), "sigma1(s_" + format_word(w) + ") != 0");
  }
  Rational worst = 0;
  for (const Word& w : enumerate_words(g, 3)) {
    if (w.empty()) continue;
    const auto se = symmetrized_extension(g, w);
    o.check(canonicalize_brooks(sigma1(se)).base().is_zero(), "sigma1(se_" + format_word(w) + ") not in the kernel");
    const Rational sup = sup_norm_estimate(se, 10).value;
    worst = std::max(worst, sup);
    o.check(sup <= 2, "sup |se_" + format_word(w) + "| = " + to_string(sup));
  }
  o.detail << n << " words |w| <= 5; max sup |se_w| over |v| <= 10 = " << to_string(worst);
  return o;
}

// ---------------------------------------------------------------------------

Outcome criterion8() {
  Outcome o;
  std::size_t n = 0;
  for_each_word(Alphabet::group(2), 8, [&](std::span<const Letter> letters) {
    const Word w(std::vector<Letter>(letters.begin(), letters.end()));
    const DefectProfile d = defect(w);
    const BruteDefect b = brute_force_defect(w);
    o.check(d.p_norm() == b.prefix && d.p_prime_norm() == b.suffix, "defect of " + format_word(w));
    ++n;
  });
  o.detail << n << " reduced words";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "extension relations equal delta, sup exactly 1 (|w| <= 4, |v| <= 12)", 10, criterion1},
    {2, "a2 elimination is bounded by its exact certificate", 5, criterion2},
    {3, "certificates are exact", 120, criterion3},
    {4, "basis words are fixed and combinations have witnesses", 120, criterion4},
    {5, "group basis excludes a_2 and includes a_1^-1", 30, criterion5},
    {6, "bounded or witnessed, never both", 60, criterion6},
    {7, "Brooks identities", 60, criterion7},
    {8, "greedy defect equals brute force (|w| <= 8)", 30, criterion8},
};

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > c.limit_seconds) o.check(false, "runtime over " + std::to_string(c.limit_seconds) + " s");
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail.str()
            << "; " << timing << "]" << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const Criterion& c : kCriteria)
    if (only == 0 || only == c.id) all = run_one(c) && all;
  return all ? 0 : 1;
}
