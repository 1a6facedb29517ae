#pragma once

#include <countfn/brooks.hpp>
#include <countfn/canon_group.hpp>
#include <countfn/canon_monoid.hpp>
#include <countfn/oracle.hpp>
#include <countfn/text.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace countfn::cli {

enum class QueryMode { Monoid, Group, Brooks };
enum class Command { Eval, Canon, Equiv, Kernel, Witness, Defect, Basis };
enum class OutputFormat { Text, Json };

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kDefaultMaxLen = 10;
/// Enumerations for the empirical sup-norm are cut to this many words.
inline constexpr double kEnumerationBudget = 2e6;

struct Query {
  QueryMode mode = QueryMode::Monoid;
  int rank = 2;
  Command command = Command::Canon;
  std::vector<std::string> expressions;
  std::size_t max_len = kDefaultMaxLen;
  std::size_t steps = 50;
  OutputFormat format = OutputFormat::Text;
};

/// Exit codes: 0 success, 1 a valid "not equivalent" / "not bounded"
/// answer, 2 an input error (message in `err`).
struct Report {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::optional<QueryMode> parse_mode(std::string_view s) {
  if (s == "monoid") return QueryMode::Monoid;
  if (s == "group") return QueryMode::Group;
  if (s == "brooks") return QueryMode::Brooks;
  return std::nullopt;
}

inline std::optional<Command> parse_command(std::string_view s) {
  if (s == "eval") return Command::Eval;
  if (s == "canon") return Command::Canon;
  if (s == "equiv") return Command::Equiv;
  if (s == "kernel") return Command::Kernel;
  if (s == "witness") return Command::Witness;
  if (s == "defect") return Command::Defect;
  if (s == "basis") return Command::Basis;
  return std::nullopt;
}

using countfn::to_string;

inline const char* to_string(QueryMode m) {
  switch (m) {
    case QueryMode::Monoid: return "monoid";
    case QueryMode::Group: return "group";
    case QueryMode::Brooks: return "brooks";
  }
  return "?";
}

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Canon: return "canon";
    case Command::Equiv: return "equiv";
    case Command::Kernel: return "kernel";
    case Command::Witness: return "witness";
    case Command::Defect: return "defect";
    case Command::Basis: return "basis";
  }
  return "?";
}

/// Default enumeration depth: COUNTFN_MAXLEN if set and valid, else 10.
inline std::size_t default_max_len() {
  if (const char* env = std::getenv("COUNTFN_MAXLEN")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultMaxLen;
}

namespace detail {

using nlohmann::json;

inline std::string word_text(const Word& w) { return w.empty() ? "" : format_word(w); }

/// Either kind of function the CLI handles, with mode-specific dispatch.
struct Subject {
  std::optional<CountingFunction> counting;
  std::optional<BrooksFunction> brooks;
};

struct Outcome {
  json result = json::object();
  std::vector<std::string> lines;
  const KernelCertificate* certificate = nullptr;
  std::optional<WitnessFamily> witness;
  int exit_code = 0;
};

class Runner {
 public:
  explicit Runner(const Query& q)
      : q_(q), alphabet_(q.rank, q.mode == QueryMode::Monoid ? Mode::Monoid : Mode::Group) {}

  Report run() {
    require_arity();
    Outcome o;
    switch (q_.command) {
      case Command::Eval: eval(o); break;
      case Command::Canon: canon(o); break;
      case Command::Equiv: equiv(o); break;
      case Command::Kernel: kernel(o); break;
      case Command::Witness: witness_cmd(o); break;
      case Command::Defect: defect_cmd(o); break;
      case Command::Basis: basis(o); break;
    }
    return render(o);
  }

 private:
  void require_arity() const {
    const std::size_t want = (q_.command == Command::Eval || q_.command == Command::Equiv) ? 2 : 1;
    if (q_.expressions.size() != want)
      throw Error(ErrorKind::SyntaxError, std::string(to_string(q_.command)) + " takes " + std::to_string(want) +
                                              " argument(s), got " + std::to_string(q_.expressions.size()));
  }

  Subject parse(const std::string& text) const {
    Subject s;
    if (q_.mode == QueryMode::Brooks)
      s.brooks = parse_brooks(text, alphabet_);
    else
      s.counting = parse_counting(text, alphabet_);
    return s;
  }

  std::string text(const Subject& s) const { return s.brooks ? to_text(*s.brooks) : to_text(*s.counting); }

  struct Canon {
    Subject base;
    KernelCertificate certificate;
    Rational bound;
  };

  Canon canonicalize(const Subject& s) const {
    if (s.brooks) {
      auto c = canonicalize_brooks(*s.brooks);
      Rational bound = brooks_certificate_bound(c.certificate);
      return {{std::nullopt, std::move(c.form.base)}, std::move(c.certificate), bound};
    }
    auto c = q_.mode == QueryMode::Monoid ? canonicalize_monoid(*s.counting) : canonicalize_group(*s.counting);
    Rational bound = c.certificate.bound();
    return {{std::move(c.form.base), std::nullopt}, std::move(c.certificate), bound};
  }

  static bool is_zero(const Subject& s) { return s.brooks ? s.brooks->is_zero() : s.counting->is_zero(); }

  static Subject difference(const Subject& f, const Subject& g) {
    if (f.brooks) return {std::nullopt, *f.brooks - *g.brooks};
    return {*f.counting - *g.counting, std::nullopt};
  }

  CountingFunction values_of(const Subject& s) const { return s.brooks ? brooks_to_counting(*s.brooks) : *s.counting; }

  WitnessFamily find_witness(const Subject& base) const {
    if (base.brooks) return countfn::witness(*base.brooks, q_.steps);
    return countfn::witness(*base.counting, q_.mode == QueryMode::Monoid ? WitnessMode::Monoid : WitnessMode::Group,
                            q_.steps);
  }

  /// Largest length <= max_len whose enumeration stays within budget.
  std::size_t effective_max_len() const {
    const double branch = alphabet_.is_group() ? 2.0 * alphabet_.rank() - 1 : alphabet_.rank();
    double total = 1, layer = alphabet_.letter_count();
    std::size_t len = 0;
    while (len < q_.max_len && total + layer <= kEnumerationBudget) {
      total += layer;
      layer *= branch;
      ++len;
    }
    return len;
  }

  void report_bounded(Outcome& o, const Subject& f, const Canon& c) const {
    const std::size_t len = effective_max_len();
    const SupNorm sup = sup_norm_estimate(values_of(f), len);
    o.result["sup_estimate"] = to_string(sup.value);
    o.result["sup_argmax"] = word_text(sup.argmax);
    o.result["sup_max_len"] = len;
    o.result["certificate_bound"] = to_string(c.bound);
    o.lines.push_back("sup |f| over words of length <= " + std::to_string(len) + ": " + to_string(sup.value) +
                      " at " + format_word(sup.argmax));
    o.lines.push_back("certificate bound: " + to_string(c.bound));
  }

  void eval(Outcome& o) {
    const Subject f = parse(q_.expressions[0]);
    const Word w = parse_word(q_.expressions[1], alphabet_);
    const Rational v = evaluate(values_of(f), w);
    o.result = {{"value", to_string(v)}, {"word", word_text(w)}};
    o.lines.push_back("value: " + to_string(v));
  }

  void canon(Outcome& o) {
    const Subject f = parse(q_.expressions[0]);
    canon_ = canonicalize(f);
    json terms = json::array();
    if (canon_->base.brooks) {
      for (const auto& [w, c] : canon_->base.brooks->terms()) terms.push_back({{"coef", to_string(c)}, {"word", word_text(w)}});
    } else {
      for (const auto& [w, c] : canon_->base.counting->terms()) terms.push_back({{"coef", to_string(c)}, {"word", word_text(w)}});
    }
    o.result = {{"canonical", text(canon_->base)}, {"terms", terms}, {"certificate_bound", to_string(canon_->bound)}};
    o.lines.push_back("canonical: " + text(canon_->base));
    o.certificate = &canon_->certificate;
  }

  void equiv(Outcome& o) {
    const Subject f = parse(q_.expressions[0]);
    const Subject g = parse(q_.expressions[1]);
    const Subject d = difference(f, g);
    const bool exact = d.brooks ? d.brooks->is_zero() : expand_epsilon(*d.counting).is_zero();
    if (exact) {
      o.result = {{"equivalent", true}, {"exact", true}};
      o.lines.push_back("equivalent: true (exact equality)");
      o.certificate = &no_certificate_;
      return;
    }
    canon_ = canonicalize(d);
    if (is_zero(canon_->base)) {
      o.result = {{"equivalent", true}, {"exact", false}};
      o.lines.push_back("equivalent: true");
      report_bounded(o, d, *canon_);
      o.certificate = &canon_->certificate;
      return;
    }
    o.result = {{"equivalent", false}, {"exact", false}, {"difference_canonical", text(canon_->base)}};
    o.lines.push_back("equivalent: false");
    o.lines.push_back("canonical difference: " + text(canon_->base));
    o.witness = find_witness(canon_->base);
    o.exit_code = 1;
  }

  void kernel(Outcome& o) {
    const Subject f = parse(q_.expressions[0]);
    canon_ = canonicalize(f);
    if (is_zero(canon_->base)) {
      o.result = {{"bounded", true}};
      o.lines.push_back("bounded: true");
      report_bounded(o, f, *canon_);
      o.certificate = &canon_->certificate;
      return;
    }
    o.result = {{"bounded", false}, {"canonical", text(canon_->base)}};
    o.lines.push_back("bounded: false");
    o.lines.push_back("canonical: " + text(canon_->base));
    o.witness = find_witness(canon_->base);
    o.exit_code = 1;
  }

  void witness_cmd(Outcome& o) {
    const Subject f = parse(q_.expressions[0]);
    canon_ = canonicalize(f);
    if (is_zero(canon_->base)) {
      o.result = {{"bounded", true}};
      o.lines.push_back("bounded: true (no witness family exists)");
      o.exit_code = 1;
      return;
    }
    o.result = {{"bounded", false}, {"canonical", text(canon_->base)}};
    o.witness = find_witness(canon_->base);
  }

  void defect_cmd(Outcome& o) {
    const Word w = parse_word(q_.expressions[0], alphabet_);
    if (!alphabet_.is_group()) {
      const std::size_t norm = monoid_norm(w);
      o.result = {{"word", word_text(w)}, {"norm", norm}};
      o.lines.push_back("norm: " + std::to_string(norm));
      return;
    }
    const DefectProfile d = defect(w);
    o.result = {{"word", word_text(w)}, {"k", d.k}, {"m", d.m}, {"k_prime", d.k_prime}, {"m_prime", d.m_prime},
                {"p_norm", d.p_norm()}, {"p_prime_norm", d.p_prime_norm()}, {"defect", d.defect()}};
    std::ostringstream line;
    line << "defect: " << d.defect() << " (k=" << d.k << ", m=" << d.m << ", k'=" << d.k_prime
         << ", m'=" << d.m_prime << ")";
    o.lines.push_back(line.str());
  }

  void basis(Outcome& o) {
    const Word w = parse_word(q_.expressions[0], alphabet_);
    std::optional<std::string_view> failure;
    switch (q_.mode) {
      case QueryMode::Monoid: failure = basis_failure_monoid(w); break;
      case QueryMode::Group: failure = basis_failure_group(w); break;
      case QueryMode::Brooks: failure = basis_failure_brooks(w); break;
    }
    o.result = {{"word", word_text(w)}, {"member", !failure.has_value()}};
    o.result["failed_condition"] = failure ? json(std::string(*failure)) : json(nullptr);
    o.lines.push_back(std::string("member: ") + (failure ? "false" : "true"));
    if (failure) o.lines.push_back("failed condition: " + std::string(*failure));
  }

  Report render(const Outcome& o) const {
    Report r;
    r.exit_code = o.exit_code;
    if (q_.format == OutputFormat::Json) {
      json certificate = json::array();
      if (o.certificate)
        for (const auto& item : o.certificate->items)
          certificate.push_back(
              {{"coef", to_string(item.coefficient)}, {"kind", to_string(item.kind)}, {"word", word_text(item.word)}});
      json witness = nullptr;
      if (o.witness)
        witness = {{"prefix", word_text(o.witness->prefix)}, {"period", word_text(o.witness->period)},
                   {"slope", to_string(o.witness->slope)}, {"construction", to_string(o.witness->construction)},
                   {"tested_range", o.witness->tested_range}};
      json doc = {{"schema", kSchemaVersion}, {"mode", to_string(q_.mode)}, {"rank", q_.rank},
                  {"command", to_string(q_.command)}, {"result", o.result}, {"certificate", certificate},
                  {"witness", witness}};
      r.out = doc.dump(2) + "\n";
      return r;
    }
    std::string out;
    for (const auto& line : o.lines) out += line + "\n";
    if (o.certificate) {
      if (o.certificate->empty()) {
        out += "certificate: empty\n";
      } else {
        out += "certificate:\n";
        for (const auto& item : o.certificate->items)
          out += "  " + to_string(item.coefficient) + " * " + to_string(item.kind) + "[" + word_text(item.word) + "]\n";
      }
    }
    if (o.witness) {
      out += "witness: (" + word_text(o.witness->prefix) + ")(" + word_text(o.witness->period) + ")^k, slope " +
             to_string(o.witness->slope) + ", checked for k = 1.." + std::to_string(2 * o.witness->tested_range) +
             " [" + to_string(o.witness->construction) + "]\n";
    }
    r.out = out;
    return r;
  }

  const Query& q_;
  Alphabet alphabet_;
  std::optional<Canon> canon_;
  KernelCertificate no_certificate_;
};

}  // namespace detail

/// Executes one query. Library errors become exit code 2; a NoWitnessFound
/// is an internal failure and is reported the same way, never swallowed.
inline Report run(const Query& query) {
  try {
    return detail::Runner(query).run();
  } catch (const Error& e) {
    Report r;
    r.exit_code = 2;
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  }
}

}  // namespace countfn::cli
