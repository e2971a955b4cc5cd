#include "parikhseq/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parikhseq/count.hpp"
#include "parikhseq/gsh.hpp"
#include "parikhseq/minors.hpp"
#include "parikhseq/parikh_matrix.hpp"
#include "parikhseq/sequence_matrix.hpp"
#include "parikhseq/verify.hpp"

namespace parikhseq::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "text";
  std::optional<std::string> alphabet;
  std::optional<std::string> file;
  std::optional<std::string> word;
  std::string pattern;
  std::string inducing;
  std::vector<std::string> subwords;
  std::vector<std::string> factors;
  std::vector<std::string> genseqs;
  std::string kind;
  bool stream = false;
  std::optional<std::size_t> max_order;
  std::string method = "auto";
  std::string rule = "merge";
  std::string expr;
  std::string expr2;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::optional<std::size_t> iters;
  std::optional<std::size_t> maxlen;
};

// Failure with a message and an exit code other than usage.
struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Command {
 public:
  Command(const Config& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

  int count();
  int matrix();
  int minor();
  int witness();
  int gsh_eval();
  int gsh_linearize();
  int gsh_equiv();
  int verify();

 private:
  const Config& cfg_;
  std::istream& in_;
  std::ostream& out_;

  bool as_json() const { return cfg_.format == "json"; }
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  std::optional<Alphabet> alphabet() const {
    if (!cfg_.alphabet) return std::nullopt;
    return Alphabet(*cfg_.alphabet);
  }

  // Positional word, else --file, else standard input; whitespace dropped.
  Word read_word() {
    std::string text;
    if (cfg_.word) {
      text = *cfg_.word;
    } else {
      std::istream* src = &in_;
      std::ifstream f;
      if (cfg_.file) {
        f.open(*cfg_.file);
        if (!f) throw ParseError("cannot open " + *cfg_.file);
        src = &f;
      }
      text.assign(std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>());
      std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
    }
    if (auto a = alphabet()) return parse_word(text, *a);
    return parse_word(text);
  }

  // Calls push(c) for every letter without buffering the whole word.
  template <typename Push>
  std::size_t stream_word(Push&& push) {
    if (cfg_.word) {
      for (char c : *cfg_.word) push(c);
      return cfg_.word->size();
    }
    std::istream* src = &in_;
    std::ifstream f;
    if (cfg_.file) {
      f.open(*cfg_.file);
      if (!f) throw ParseError("cannot open " + *cfg_.file);
      src = &f;
    }
    const auto a = alphabet();
    std::size_t n = 0;
    char buf[1 << 14];
    while (*src) {
      src->read(buf, sizeof buf);
      for (std::streamsize k = 0; k < src->gcount(); ++k) {
        const char c = buf[k];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!is_symbol(c)) throw ParseError("invalid symbol '" + std::string(1, c) + "'");
        if (a && !a->contains(c)) throw ParseError("symbol '" + std::string(1, c) + "' is not in the alphabet");
        push(c);
        ++n;
      }
    }
    return n;
  }

  int classic_or_extended(const ParikhContext& ctx);
  int sequence(const GenSeq& q, const std::string& kind);
};

std::string matrix_block_text(const std::string& title, const ExactMatrix& m) {
  std::string out = title + ":\n";
  std::istringstream lines(to_text(m));
  for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
  return out;
}

json index_list(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

int Command::count() {
  if (cfg_.subwords.empty() && cfg_.factors.empty() && cfg_.genseqs.empty())
    throw ParseError("count needs at least one of --subword, --factor, --genseq");
  const Word w = read_word();
  struct Row {
    std::string kind;
    std::string pattern;
    BigInt value;
  };
  std::vector<Row> rows;
  for (const auto& u : cfg_.subwords) rows.push_back({"subword", u, count_subword(w, parse_word(u))});
  for (const auto& u : cfg_.factors) rows.push_back({"factor", u, count_factor(w, parse_word(u))});
  for (const auto& q : cfg_.genseqs) {
    const GenSeq g = parse_genseq(q);
    rows.push_back({"genseq", g.render(), count_genseq(w, g)});
  }
  if (as_json()) {
    json counts = json::array();
    for (const auto& r : rows) counts.push_back({{"kind", r.kind}, {"pattern", r.pattern}, {"value", r.value.str()}});
    emit({{"word_length", std::to_string(w.length())}, {"counts", counts}});
  } else if (rows.size() == 1) {
    out_ << rows.front().value << '\n';
  } else {
    for (const auto& r : rows) out_ << r.kind << ' ' << r.pattern << ' ' << r.value << '\n';
  }
  return kOk;
}

int Command::classic_or_extended(const ParikhContext& ctx) {
  ExactMatrix m;
  std::size_t n = 0;
  bool checked = false;
  if (cfg_.stream) {
    std::array<std::optional<SparseMatrix>, 128> gens;
    ExactMatrix acc = ExactMatrix::identity(ctx.dim());
    ExactMatrix scratch(ctx.dim());
    n = stream_word([&](char c) {
      auto& g = gens[static_cast<unsigned char>(c)];
      if (!g) g.emplace(letter_matrix(ctx, c));
      multiply_into(acc, *g, scratch);
      std::swap(acc, scratch);
    });
    m = std::move(acc);
  } else {
    const Word w = read_word();
    n = w.length();
    m = parikh_matrix(ctx, w);
    if (!(m == parikh_matrix_direct(ctx, w))) throw Violation("generator product and direct filling disagree");
    checked = true;
  }
  if (as_json()) {
    json j = to_json(m);
    j["kind"] = ctx.is_classic() ? "classic" : "extended";
    j["inducing"] = ctx.inducing().str();
    j["alphabet"] = std::string(ctx.alphabet().symbols());
    j["word_length"] = std::to_string(n);
    j["checked_direct"] = checked;
    emit(j);
  } else {
    out_ << to_text(m);
  }
  return kOk;
}

int Command::sequence(const GenSeq& q, const std::string& kind) {
  std::optional<SeqMatrixFolder> folder;
  if (auto a = alphabet()) {
    folder.emplace(q, *a);
  } else {
    folder.emplace(q);
  }
  bool checked = false;
  std::size_t n = 0;
  if (cfg_.stream) {
    n = stream_word([&](char c) { folder->push(c); });
  } else {
    const Word w = read_word();
    n = w.length();
    folder->push(w.view());
    const auto diffs = diff_cells(seq_matrix_direct(q, w).matrix, folder->current());
    if (!diffs.empty()) throw Violation("fold and direct construction disagree at " + diffs.front().label());
    checked = true;
  }
  const SeqMatrix m = folder->result();
  if (as_json()) {
    json j = to_json(m);
    j["kind"] = kind;
    j["word_length"] = std::to_string(n);
    j["checked_direct"] = checked;
    emit(j);
  } else {
    out_ << "pattern " << q.render() << ", |w| = " << n << '\n';
    for (Block b : {Block::E, Block::F, Block::C, Block::S})
      out_ << matrix_block_text(std::string(1, block_name(b)), m.block(b));
    out_ << matrix_block_text("matrix", m.matrix);
  }
  return kOk;
}

int Command::matrix() {
  if (cfg_.kind == "classic") {
    if (!cfg_.alphabet) throw ParseError("matrix classic needs --alphabet");
    return classic_or_extended(ParikhContext::classic(Alphabet(*cfg_.alphabet)));
  }
  if (cfg_.kind == "extended") {
    if (cfg_.inducing.empty()) throw ParseError("matrix extended needs --inducing");
    const Word v = parse_word(cfg_.inducing);
    return classic_or_extended(cfg_.alphabet ? ParikhContext::induced(v, Alphabet(*cfg_.alphabet))
                                             : ParikhContext::induced(v));
  }
  if (cfg_.pattern.empty()) throw ParseError("matrix " + cfg_.kind + " needs --pattern");
  const GenSeq q = parse_genseq(cfg_.pattern);
  if (cfg_.kind == "factor" && q.factor_count() != 1) throw ParseError("a factor pattern has no bullets");
  if (q.flat_length() < 2) throw ParseError("pattern '" + q.render() + "' has length < 2; the matrix is undefined");
  return sequence(q, cfg_.kind);
}

int Command::minor() {
  if (cfg_.pattern.empty()) throw ParseError("minor needs --pattern");
  const GenSeq q = parse_genseq(cfg_.pattern);
  const Word w = read_word();
  const SpecialMinor m = special_minor(q, w);
  std::optional<bool> extraction;
  std::vector<std::size_t> idx;
  if (q.flat_length() >= 2) {
    idx = special_minor_indices(q);
    extraction = extract_special_minor(seq_matrix(q, w)) == m.matrix;
  }
  const std::size_t order = std::min(cfg_.max_order.value_or(m.matrix.dim()), m.matrix.dim());
  const MinorReport report = check_minor_nonneg(m.matrix, order);
  const bool ok = report.ok() && extraction.value_or(true);
  if (as_json()) {
    json j = to_json(m.matrix);
    j["pattern"] = q.render();
    j["word_length"] = std::to_string(w.length());
    j["indices"] = idx.empty() ? json(nullptr) : index_list(idx);
    j["extraction_agrees"] = extraction ? json(*extraction) : json(nullptr);
    json neg = json::array();
    for (const auto& e : report.negative)
      neg.push_back({{"rows", index_list(e.rows)}, {"cols", index_list(e.cols)}, {"det", e.det.str()}});
    j["minors"] = {{"max_order", std::to_string(report.max_order)},
                   {"checked", std::to_string(report.checked)},
                   {"negative", neg}};
    emit(j);
  } else {
    out_ << matrix_block_text("special minor of " + q.render(), m.matrix);
    if (extraction) {
      out_ << "submatrix at {";
      for (std::size_t k = 0; k < idx.size(); ++k) out_ << (k ? "," : "") << idx[k];
      out_ << "}: " << (*extraction ? "agrees" : "DISAGREES") << '\n';
    } else {
      out_ << "submatrix: not applicable (|Q| < 2)\n";
    }
    out_ << "minors of order <= " << report.max_order << ": " << report.checked << " checked, "
         << report.negative.size() << " negative\n";
  }
  return ok ? kOk : kViolation;
}

int Command::witness() {
  if (cfg_.pattern.empty()) throw ParseError("witness needs --pattern");
  const GenSeq q = parse_genseq(cfg_.pattern);
  const Word w = read_word();
  WitnessTrace trace;
  WitnessWord ww;
  std::string method = cfg_.method;
  if (cfg_.method == "exchange") {
    ww = witness_word_exchange(q, w, &trace);
  } else if (cfg_.method == "merge") {
    ww = witness_word_merge(q, w);
  } else {
    ww = witness_word(q, w, &trace);
    method = trace.repaired ? "merge" : "exchange";
  }
  const ExactMatrix target = special_minor(q, w).matrix;
  const ExactMatrix psi = ww.parikh_matrix();
  const bool matches = psi == target;
  if (as_json()) {
    json letters = json::array();
    for (auto l : ww.letters) letters.push_back(std::to_string(l));
    emit({{"pattern", q.render()},
          {"word_length", std::to_string(w.length())},
          {"witness", ww.render()},
          {"letters", letters},
          {"method", method},
          {"repaired", trace.repaired},
          {"sweeps", std::to_string(trace.sweeps)},
          {"exchanges", std::to_string(trace.exchanges)},
          {"matches", matches},
          {"parikh_matrix", to_json(psi)},
          {"special_minor", to_json(target)}});
  } else {
    out_ << "witness: " << (ww.letters.empty() ? std::string("(empty)") : ww.render()) << '\n';
    out_ << "method: " << method;
    if (method == "exchange") out_ << " (" << trace.sweeps << " sweeps, " << trace.exchanges << " exchanges)";
    if (trace.repaired) out_ << " (exchange result failed the adjacency check)";
    out_ << '\n';
    out_ << "parikh matrix equals special minor: " << (matches ? "yes" : "NO") << '\n';
    if (!matches) out_ << matrix_block_text("parikh matrix", psi) << matrix_block_text("special minor", target);
  }
  return matches ? kOk : kViolation;
}

int Command::gsh_eval() {
  const GshExpr e = parse_gsh(cfg_.expr);
  const Word w = read_word();
  const BigInt v = evaluate(e, w);
  if (as_json()) {
    emit({{"expr", e.render()}, {"word_length", std::to_string(w.length())}, {"value", v.str()}});
  } else {
    out_ << v << '\n';
  }
  return kOk;
}

int Command::gsh_linearize() {
  const GshExpr e = parse_gsh(cfg_.expr);
  const LinearGsh lin = linearize(e, cfg_.rule == "literal" ? ProductRule::LiteralRuns : ProductRule::MergeSchemes);
  if (as_json()) {
    emit({{"expr", e.render()}, {"rule", cfg_.rule}, {"linear", to_json(lin)}});
  } else {
    out_ << lin.render() << '\n';
  }
  return kOk;
}

// Symbols of the monomial leaves; coefficients are not letters.
void collect_letters(const GshExpr& e, std::string& out) {
  switch (e.kind()) {
    case GshExpr::Kind::Leaf:
      for (const auto& f : e.monomial().factors())
        for (char c : f)
          if (out.find(c) == std::string::npos) out.push_back(c);
      return;
    case GshExpr::Kind::Scale:
    case GshExpr::Kind::Negate: collect_letters(e.lhs(), out); return;
    case GshExpr::Kind::Sum:
    case GshExpr::Kind::Product:
      collect_letters(e.lhs(), out);
      collect_letters(e.rhs(), out);
      return;
  }
}

std::string letters_of(const GshExpr& a, const GshExpr& b) {
  std::string out;
  collect_letters(a, out);
  collect_letters(b, out);
  std::sort(out.begin(), out.end());
  return out.empty() ? "a" : out;
}

int Command::gsh_equiv() {
  const GshExpr a = parse_gsh(cfg_.expr);
  const GshExpr b = parse_gsh(cfg_.expr2);
  const bool canonical = equivalent(a, b);
  const Alphabet alpha(cfg_.alphabet.value_or(letters_of(a, b)));
  const std::size_t maxlen = cfg_.maxlen.value_or(6);
  const BoundedVerdict v = equivalent_bounded(a, b, alpha, maxlen);
  // A canonical match refuted by evaluation would contradict linearization.
  const bool contradiction = canonical && !v.equal;
  if (as_json()) {
    json bounded = {{"equal", v.equal},
                    {"alphabet", std::string(alpha.symbols())},
                    {"maxlen", std::to_string(maxlen)},
                    {"words_checked", std::to_string(v.words_checked)}};
    if (v.counterexample) {
      bounded["counterexample"] = *v.counterexample;
      bounded["lhs"] = v.lhs.str();
      bounded["rhs"] = v.rhs.str();
    }
    emit({{"lhs", a.render()}, {"rhs", b.render()}, {"canonical", canonical}, {"bounded", bounded}});
  } else {
    out_ << "canonical: " << (canonical ? "equivalent" : "not equivalent") << '\n';
    out_ << "bounded (alphabet " << alpha.symbols() << ", length <= " << maxlen << ", " << v.words_checked
         << " words): ";
    if (v.equal) {
      out_ << "equal\n";
    } else {
      out_ << "differ at \"" << *v.counterexample << "\" (" << v.lhs << " vs " << v.rhs << ")\n";
    }
  }
  return contradiction ? kViolation : kOk;
}

int Command::verify() {
  FuzzOptions o;
  o.seed = cfg_.seed;
  o.iters = cfg_.iters;
  o.maxlen = cfg_.maxlen;
  o.witness = cfg_.method == "exchange" ? WitnessMethod::Exchange
              : cfg_.method == "merge"  ? WitnessMethod::Merge
                                        : WitnessMethod::Auto;
  std::vector<std::string> names;
  if (cfg_.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(cfg_.suite);
  }
  bool all = true;
  json suites = json::array();
  for (const auto& name : names) {
    const SuiteOutcome r = run_suite(name, o);
    all = all && r.passed;
    if (as_json()) {
      suites.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"cases", std::to_string(r.cases)},
                        {"notes", r.notes},
                        {"counterexample", r.counterexample}});
    } else {
      out_ << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)\n";
      for (const auto& n : r.notes) out_ << "  " << n << '\n';
      if (!r.passed) out_ << "  counterexample: " << r.counterexample.dump() << '\n';
    }
  }
  if (as_json()) emit({{"seed", std::to_string(cfg_.seed)}, {"passed", all}, {"suites", suites}});
  return all ? kOk : kViolation;
}

void add_format(CLI::App* app, Config& cfg) {
  app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_word_source(CLI::App* app, Config& cfg) {
  app->add_option("word", cfg.word, "Input word (default: --file, then standard input)");
  app->add_option("--file", cfg.file, "Read the word from a file");
  app->add_option("--alphabet", cfg.alphabet, "Ordered alphabet, e.g. abc");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Parikh, Parikh-factor and Parikh-sequence matrices; special minors; subword histories"};
  app.name("parikhseq");
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count subword, factor or generalized subsequence occurrences");
  count->add_option("--subword", cfg.subwords, "Scattered subword u (repeatable)")->allow_extra_args(false);
  count->add_option("--factor", cfg.factors, "Factor u (repeatable)")->allow_extra_args(false);
  count->add_option("--genseq", cfg.genseqs, "Generalized subsequence q1.q2... (repeatable)")->allow_extra_args(false);
  add_word_source(count, cfg);
  add_format(count, cfg);

  auto* matrix = app.add_subcommand("matrix", "Compute a matrix image of a word");
  matrix->add_option("kind", cfg.kind, "classic | extended | factor | sequence")
      ->required()
      ->check(CLI::IsMember({"classic", "extended", "factor", "sequence"}));
  matrix->add_option("--pattern", cfg.pattern, "Pattern for factor / sequence matrices");
  matrix->add_option("--inducing", cfg.inducing, "Inducing word for the extended mapping");
  matrix->add_flag("--stream", cfg.stream, "Fold letters as they are read; skips the direct cross-check");
  add_word_source(matrix, cfg);
  add_format(matrix, cfg);

  auto* minor = app.add_subcommand("minor", "Special minor and minor nonnegativity");
  minor->add_option("--pattern", cfg.pattern, "Generalized subsequence")->required();
  minor->add_option("--max-order", cfg.max_order, "Largest minor order to check")->check(CLI::PositiveNumber);
  add_word_source(minor, cfg);
  add_format(minor, cfg);

  auto* witness = app.add_subcommand("witness", "Witness word whose Parikh matrix is the special minor");
  witness->add_option("--pattern", cfg.pattern, "Generalized subsequence")->required();
  witness->add_option("--method", cfg.method, "auto | exchange | merge")
      ->check(CLI::IsMember({"auto", "exchange", "merge"}));
  add_word_source(witness, cfg);
  add_format(witness, cfg);

  auto* gsh = app.add_subcommand("gsh", "Generalized subword histories");
  gsh->require_subcommand(1);
  auto* gsh_eval = gsh->add_subcommand("eval", "Value of an expression in a word");
  gsh_eval->add_option("expr", cfg.expr, "Expression")->required();
  add_word_source(gsh_eval, cfg);
  add_format(gsh_eval, cfg);
  auto* gsh_lin = gsh->add_subcommand("linearize", "Equivalent linear history");
  gsh_lin->add_option("expr", cfg.expr, "Expression")->required();
  gsh_lin->add_option("--rule", cfg.rule, "merge | literal")->check(CLI::IsMember({"merge", "literal"}));
  add_format(gsh_lin, cfg);
  auto* gsh_eq = gsh->add_subcommand("equiv", "Compare two expressions");
  gsh_eq->add_option("lhs", cfg.expr, "Expression")->required();
  gsh_eq->add_option("rhs", cfg.expr2, "Expression")->required();
  gsh_eq->add_option("--alphabet", cfg.alphabet, "Alphabet of the bounded check (default: letters used)");
  gsh_eq->add_option("--maxlen", cfg.maxlen, "Longest word of the bounded check (default 6)");
  add_format(gsh_eq, cfg);

  auto* verify = app.add_subcommand("verify", "Seeded property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", cfg.suite, "homomorphism | direct | entry | witness | minor | gsh | all")
      ->check(CLI::IsMember(suites));
  verify->add_option("--seed", cfg.seed, "Master seed");
  verify->add_option("--iters", cfg.iters, "Cases per suite")->check(CLI::PositiveNumber);
  verify->add_option("--maxlen", cfg.maxlen, "Word length bound")->check(CLI::PositiveNumber);
  verify->add_option("--method", cfg.method, "Witness construction: auto | exchange | merge")
      ->check(CLI::IsMember({"auto", "exchange", "merge"}));
  add_format(verify, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Command cmd(cfg, in, out);
  try {
    if (*count) return cmd.count();
    if (*matrix) return cmd.matrix();
    if (*minor) return cmd.minor();
    if (*witness) return cmd.witness();
    if (*gsh_eval) return cmd.gsh_eval();
    if (*gsh_lin) return cmd.gsh_linearize();
    if (*gsh_eq) return cmd.gsh_equiv();
    if (*verify) return cmd.verify();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Violation& e) {
    err << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace parikhseq::cli
