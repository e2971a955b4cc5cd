#include "parikhseq/verify.hpp"

#include <functional>
#include <stdexcept>

#include "parikhseq/count.hpp"
#include "parikhseq/fuzz.hpp"
#include "parikhseq/gsh.hpp"
#include "parikhseq/minors.hpp"
#include "parikhseq/parikh_matrix.hpp"
#include "parikhseq/sequence_matrix.hpp"

namespace parikhseq::cli {

namespace {

nlohmann::json cell_labels(const ExactMatrix& expected, const ExactMatrix& actual) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : diff_cells(expected, actual))
    out.push_back({{"cell", d.label()}, {"expected", d.expected.str()}, {"actual", d.actual.str()}});
  return out;
}

struct Iteration {
  std::size_t index;
  CaseRng rng;
};

// Runs `body` for each case until it reports a counterexample.
SuiteOutcome drive(const std::string& name, const FuzzOptions& o, std::size_t default_iters,
                   const std::function<nlohmann::json(Iteration&)>& body) {
  SuiteOutcome out;
  out.name = name;
  const std::size_t iters = o.iters.value_or(default_iters);
  for (std::size_t i = 0; i < iters; ++i) {
    Iteration it{i, CaseRng(case_seed(o.seed, i))};
    ++out.cases;
    nlohmann::json cx = body(it);
    if (!cx.is_null()) {
      cx["case"] = std::to_string(i);
      out.passed = false;
      out.counterexample = std::move(cx);
      return out;
    }
  }
  return out;
}

SuiteOutcome homomorphism(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(20);
  return drive("homomorphism", o, 1000, [&](Iteration& it) -> nlohmann::json {
    const std::string alpha = it.rng.alphabet(3);
    const GenSeq q = it.rng.pattern(alpha, 3, 3, 2);
    std::string w1 = it.rng.word_up_to(alpha, maxlen);
    std::string w2 = it.rng.word_up_to(alpha, maxlen);
    const EntrySpec spec(q);
    auto fails = [&](const std::string& a, const std::string& b) {
      return !(seq_matrix_direct(spec, Word(a)).matrix * seq_matrix_direct(spec, Word(b)).matrix ==
               seq_matrix_direct(spec, Word(a + b)).matrix);
    };
    if (!fails(w1, w2)) return nullptr;
    w1 = shrink_word(w1, [&](const std::string& s) { return fails(s, w2); });
    w2 = shrink_word(w2, [&](const std::string& s) { return fails(w1, s); });
    return {{"pattern", q.render()},
            {"w1", w1},
            {"w2", w2},
            {"cells", cell_labels(seq_matrix_direct(spec, Word(w1 + w2)).matrix,
                                  seq_matrix_direct(spec, Word(w1)).matrix * seq_matrix_direct(spec, Word(w2)).matrix)}};
  });
}

SuiteOutcome direct(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(20);
  return drive("direct", o, 1000, [&](Iteration& it) -> nlohmann::json {
    const std::string alpha = it.rng.alphabet(3);
    const GenSeq q = it.rng.pattern(alpha, 3, 3, 2);
    std::string w = it.rng.word_up_to(alpha, maxlen);
    auto fails = [&](const std::string& s) {
      return !(seq_matrix(q, Word(s)).matrix == seq_matrix_direct(q, Word(s)).matrix);
    };
    if (!fails(w)) return nullptr;
    w = shrink_word(w, fails);
    return {{"pattern", q.render()},
            {"word", w},
            {"cells", cell_labels(seq_matrix_direct(q, Word(w)).matrix, seq_matrix(q, Word(w)).matrix)}};
  });
}

// Entries of a Parikh matrix under inducing word v against subword counts.
std::optional<std::string> parikh_entry_mismatch(const ParikhContext& ctx, const std::string& w) {
  const ExactMatrix m = parikh_matrix(ctx, Word(w));
  const std::string& v = ctx.inducing().str();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) {
      if (m(i, j + 1) != count_subword(w, std::string_view(v).substr(i, j - i + 1)))
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 2) + ")";
    }
  }
  return std::nullopt;
}

SuiteOutcome entry(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(12);
  return drive("entry", o, 200, [&](Iteration& it) -> nlohmann::json {
    const std::string alpha = it.rng.alphabet(3);
    const std::string w = it.rng.word_up_to(alpha, maxlen);
    const ParikhContext classic = ParikhContext::classic(Alphabet(alpha));
    if (auto cell = parikh_entry_mismatch(classic, w))
      return {{"mapping", "classic"}, {"alphabet", alpha}, {"word", w}, {"cell", *cell}};

    const std::string v = it.rng.word(alpha, it.rng.between(1, 4));
    const ParikhContext induced = ParikhContext::induced(Word(v), Alphabet(alpha));
    if (auto cell = parikh_entry_mismatch(induced, w))
      return {{"mapping", "extended"}, {"inducing", v}, {"word", w}, {"cell", *cell}};

    // Cells of the sequence matrix that house |w|_{q_i...q_j}.
    const GenSeq q = it.rng.pattern(alpha, 3, 3, 2);
    const ExactMatrix xi = seq_matrix(q, Word(w)).matrix;
    const auto idx = special_minor_indices(q);
    const auto& f = q.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i; j < f.size(); ++j) {
        const GenSeq run(std::vector<std::string>(f.begin() + static_cast<std::ptrdiff_t>(i),
                                                  f.begin() + static_cast<std::ptrdiff_t>(j + 1)));
        if (xi(idx[i] - 1, idx[j + 1] - 1) != count_genseq(w, run))
          return {{"mapping", "sequence"}, {"pattern", q.render()}, {"word", w}, {"run", run.render()}};
      }
    }
    return nullptr;
  });
}

WitnessWord build_witness(const FuzzOptions& o, const GenSeq& q, const Word& w, WitnessTrace* trace) {
  switch (o.witness) {
    case WitnessMethod::Exchange: return witness_word_exchange(q, w, trace);
    case WitnessMethod::Merge: return witness_word_merge(q, w);
    case WitnessMethod::Auto: break;
  }
  return witness_word(q, w, trace);
}

SuiteOutcome witness(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(10);
  std::size_t repaired = 0;
  SuiteOutcome out = drive("witness", o, 500, [&](Iteration& it) -> nlohmann::json {
    const std::string alpha = it.rng.alphabet(3);
    const GenSeq q = it.rng.pattern(alpha, 3, 3, 1);
    std::string w = it.rng.word_up_to(alpha, maxlen);
    auto fails = [&](const std::string& s) {
      try {
        return !(build_witness(o, q, Word(s), nullptr).parikh_matrix() == special_minor(q, Word(s)).matrix);
      } catch (const std::logic_error&) {
        return true;
      }
    };
    WitnessTrace trace;
    bool failed = false;
    try {
      failed = !(build_witness(o, q, Word(w), &trace).parikh_matrix() == special_minor(q, Word(w)).matrix);
    } catch (const std::logic_error&) {
      failed = true;
    }
    if (trace.repaired) ++repaired;
    if (!failed) return nullptr;
    w = shrink_word(w, fails);
    nlohmann::json cx = {{"pattern", q.render()}, {"word", w}};
    try {
      const WitnessWord ww = build_witness(o, q, Word(w), nullptr);
      cx["witness"] = ww.render();
      cx["cells"] = cell_labels(special_minor(q, Word(w)).matrix, ww.parikh_matrix());
    } catch (const std::logic_error& e) {
      cx["error"] = e.what();
    }
    return cx;
  });
  if (o.witness == WitnessMethod::Auto) {
    out.notes.push_back("exchange construction repaired by merge in " + std::to_string(repaired) + " of " +
                        std::to_string(out.cases) + " cases");
  }
  return out;
}

SuiteOutcome minor_suite(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(10);
  return drive("minor", o, 500, [&](Iteration& it) -> nlohmann::json {
    const std::string alpha = it.rng.alphabet(3);
    const GenSeq q = it.rng.pattern(alpha, 3, 3, 2);
    const std::string w = it.rng.word_up_to(alpha, maxlen);
    const SpecialMinor m = special_minor(q, Word(w));
    const ExactMatrix extracted = extract_special_minor(seq_matrix(q, Word(w)));
    if (!(extracted == m.matrix))
      return {{"pattern", q.render()}, {"word", w}, {"cells", cell_labels(m.matrix, extracted)}};
    const MinorReport report = check_minor_nonneg(m.matrix, m.matrix.dim());
    if (report.ok()) return nullptr;
    const auto& bad = report.negative.front();
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json cols = nlohmann::json::array();
    for (auto r : bad.rows) rows.push_back(std::to_string(r));
    for (auto c : bad.cols) cols.push_back(std::to_string(c));
    return {{"pattern", q.render()}, {"word", w}, {"rows", rows}, {"cols", cols}, {"det", bad.det.str()}};
  });
}

const std::vector<std::string>& gsh_suite() {
  static const std::vector<std::string> suite = {
      "a*a", "(a.a)*a", "ab*ba", "(ab.c)*d", "(abc.de)*(a.cd)", "(a+b)*ab", "-(a*b)+a*b",
  };
  return suite;
}

// First word (shortest first) where the two sides differ.
std::optional<std::string> first_difference(const GshExpr& e, const LinearGsh& lin, const Alphabet& alpha,
                                            std::size_t max_len, std::size_t& words) {
  std::optional<std::string> bad;
  for_each_word(alpha, max_len, [&](std::string_view w) {
    ++words;
    if (evaluate(e, w) == lin.evaluate(w)) return true;
    bad = std::string(w);
    return false;
  });
  return bad;
}

SuiteOutcome gsh(const FuzzOptions& o) {
  const std::size_t maxlen = o.maxlen.value_or(6);
  const Alphabet binary("ab");
  const Alphabet wide("abcde");
  SuiteOutcome out;
  out.name = "gsh";
  auto fail = [&](nlohmann::json cx) {
    out.passed = false;
    out.counterexample = std::move(cx);
    return out;
  };

  std::size_t words = 0;
  std::size_t literal_off = 0;
  auto check = [&](const std::string& text, const GshExpr& e) -> std::optional<nlohmann::json> {
    ++out.cases;
    const LinearGsh lin = linearize(e);
    for (const Alphabet* alpha : {&binary, &wide}) {
      const std::size_t len = alpha == &binary ? maxlen : std::min<std::size_t>(maxlen, 5);
      if (auto w = first_difference(e, lin, *alpha, len, words)) {
        return nlohmann::json{{"expr", text},
                              {"linear", lin.render()},
                              {"word", *w},
                              {"value", evaluate(e, *w).str()},
                              {"linear_value", lin.evaluate(*w).str()}};
      }
    }
    if (!equivalent_bounded(e, to_expr(lin), binary, std::min<std::size_t>(maxlen, 4)).equal)
      return nlohmann::json{{"expr", text}, {"linear", lin.render()}, {"reason", "bounded check disagrees"}};
    std::size_t unused = 0;
    if (first_difference(e, linearize(e, ProductRule::LiteralRuns), binary, std::min<std::size_t>(maxlen, 4), unused))
      ++literal_off;
    return std::nullopt;
  };

  for (const auto& text : gsh_suite()) {
    if (auto cx = check(text, parse_gsh(text))) return fail(*cx);
  }

  const struct {
    const char* u;
    const char* v;
    const char* expected;
  } reds[] = {{"abc.c", "a.c", "0"}, {"abc.de", "a.cd", "abcde"}, {"a", "a", "a"}, {"ab", "ba", "aba + bab"}};
  for (const auto& r : reds) {
    ++out.cases;
    const LinearGsh got = reduce_pair(parse_monomial(r.u), parse_monomial(r.v));
    if (got.render() != r.expected)
      return fail({{"red", std::string(r.u) + " , " + r.v}, {"expected", r.expected}, {"actual", got.render()}});
  }

  // Seeded random products of two monomials over {a,b}.
  const std::size_t iters = o.iters.value_or(50);
  for (std::size_t i = 0; i < iters; ++i) {
    CaseRng rng(case_seed(o.seed, i));
    const Monomial p(rng.factors("ab", 2, 2));
    const Monomial q(rng.factors("ab", 2, 2));
    const std::string text = "(" + p.render() + ")*(" + q.render() + ")";
    if (auto cx = check(text, GshExpr::leaf(p) * GshExpr::leaf(q))) {
      (*cx)["case"] = std::to_string(i);
      return fail(*cx);
    }
  }
  out.notes.push_back(std::to_string(words) + " word evaluations");
  out.notes.push_back("literal-runs rule differs from evaluation on " + std::to_string(literal_off) + " of " +
                      std::to_string(gsh_suite().size() + iters) + " expressions");
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"homomorphism", "direct", "entry", "witness", "minor", "gsh"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, const FuzzOptions& options) {
  if (name == "homomorphism") return homomorphism(options);
  if (name == "direct") return direct(options);
  if (name == "entry") return entry(options);
  if (name == "witness") return witness(options);
  if (name == "minor") return minor_suite(options);
  if (name == "gsh") return gsh(options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace parikhseq::cli
