#include <gtest/gtest.h>

#include "parikhseq/count.hpp"
#include "parikhseq/fuzz.hpp"
#include "parikhseq/sequence_matrix.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace parikhseq;

namespace {

using Blocks = std::array<ExactMatrix, 4>;  // E, F, C, S

void expect_blocks(const SeqMatrix& m, const Blocks& b) {
  EXPECT_EQ(m.block(Block::E), b[0]) << "E\n" << to_text(m.block(Block::E));
  EXPECT_EQ(m.block(Block::F), b[1]) << "F\n" << to_text(m.block(Block::F));
  EXPECT_EQ(m.block(Block::C), b[2]) << "C\n" << to_text(m.block(Block::C));
  EXPECT_EQ(m.block(Block::S), b[3]) << "S\n" << to_text(m.block(Block::S));
}

std::string render(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Zero: return "0";
    case Cell::Kind::One: return "1";
    case Cell::Kind::Count: return c.piece.render();
  }
  return "?";
}

}  // namespace

TEST(EntrySpec, SymbolicBlocksAbDotC) {
  const EntrySpec spec(parse_genseq("ab.c"));
  EXPECT_EQ(render(spec.block_cell(Block::E, 1, 1)), "a$");
  EXPECT_EQ(render(spec.block_cell(Block::E, 1, 2)), "ab");
  EXPECT_EQ(render(spec.block_cell(Block::E, 2, 2)), "b");
  EXPECT_EQ(render(spec.block_cell(Block::C, 1, 1)), "^#e$");
  EXPECT_EQ(render(spec.block_cell(Block::C, 1, 2)), "^b");
  EXPECT_EQ(render(spec.block_cell(Block::C, 2, 2)), "1");
  EXPECT_EQ(render(spec.block_cell(Block::S, 1, 2)), "^b.c");
  EXPECT_EQ(render(spec.block_cell(Block::F, 1, 2)), "ab.c");
}

TEST(EntrySpec, BulletFreeIsFactorMatrix) {
  const EntrySpec spec(parse_genseq("abc"));
  EXPECT_EQ(render(spec.block_cell(Block::E, 1, 2)), "ab$");
  EXPECT_EQ(render(spec.block_cell(Block::C, 1, 1)), "^#e$");
  EXPECT_EQ(render(spec.block_cell(Block::C, 2, 2)), "^#e$");
  EXPECT_EQ(render(spec.block_cell(Block::C, 1, 2)), "^b$");
  EXPECT_EQ(render(spec.block_cell(Block::S, 1, 2)), "^bc");
  EXPECT_EQ(render(spec.block_cell(Block::F, 1, 2)), "abc");
}

TEST(EntrySpec, PatternADotAbaDotA) {
  const EntrySpec spec(parse_genseq("a.aba.a"));
  EXPECT_EQ(render(spec.block_cell(Block::E, 1, 1)), "a");
  EXPECT_EQ(render(spec.block_cell(Block::C, 1, 4)), "aba");
  EXPECT_EQ(render(spec.block_cell(Block::S, 4, 4)), "a");
  EXPECT_EQ(render(spec.block_cell(Block::C, 2, 3)), "^b$");
}

TEST(EntrySpec, RejectsShortPatterns) { EXPECT_THROW(EntrySpec(parse_genseq("a")), std::invalid_argument); }

TEST(SeqMatrix, BlocksAbDotC) {
  const GenSeq q = parse_genseq("ab.c");
  expect_blocks(seq_matrix_direct(q, Word("babcab")), {ExactMatrix{{0, 2}, {0, 3}}, ExactMatrix{{2, 1}, {0, 2}},
                                                      ExactMatrix{{0, 1}, {0, 1}}, ExactMatrix{{1, 1}, {0, 1}}});
  expect_blocks(seq_matrix_direct(q, Word("cbcba")), {ExactMatrix{{1, 0}, {0, 2}}, ExactMatrix{{0, 0}, {0, 1}},
                                                     ExactMatrix{{0, 0}, {0, 1}}, ExactMatrix{{0, 0}, {0, 2}}});
  const Blocks product{ExactMatrix{{1, 2}, {0, 5}}, ExactMatrix{{2, 5}, {0, 9}}, ExactMatrix{{0, 1}, {0, 1}},
                       ExactMatrix{{1, 3}, {0, 3}}};
  expect_blocks(seq_matrix(q, Word("babcabcbcba")), product);
  const ExactMatrix prod = seq_matrix(q, Word("babcab")).matrix * seq_matrix(q, Word("cbcba")).matrix;
  expect_blocks(SeqMatrix{q, prod}, product);
}

TEST(SeqMatrix, FactorBlocksAbc) {
  const Word sigma("abc");
  expect_blocks(factor_matrix(sigma, Word("b")), {ExactMatrix{{0, 0}, {0, 1}}, ExactMatrix{{0, 0}, {0, 0}},
                                                 ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{1, 0}, {0, 0}}});
  expect_blocks(factor_matrix(sigma, Word("cabc")), {ExactMatrix{{0, 0}, {0, 0}}, ExactMatrix{{1, 1}, {0, 1}},
                                                    ExactMatrix{{0, 0}, {0, 0}}, ExactMatrix{{0, 0}, {0, 1}}});
  const ExactMatrix prod = factor_matrix(sigma, Word("b")).matrix * factor_matrix(sigma, Word("cabc")).matrix;
  EXPECT_EQ(prod, factor_matrix(sigma, Word("bcabc")).matrix);
  expect_blocks(SeqMatrix{parse_genseq("abc"), prod}, {ExactMatrix(2), ExactMatrix{{1, 1}, {0, 2}}, ExactMatrix(2),
                                                       ExactMatrix{{1, 1}, {0, 0}}});
}

TEST(SeqMatrix, WarmUpFactorMatrix) {
  const SeqMatrix m = factor_matrix(Word("ab"), Word("abab"));
  ASSERT_EQ(m.matrix.dim(), 3u);
  EXPECT_EQ(m.matrix, (ExactMatrix{{1, 0, 2}, {0, 0, 0}, {0, 0, 1}}));
  EXPECT_THROW(factor_matrix(Word("a"), Word("ab")), std::invalid_argument);
}

TEST(SeqMatrix, EmptyWordIsIdentity) {
  for (const char* q : {"ab", "ab.c", "a.aba.a", "abc"}) {
    EXPECT_EQ(seq_matrix(parse_genseq(q), Word("")).matrix, ExactMatrix::identity(3 * (parse_genseq(q).flat_length() - 1)));
    EXPECT_EQ(seq_matrix_direct(parse_genseq(q), Word("")).matrix,
              ExactMatrix::identity(3 * (parse_genseq(q).flat_length() - 1)));
  }
}

TEST(SeqMatrix, LetterGenerators) {
  const GenSeq q = parse_genseq("ab.c");
  const SeqMatrix b{q, seq_matrix_letter(q, 'b')};
  EXPECT_EQ(b.at(Block::C, 1, 2), 1);
  EXPECT_EQ(b.at(Block::E, 2, 2), 1);
  EXPECT_EQ(b.block(Block::F), ExactMatrix(2));

  // A letter outside Q: zero blocks, C diagonal per the boundary rule.
  const SeqMatrix d{q, seq_matrix_letter(q, 'd')};
  ExactMatrix expected = ExactMatrix::identity(6);
  expected(2, 2) = 0;
  EXPECT_EQ(d.matrix, expected);

  const GenSeq r = parse_genseq("a.aba.a");
  const SeqMatrix a{r, seq_matrix_letter(r, 'a')};
  EXPECT_EQ(a.at(Block::E, 1, 1), 1);
  EXPECT_EQ(a.at(Block::S, 4, 4), 1);
  EXPECT_EQ(a.at(Block::C, 1, 2), 1);
  EXPECT_EQ(a.at(Block::C, 3, 4), 1);
}

TEST(SeqMatrix, PrintedADotAbaDotACells) {
  // The numeric matrix printed for a.aba.a over aba, block by block.
  const GenSeq q = parse_genseq("a.aba.a");
  ExactMatrix printed = ExactMatrix::identity(12);
  const ExactMatrix e{{2, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 2}};
  const ExactMatrix f{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const ExactMatrix c{{1, 2, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 1}};
  const ExactMatrix s{{2, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      printed(i, 4 + j) = e(i, j);
      printed(i, 8 + j) = f(i, j);
      printed(4 + i, 4 + j) = c(i, j);
      printed(4 + i, 8 + j) = s(i, j);
    }
  const ExactMatrix direct = seq_matrix_direct(q, Word("aba")).matrix;
  const auto diffs = diff_cells(printed, direct);
  std::vector<std::string> labels;
  for (const auto& d : diffs) {
    labels.push_back(d.label());
    EXPECT_EQ(d.expected, 2);
    EXPECT_EQ(d.actual, 1);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"C[1][2]", "C[3][4]", "S[3][3]"}));
  EXPECT_EQ(seq_matrix(q, Word("a")).matrix * seq_matrix(q, Word("ba")).matrix, direct);
}

TEST(SeqMatrix, LiteralPrefixRuleBreaksHomomorphism) {
  // Counting b in w2 = bb whenever w2 starts with the prefix ab's tail would
  // give 2 for ab.b over a.bb; the anchored rule and the product agree on 1.
  const GenSeq q = parse_genseq("ab.b");
  const ExactMatrix prod = seq_matrix(q, Word("a")).matrix * seq_matrix(q, Word("bb")).matrix;
  EXPECT_EQ(count_genseq("abb", q), 1);
  EXPECT_EQ(SeqMatrix(q, prod).at(Block::F, 1, 2), 1);
  EXPECT_EQ(prod, seq_matrix_direct(q, Word("abb")).matrix);
}

TEST(SeqMatrix, BruteForceHomomorphismAndFold) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    cli::CaseRng rng(cli::case_seed(31, i));
    const std::string alpha = rng.alphabet(3);
    const GenSeq q = rng.pattern(alpha, 3, 3, 2);
    const std::string w1 = rng.word_up_to(alpha, 10);
    const std::string w2 = rng.word_up_to(alpha, 10);
    const ExactMatrix whole = oracle::sequence_matrix(q, w1 + w2);
    ASSERT_EQ(seq_matrix_direct(q, Word(w1 + w2)).matrix, whole) << q.render() << " " << w1 + w2;
    ASSERT_EQ(seq_matrix(q, Word(w1 + w2)).matrix, whole) << q.render() << " " << w1 + w2;
    ASSERT_EQ(oracle::multiply(oracle::sequence_matrix(q, w1), oracle::sequence_matrix(q, w2)), whole)
        << q.render() << " " << w1 << " " << w2;
  }
}

TEST(SeqMatrix, StructuralInvariants) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    cli::CaseRng rng(cli::case_seed(41, i));
    const std::string alpha = rng.alphabet(3);
    const GenSeq q = rng.pattern(alpha, 3, 3, 2);
    const std::string w = rng.word_up_to(alpha, 20);
    const SeqMatrix m = seq_matrix(q, Word(w));
    ASSERT_TRUE(m.matrix.is_upper_triangular());
    const std::size_t n = m.block_size();
    for (std::size_t k = 0; k < n; ++k) {
      ASSERT_EQ(m.matrix(k, k), 1);
      ASSERT_EQ(m.matrix(2 * n + k, 2 * n + k), 1);
      const BigInt expected = q.is_boundary(k + 1) ? 1 : (w.empty() ? 1 : 0);
      ASSERT_EQ(m.at(Block::C, k + 1, k + 1), expected);
    }
    // F[1][L-1] is the full pattern count.
    ASSERT_EQ(m.at(Block::F, 1, n), count_genseq(w, q));
  }
}

TEST(SeqMatrix, FolderAlphabetAndChunks) {
  const GenSeq q = parse_genseq("ab.c");
  SeqMatrixFolder f(q, Alphabet("abc"));
  EXPECT_THROW(f.push('d'), ParseError);
  f.push("babcab");
  f.push(std::string_view("cbcba"));
  EXPECT_EQ(f.letters_consumed(), 11u);
  EXPECT_EQ(f.current(), seq_matrix_direct(q, Word("babcabcbcba")).matrix);
}

TEST(SeqMatrix, JsonBlocks) {
  const nlohmann::json j = to_json(seq_matrix(parse_genseq("ab.c"), Word("babcabcbcba")));
  EXPECT_EQ(j.at("pattern"), "ab.c");
  EXPECT_EQ(j.at("dim"), 6);
  EXPECT_EQ(j.at("blocks").at("F").at("rows").at(1).at(1), "9");
  EXPECT_EQ(matrix_from_json(j.at("blocks").at("S")), (ExactMatrix{{1, 3}, {0, 3}}));
}
