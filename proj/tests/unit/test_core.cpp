#include <gtest/gtest.h>

#include "parikhseq/word.hpp"
#include "oracles.hpp"

using namespace parikhseq;

TEST(Word, ParsesLetters) {
  const Word w = parse_word("abcb");
  ASSERT_EQ(w.length(), 4u);
  EXPECT_EQ(w.at(1), 'a');
  EXPECT_EQ(w.at(4), 'b');
  EXPECT_EQ(w[1], 'b');
}

TEST(Word, EmptyWord) { EXPECT_TRUE(parse_word("").empty()); }

TEST(Word, AlphabetMembership) {
  EXPECT_THROW(parse_word("abz", Alphabet("ab")), ParseError);
  EXPECT_NO_THROW(parse_word("abba", Alphabet("ab")));
  EXPECT_THROW(parse_word("a b"), ParseError);
}

TEST(Alphabet, RejectsBadInput) {
  EXPECT_THROW(Alphabet(""), ParseError);
  EXPECT_THROW(Alphabet("aba"), ParseError);
  EXPECT_THROW(Alphabet("a-"), ParseError);
}

TEST(Alphabet, OrderAndRank) {
  const Alphabet a("cab");
  EXPECT_EQ(a.rank('c'), 1u);
  EXPECT_EQ(a.rank('b'), 3u);
  EXPECT_FALSE(a.rank('z'));
  EXPECT_EQ(Alphabet::of("banana").symbols(), "ban");
}

TEST(GenSeq, ParsesFactorsAndBoundaries) {
  const GenSeq q = parse_genseq("ab.c");
  EXPECT_EQ(q.factors(), (std::vector<std::string>{"ab", "c"}));
  EXPECT_EQ(q.flat_length(), 3u);
  EXPECT_EQ(q.boundaries(), (std::vector<std::size_t>{2}));

  const GenSeq r = parse_genseq("a.aba.a");
  EXPECT_EQ(r.flat_length(), 5u);
  EXPECT_EQ(r.boundaries(), (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(r.cumulative(), (std::vector<std::size_t>{0, 1, 4, 5}));
}

TEST(GenSeq, RejectsEmptyFactors) {
  for (const char* bad : {"ab..c", ".ab", "ab.", "", "."}) EXPECT_THROW(parse_genseq(bad), ParseError) << bad;
}

TEST(GenSeq, BulletAlias) { EXPECT_EQ(parse_genseq("ab\xE2\x80\xA2"
                                                   "c"),
                                      parse_genseq("ab.c")); }

TEST(GenSeq, RenderRoundTrip) {
  for (const char* text : {"a", "ab.c", "a.aba.a", "x1.2y.zz"}) EXPECT_EQ(parse_genseq(text).render(), text);
}

TEST(Piece, Examples) {
  const GenSeq q = parse_genseq("ab.c");
  EXPECT_EQ(make_piece(q, 1, 3, false, false).parts, (std::vector<std::string>{"ab", "c"}));
  EXPECT_EQ(make_piece(q, 2, 3, false, false).parts, (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(make_piece(parse_genseq("a.aba.a"), 2, 4, false, false).parts, (std::vector<std::string>{"aba"}));
}

TEST(Piece, EmptyKeepsAnchors) {
  const Piece p = make_piece(parse_genseq("ab.c"), 3, 2, true, false);
  EXPECT_TRUE(p.empty());
  EXPECT_TRUE(p.left_anchor);
  EXPECT_FALSE(p.right_anchor);
}

TEST(Piece, OutOfRange) {
  const GenSeq q = parse_genseq("ab.c");
  EXPECT_THROW(make_piece(q, 0, 2, false, false), std::out_of_range);
  EXPECT_THROW(make_piece(q, 2, 4, false, false), std::out_of_range);
}

TEST(Piece, WholePatternReproducesFactors) {
  for (const char* text : {"a", "ab.c", "a.aba.a", "abc.d.ef", "x.y.z"}) {
    const GenSeq q = parse_genseq(text);
    EXPECT_EQ(make_piece(q, 1, q.flat_length(), false, false).parts, q.factors()) << text;
  }
}

TEST(Piece, MatchesBoundaryScan) {
  for (const char* text : {"ab.c", "a.aba.a", "abc.d.ef", "a.b.c.d"}) {
    const GenSeq q = parse_genseq(text);
    for (std::size_t i = 1; i <= q.flat_length(); ++i)
      for (std::size_t j = i - 1; j <= q.flat_length(); ++j)
        EXPECT_EQ(make_piece(q, i, j, false, true), oracle::slice(q, i, j, false, true)) << text << " " << i << " " << j;
  }
}

TEST(Piece, Render) {
  const GenSeq q = parse_genseq("ab.c");
  EXPECT_EQ(make_piece(q, 2, 3, true, false).render(), "^b.c");
  EXPECT_EQ(make_piece(q, 1, 2, false, true).render(), "ab$");
  EXPECT_EQ(make_piece(q, 2, 1, false, false).render(), "#e");
}
