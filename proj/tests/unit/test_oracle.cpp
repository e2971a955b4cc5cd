#include <gtest/gtest.h>

#include "parikhseq/count.hpp"
#include "parikhseq/fuzz.hpp"
#include "oracles.hpp"

using namespace parikhseq;

TEST(CountSubword, Examples) {
  EXPECT_EQ(count_subword("aab", "a"), 2);
  EXPECT_EQ(count_subword("aaabb", "ab"), 6);
  EXPECT_EQ(count_subword("abcb", ""), 1);
  EXPECT_EQ(count_subword("", "a"), 0);
}

TEST(CountFactor, Examples) {
  EXPECT_EQ(count_factor("bcabc", "bc"), 2);
  EXPECT_EQ(count_factor("bcabc", "abc"), 1);
  EXPECT_EQ(count_factor("", "a"), 0);
  EXPECT_EQ(count_factor("aaaa", "aa"), 3);
  EXPECT_EQ(count_factor("abc", ""), 1);
}

TEST(CountGenseq, Examples) {
  EXPECT_EQ(count_genseq("aabb", parse_genseq("ab.b")), 1);
  EXPECT_EQ(count_genseq("aabb", parse_genseq("a.bb")), 2);
  EXPECT_EQ(count_genseq("babcabcbcba", parse_genseq("ab.c")), 5);
  EXPECT_EQ(count_genseq("", parse_genseq("a.bb")), 0);
}

TEST(CountPiece, Examples) {
  const GenSeq abc = parse_genseq("ab.c");
  EXPECT_EQ(count_piece("babcab", make_piece(abc, 2, 3, true, false)), 1);
  EXPECT_EQ(count_piece("babcab", make_piece(abc, 1, 2, false, false)), 2);
  const GenSeq q = parse_genseq("a.aba.a");
  EXPECT_EQ(count_piece("aba", make_piece(q, 4, 5, false, true)), 1);  // a.a, right-anchored
  EXPECT_EQ(count_piece("aba", make_piece(q, 5, 5, true, false)), 1);  // a, left-anchored
}

TEST(CountPiece, EmptyPieceConventions) {
  const Piece none{};
  Piece both{};
  both.left_anchor = both.right_anchor = true;
  Piece left{};
  left.left_anchor = true;
  EXPECT_EQ(count_piece("ab", none), 1);
  EXPECT_EQ(count_piece("", both), 1);
  EXPECT_EQ(count_piece("ab", both), 0);
  EXPECT_EQ(count_piece("ab", left), 1);
}

TEST(CountPiece, AnchoredSingleRunIsWholeWord) {
  Piece p{{"ab"}, true, true};
  for (const char* w : {"ab", "aab", "abb", "", "ba"}) EXPECT_EQ(count_piece(w, p), std::string(w) == "ab" ? 1 : 0) << w;
}

TEST(CountGenseq, SingleLetterFactorsAreSubwords) {
  // Every binary word of length <= 8 against every 1..3 letter pattern.
  for (std::size_t len = 0; len <= 8; ++len) {
    for (std::size_t bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (std::size_t k = 0; k < len; ++k) w.push_back((bits >> k) & 1 ? 'b' : 'a');
      for (const char* u : {"a", "ab", "ba", "aab", "bab", "bbb"}) {
        std::vector<std::string> f;
        for (const char* c = u; *c; ++c) f.emplace_back(1, *c);
        ASSERT_EQ(count_genseq(w, GenSeq(f)), count_subword(w, u)) << w << " " << u;
      }
    }
  }
}

TEST(Oracle, RandomCountsAgreeWithEnumeration) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    cli::CaseRng rng(cli::case_seed(11, i));
    const std::string alpha = rng.alphabet(3);
    const std::string w = rng.word_up_to(alpha, 12);
    const GenSeq q = rng.pattern(alpha, 3, 3, 1);
    ASSERT_EQ(count_genseq(w, q), oracle::genseq(w, q.factors())) << w << " " << q.render();
    const std::string u = rng.word_up_to(alpha, 4);
    ASSERT_EQ(count_subword(w, u), oracle::subword(w, u)) << w << " " << u;
    if (!u.empty()) {
      ASSERT_EQ(count_factor(w, u), oracle::genseq(w, {u}));
    }
    const bool left = rng.below(2);
    const bool right = rng.below(2);
    const std::size_t a = rng.between(1, q.flat_length());
    const std::size_t b = rng.between(a, q.flat_length());
    const Piece p = make_piece(q, a, b, left, right);
    ASSERT_EQ(count_piece(w, p), oracle::piece(w, p)) << w << " " << p.render();
  }
}

TEST(CountPiece, UnanchoredSingleRunIsFactorCount) {
  for (const char* w : {"", "abab", "aaaa", "babcabcbcba"})
    for (const char* u : {"a", "ab", "aba", "bc"}) EXPECT_EQ(count_piece(w, Piece{{u}, false, false}), count_factor(w, u));
}

TEST(Counts, MonotoneUnderAppend) {
  const GenSeq q = parse_genseq("ab.b.a");
  std::string w;
  BigInt prev = 0;
  for (char c : std::string("abbabababbbaabab")) {
    w.push_back(c);
    const BigInt now = count_genseq(w, q);
    EXPECT_GE(now, prev);
    prev = now;
  }
}

TEST(Counts, LongWordsStayExact) {
  // (n choose 4) overflows 64 bits for n = 10^5.
  const std::string w(100000, 'a');
  const BigInt expected = BigInt(100000) * 99999 * 99998 * 99997 / 24;
  EXPECT_EQ(count_subword(w, "aaaa"), expected);
  EXPECT_EQ(count_genseq(w, parse_genseq("a.a.a.a")), expected);
}
