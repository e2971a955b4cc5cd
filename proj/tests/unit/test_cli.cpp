#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "parikhseq/cli.hpp"
#include "parikhseq/exact_matrix.hpp"
#include "parikhseq/gsh.hpp"
#include "printers.hpp"

using namespace parikhseq;

namespace {

struct Result {
  int rc;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int rc = cli::run(args, in, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run_cli({"count", "--genseq", "ab.b", "aabb"}).out, "1\n");
  EXPECT_EQ(run_cli({"count", "--subword", "ab", "aaabb"}).out, "6\n");
  EXPECT_EQ(run_cli({"count", "--genseq", "a.bb", ""}).out, "0\n");
  EXPECT_EQ(run_cli({"count", "--subword", "ab", "--factor", "ab", "aaabb"}).out, "subword ab 6\nfactor ab 1\n");
}

TEST(Cli, WordFromStdin) {
  EXPECT_EQ(run_cli({"count", "--subword", "ab"}, "aa\nabb \n").out, "6\n");
}

TEST(Cli, CountJsonUsesStrings) {
  const Result r = run_cli({"count", "--format", "json", "--genseq", "ab.b", "aabb"});
  ASSERT_EQ(r.rc, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("counts").at(0).at("value"), "1");
  EXPECT_EQ(j.at("word_length"), "4");
}

TEST(Cli, MatrixJsonRoundTrip) {
  const Result r = run_cli({"matrix", "sequence", "--pattern", "ab.c", "--format", "json", "babcabcbcba"});
  ASSERT_EQ(r.rc, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(matrix_from_json(j.at("blocks").at("F")), (ExactMatrix{{2, 5}, {0, 9}}));
  EXPECT_EQ(matrix_from_json(j).dim(), 6u);

  const Result c = run_cli({"matrix", "classic", "--alphabet", "abc", "--format", "json", "abcb"});
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse(c.out)),
            (ExactMatrix{{1, 1, 2, 1}, {0, 1, 2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
}

TEST(Cli, StreamingMatchesBuffered) {
  const std::string big(5000, 'a');
  const std::string input = big + "bc\n" + big + "cb";
  const Result s = run_cli({"matrix", "sequence", "--pattern", "ab.c", "--stream", "--format", "json"}, input);
  const Result b = run_cli({"matrix", "sequence", "--pattern", "ab.c", "--format", "json"}, input);
  ASSERT_EQ(s.rc, 0) << s.err;
  ASSERT_EQ(b.rc, 0) << b.err;
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse(s.out)), matrix_from_json(nlohmann::json::parse(b.out)));
}

TEST(Cli, GshLinearizeJson) {
  const Result r = run_cli({"gsh", "linearize", "--format", "json", "(a.a) * a"});
  ASSERT_EQ(r.rc, 0);
  EXPECT_EQ(linear_from_json(nlohmann::json::parse(r.out).at("linear")), linearize(parse_gsh("2 a.a + 3 a.a.a")));
  const Result lit = run_cli({"gsh", "linearize", "--rule", "literal", "(a.a) * a"});
  EXPECT_EQ(lit.out, "a.a + 3 a.a.a\n");
}

TEST(Cli, GshEquiv) {
  const Result same = run_cli({"gsh", "equiv", "a * a", "2 a.a + a"});
  EXPECT_EQ(same.rc, 0);
  EXPECT_NE(same.out.find("canonical: equivalent"), std::string::npos);
  const Result diff = run_cli({"gsh", "equiv", "--format", "json", "a * a", "2 a.a + 2 a"});
  EXPECT_EQ(diff.rc, 0);
  const auto j = nlohmann::json::parse(diff.out);
  EXPECT_FALSE(j.at("canonical").get<bool>());
  EXPECT_EQ(j.at("bounded").at("alphabet"), "a");
  EXPECT_EQ(j.at("bounded").at("counterexample"), "a");
}

TEST(Cli, Witness) {
  EXPECT_NE(run_cli({"witness", "--pattern", "a.aba.a", "aba"}).out.find("a3a3a2a1a1"), std::string::npos);
  EXPECT_EQ(run_cli({"witness", "--pattern", "ba.a.b", "--method", "exchange", "bbaa"}).rc, cli::kViolation);
  EXPECT_EQ(run_cli({"witness", "--pattern", "ba.a.b", "bbaa"}).rc, cli::kOk);
}

TEST(Cli, Minor) {
  const Result r = run_cli({"minor", "--pattern", "a.aba.a", "aba"});
  ASSERT_EQ(r.rc, 0);
  EXPECT_NE(r.out.find("{1,5,8,12}: agrees"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"--help"}).rc, cli::kOk);
  EXPECT_EQ(run_cli({"matrix", "sequence", "--pattern", "a", ""}).rc, cli::kUsage);
  EXPECT_EQ(run_cli({"count", "--subword", "ab", "a-b"}).rc, cli::kUsage);
  EXPECT_EQ(run_cli({"gsh", "eval", "a +", "ab"}).rc, cli::kUsage);
  EXPECT_EQ(run_cli({"bogus"}).rc, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "nosuch"}).rc, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "witness", "--method", "exchange", "--seed", "3", "--iters", "3000"}).rc,
            cli::kViolation);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args{"verify", "all", "--seed", "11", "--iters", "50", "--format", "json"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  EXPECT_EQ(a.rc, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(nlohmann::json::parse(a.out).at("passed").get<bool>());
}
