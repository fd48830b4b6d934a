#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

using zkfabric::cli::run;
using zkfabric::testing::kCarStatement;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("zkfabric-cli-" + name + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ParseTwoClauses) {
  auto r = call({"parse", "--statement", "A [and] B"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("clauses: 2"), std::string::npos);
  EXPECT_NE(r.out.find("operators: AND"), std::string::npos);
  EXPECT_NE(r.out.find("expression: And(Var0,Var1)"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(call({"parse", "--statement", "A [nand] B"}).code, 2);
  EXPECT_EQ(call({"parse"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"parse", "--statement-file", "/nonexistent/statement.txt"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(call({"--help"}).code, 0); }

TEST(Cli, MinimizeReportsGateCounts) {
  auto r = call({"minimize", "--statement", kCarStatement});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sop: --0 + -0- + 1--"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gates before: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gates after: 4"), std::string::npos) << r.out;
}

TEST(Cli, GarbleEvaluates) {
  auto r = call({"garble", "--statement", kCarStatement, "--witness", "011", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("output: 0"), std::string::npos) << r.out;
  auto lines = call({"garble", "--statement", kCarStatement, "--format", "record-lines"});
  EXPECT_EQ(lines.out.front(), '{');
}

TEST(Cli, SimulateAcceptAndReject) {
  auto ok = call({"simulate", "--statement", kCarStatement, "--witness", "111", "--claim", "1", "--seed", "7"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("verdict: accept"), std::string::npos) << ok.out;
  EXPECT_NE(ok.err.find("timing total"), std::string::npos);

  auto no = call({"simulate", "--statement", kCarStatement, "--witness", "011", "--claim", "1", "--seed", "7"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("verdict: reject"), std::string::npos);
}

TEST(Cli, SimulateInputErrors) {
  EXPECT_EQ(call({"simulate", "--statement", kCarStatement, "--witness", "11"}).code, 2);
  EXPECT_EQ(call({"simulate", "--statement", kCarStatement, "--witness", "1x1"}).code, 2);
  EXPECT_EQ(call({"simulate", "--statement", kCarStatement, "--witness", "111", "--verifiers", "5"}).code, 2);
  EXPECT_EQ(call({"simulate", "--statement", kCarStatement, "--witness", "111", "--claim", "2"}).code, 2);
  EXPECT_EQ(call({"simulate", "--statement", "only one", "--witness", "1"}).code, 2);
  EXPECT_EQ(call({"simulate", "--statement", kCarStatement, "--witness", "111", "--fault", "gremlins"}).code, 2);
}

TEST(Cli, AbortExitsOne) {
  auto r = call({"simulate", "--statement", kCarStatement, "--witness", "111", "--group", "toy", "--fault",
                 "flip-reveal=0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("abort (CommitMismatch"), std::string::npos) << r.out;
}

TEST(Cli, SameSeedSameBoardBytesAndStdout) {
  auto a = temp_path("a"), b = temp_path("b");
  std::vector<std::string> base{"simulate", "--statement", kCarStatement, "--witness", "101", "--seed", "5"};
  auto args_a = base, args_b = base;
  args_a.insert(args_a.end(), {"--board", a});
  args_b.insert(args_b.end(), {"--board", b});
  auto ra = call(args_a), rb = call(args_b);
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, RecordLinesFormatMatchesBoardFile) {
  auto path = temp_path("lines");
  auto r = call({"simulate", "--statement", kCarStatement, "--witness", "111", "--seed", "2", "--format",
                 "record-lines", "--board", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(path));
  std::filesystem::remove(path);
}

TEST(Cli, VerifyTranscriptMatchesRecordedVerdicts) {
  auto path = temp_path("verify");
  call({"simulate", "--statement", kCarStatement, "--witness", "111", "--seed", "1", "--board", path});
  EXPECT_EQ(call({"verify-transcript", "--board", path}).code, 0);
  call({"simulate", "--statement", kCarStatement, "--witness", "011", "--seed", "2", "--board", path});
  call({"simulate", "--statement", kCarStatement, "--witness", "111", "--seed", "3", "--group", "toy", "--fault",
        "forge-output=1", "--board", path});
  auto r = call({"verify-transcript", "--board", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("session session-1: recorded accept, replayed accept, ok"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("session session-2: recorded reject, replayed reject, ok"), std::string::npos) << r.out;
  EXPECT_EQ(call({"verify-transcript", "--board", path, "--session", "session-1"}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyTranscriptFlagsTampering) {
  auto path = temp_path("tamper");
  call({"simulate", "--statement", kCarStatement, "--witness", "111", "--seed", "1", "--board", path});
  auto text = slurp(path);
  auto pos = text.rfind("\"verdict\":\"accept\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 18, "\"verdict\":\"reject\"");
  std::ofstream(path, std::ios::binary) << text;
  EXPECT_EQ(call({"verify-transcript", "--board", path}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, InspectAndEnvBoard) {
  auto path = temp_path("inspect");
  call({"simulate", "--statement", kCarStatement, "--witness", "111", "--seed", "1", "--board", path});
  auto r = call({"inspect", "--board", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("#0 session-1 prover session_init", 0), 0u) << r.out.substr(0, 80);
  setenv("ZKFABRIC_BOARD", path.c_str(), 1);
  auto e = call({"inspect", "--format", "record-lines"});
  unsetenv("ZKFABRIC_BOARD");
  EXPECT_EQ(e.out, slurp(path));
  EXPECT_EQ(call({"inspect", "--board", "/nonexistent/board.jsonl"}).code, 2);
  std::filesystem::remove(path);
}
