#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "ctsat/json_io.hpp"
#include "ctsat/verify.hpp"
#include "gtest/gtest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CTSAT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
  return std::string(CTSAT_FIXTURES) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, SolveBundledFormulaIsSat) {
  RunResult r = run("solve " + fixture("table1.cnf") + " --perms " +
                    fixture("perms.txt"));
  EXPECT_EQ(r.exit_code, 10);
  EXPECT_NE(r.out.find("s SATISFIABLE"), std::string::npos);
  EXPECT_NE(r.out.find("v 00111011"), std::string::npos);
}

TEST(Cli, SolveWithStartOrderMatchesExamples) {
  RunResult r = run("solve " + fixture("table1.cnf") + " --perms " +
                    fixture("perms.txt") + " --start-order a,f --json");
  EXPECT_EQ(r.exit_code, 10);
  ctsat::json j = ctsat::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "SAT");
  EXPECT_EQ(j.at("witness"), "00111011");
  EXPECT_EQ(j.at("n"), 8);
}

TEST(Cli, SolveUnsatInstance) {
  std::string cnf = "p cnf 3 8\n";
  for (int v = 0; v < 8; ++v)
    cnf += std::string(v & 4 ? "-1 " : "1 ") + (v & 2 ? "-2 " : "2 ") +
           (v & 1 ? "-3" : "3") + " 0\n";
  std::string path = write_temp("unsat3.cnf", cnf);
  RunResult r = run("solve " + path);
  EXPECT_EQ(r.exit_code, 20);
  EXPECT_NE(r.out.find("s UNSATISFIABLE"), std::string::npos);
}

TEST(Cli, MissingFileIsUsageError) {
  RunResult r = run("solve /nonexistent/input.cnf");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("error:"), std::string::npos);
}

TEST(Cli, InsufficientPermutationsReportCoverage) {
  std::string cnf = "p cnf 5 1\n1 3 5 0\n";
  std::string path = write_temp("sparse.cnf", cnf);
  std::string perms = write_temp("id.perms", "a,b,c,d,e\n");
  RunResult r = run("solve " + path + " --perms " + perms);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("contiguous"), std::string::npos);
}

TEST(Cli, TraceIsByteIdenticalAcrossRuns) {
  std::string args = "trace " + fixture("table1.cnf") + " --parts " +
                     fixture("table2.json") + " --start-order a,f";
  RunResult a = run(args);
  RunResult b = run(args);
  EXPECT_EQ(a.exit_code, 10);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("== unified structure 3 =="), std::string::npos);
  EXPECT_NE(a.out.find("== couples structure 1 =="), std::string::npos);
  EXPECT_NE(a.out.find("SAT 00111011"), std::string::npos);
}

TEST(Cli, VerifyReportsTheSingleKnownDivergence) {
  RunResult r = run("verify");
  EXPECT_EQ(r.exit_code, 1);  // the bundled-assembly check cannot pass
  size_t fails = 0;
  for (size_t pos = 0; (pos = r.out.find("FAIL", pos)) != std::string::npos;
       ++pos)
    ++fails;
  EXPECT_EQ(fails, 2u);  // one FAIL line plus the summary word FAILED
  EXPECT_NE(r.out.find("[known divergence]"), std::string::npos);
}

TEST(Cli, FuzzEmitsSummaryJson) {
  RunResult r = run("fuzz --n 8 --count 60 --seed 7 --m 24 --m 34");
  EXPECT_EQ(r.exit_code, 0);
  ctsat::json j = ctsat::json::parse(r.out);
  EXPECT_EQ(j.at("total").get<int>(), 60);
  EXPECT_EQ(j.at("sound").get<int>(), 60);
  EXPECT_TRUE(j.contains("agree"));
  EXPECT_TRUE(j.at("disagreements").is_array());
}

TEST(Cli, FuzzRejectsOversizedN) {
  RunResult r = run("fuzz --n 30 --count 1");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("cap"), std::string::npos);
}

TEST(Cli, OracleCicPrintsSortedJss) {
  RunResult r = run("oracle cic " + fixture("table1.cnf") + " --perms " +
                    fixture("perms.txt"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "00111011\n10111100\n");
}

TEST(Cli, OracleBruteCountsModels) {
  std::string path =
      write_temp("intro.cnf", "p cnf 5 3\n-1 2 -4 0\n2 3 -5 0\n-3 -4 5 0\n");
  RunResult r = run("oracle brute " + path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("22 satisfying assignments"), std::string::npos);
}

TEST(Cli, TraceJsonModeEmitsOnlyJson) {
  RunResult r = run("trace " + fixture("table1.cnf") + " --parts " +
                    fixture("table2.json") + " --start-order a,f --json");
  EXPECT_EQ(r.exit_code, 10);
  ctsat::json j = ctsat::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "SAT");
  EXPECT_EQ(j.at("witness"), "00111011");
  EXPECT_EQ(j.at("structures").size(), 3u);
  EXPECT_EQ(j.at("unified").size(), 3u);
  EXPECT_EQ(j.at("couples").size(), 3u);
}

TEST(Cli, TraceEmptyFormulaShowsCompleteStructure) {
  std::string path = write_temp("empty.cnf", "p cnf 3 0\n");
  RunResult r = run("trace " + path);
  EXPECT_EQ(r.exit_code, 10);
  EXPECT_NE(r.out.find("== structure (complete) =="), std::string::npos);
  EXPECT_NE(r.out.find("SAT ***"), std::string::npos);
}

TEST(Cli, SolveEmptyFormulaAllStars) {
  std::string path = write_temp("empty2.cnf", "p cnf 3 0\n");
  RunResult r = run("solve " + path);
  EXPECT_EQ(r.exit_code, 10);
  EXPECT_NE(r.out.find("v ***"), std::string::npos);
}

TEST(Cli, SolveTraceFlagEmitsJsonLines) {
  RunResult r = run("solve " + fixture("table1.cnf") + " --perms " +
                    fixture("perms.txt") + " --trace --start-order a,f");
  EXPECT_EQ(r.exit_code, 10);
  EXPECT_NE(r.out.find("\"event\":\"residue\""), std::string::npos);
  EXPECT_NE(r.out.find("\"event\":\"verdict\""), std::string::npos);
}

// The bundled fixture files and the embedded copies stay in lockstep.
TEST(Fixtures, FilesMatchEmbeddedData) {
  const std::pair<std::string, std::string_view> pairs[] = {
      {"table1.cnf", ctsat::worked::k_table1_cnf},
      {"perms.txt", ctsat::worked::k_perms_txt},
      {"table2.json", ctsat::worked::k_table2_json},
      {"table3.json", ctsat::worked::k_table3_json},
      {"table4.json", ctsat::worked::k_table4_json},
      {"table5.json", ctsat::worked::k_table5_json},
      {"table6.json", ctsat::worked::k_table6_json},
      {"table7.json", ctsat::worked::k_table7_json},
      {"table10.json", ctsat::worked::k_table10_json},
      {"table11.json", ctsat::worked::k_table11_json},
      {"table12.json", ctsat::worked::k_table12_json},
      {"jss.json", ctsat::worked::k_jss_json},
      {"section2.json", ctsat::worked::k_section2_json},
      {"examples.json", ctsat::worked::k_examples_json},
  };
  for (const auto& [name, embedded] : pairs) {
    std::ifstream in(fixture(name));
    ASSERT_TRUE(in) << name;
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    EXPECT_EQ(data, embedded) << name;
  }
}
