// End-to-end tests against the built command line binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "rainbow/families.hpp"
#include "rainbow/io.hpp"

namespace rainbow {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(RAINBOW_CLI_PATH) + " " + args +
                        " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  RunResult result;
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe))
    result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string temp_path(const std::string& name) {
  return testing::TempDir() + "/" + name;
}

TEST(Cli, FamilyEmitsParsableDigraph) {
  RunResult r = run_cli("family --name dicycle --params n=5");
  ASSERT_EQ(r.exit_code, 0);
  ParsedDigraph parsed = parse_digraph(r.out);
  EXPECT_EQ(parsed.graph, dicycle(5));
  EXPECT_EQ(emit_digraph(parsed.graph), r.out);
}

TEST(Cli, ComputeSummaryLine) {
  std::string graph = temp_path("c5.dg");
  write_file(graph, emit_digraph(dicycle(5)));
  RunResult r = run_cli("compute --kind trc --input " + graph);
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string word, kind, value, below;
  lines >> word >> kind >> value >> below;
  EXPECT_EQ(word, "result");
  EXPECT_EQ(kind, "TRC");
  EXPECT_EQ(value, "10");
  EXPECT_EQ(below, "true");
}

TEST(Cli, ComputeWitnessVerifies) {
  std::string graph = temp_path("t53.dg");
  std::string witness = temp_path("t53.col");
  write_file(graph, emit_digraph(tournament_T53()));
  RunResult computed = run_cli("compute --kind strc --input " + graph +
                               " --witness-out " + witness);
  ASSERT_EQ(computed.exit_code, 0);
  RunResult verified = run_cli("verify --kind strc --input " + graph +
                               " --coloring " + witness);
  EXPECT_EQ(verified.exit_code, 0);
  EXPECT_EQ(verified.out, "ok\n");
}

TEST(Cli, VerifyReportsFailingPair) {
  std::string graph = temp_path("c4.dg");
  std::string coloring = temp_path("c4.col");
  write_file(graph, emit_digraph(dicycle(4)));
  Coloring single = Coloring::total_coloring(dicycle(4), {0, 0, 0, 0},
                                             {0, 0, 0, 0});
  write_file(coloring, emit_coloring(dicycle(4), single));
  RunResult r = run_cli("verify --kind trc --input " + graph + " --coloring " +
                        coloring);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "failing 0 2\n");
}

TEST(Cli, FamilyWithColoringVerifies) {
  std::string graph = temp_path("pet.dg");
  std::string coloring = temp_path("pet.col");
  RunResult emitted = run_cli("family --name petersen --with-coloring --out " +
                              graph + " --coloring-out " + coloring);
  ASSERT_EQ(emitted.exit_code, 0);
  RunResult verified = run_cli("verify --kind strc --input " + graph +
                               " --coloring " + coloring);
  EXPECT_EQ(verified.exit_code, 0);
}

TEST(Cli, LabelMappingEmitted) {
  std::string graph = temp_path("labels.dg");
  write_file(graph, "n 3\na east west\na west north\na north east\n");
  RunResult r = run_cli("compute --kind rc --input " + graph);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("label 0 east\n"), std::string::npos);
  EXPECT_NE(r.out.find("label 2 north\n"), std::string::npos);
}

TEST(Cli, CactusReport) {
  std::string graph = temp_path("cactus.dg");
  write_file(graph, "n 5\na 0 1\na 1 2\na 2 0\na 0 3\na 3 4\na 4 0\n");
  RunResult r = run_cli("cactus --input " + graph);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("is_cactus true\n"), std::string::npos);
  EXPECT_NE(r.out.find("q 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("cut_vertices 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("special_path true\n"), std::string::npos);
  EXPECT_NE(r.out.find("trc_lower_bound 7\n"), std::string::npos);

  std::string bad = temp_path("notcactus.dg");
  write_file(bad, emit_digraph(tournament_T4()));
  RunResult nr = run_cli("cactus --input " + bad);
  ASSERT_EQ(nr.exit_code, 0);
  EXPECT_NE(nr.out.find("is_cactus false\n"), std::string::npos);
  EXPECT_NE(nr.out.find("ArcInMultipleCycles"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("compute --kind trc").exit_code, 2);
  EXPECT_EQ(run_cli("compute --kind bogus --input /dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("family --name bogus").exit_code, 2);
  std::string graph = temp_path("budget.dg");
  write_file(graph, emit_digraph(bio_multipartite({3, 3, 3})));
  EXPECT_EQ(run_cli("compute --kind trc --input " + graph).exit_code, 2);
}

TEST(Cli, EnvironmentBudgetOverride) {
  std::string graph = temp_path("wide.dg");
  write_file(graph, emit_digraph(bio_wheel(4)));
  EXPECT_EQ(run_cli("compute --kind trc --input " + graph).exit_code, 2);
  RunResult r = run_cli("compute --kind trc --input " + graph +
                        " --max-elements 32");
  EXPECT_EQ(r.exit_code, 0);
  setenv("RAINBOW_BUDGET_ELEMENTS", "32", 1);
  RunResult via_env = run_cli("compute --kind trc --input " + graph);
  unsetenv("RAINBOW_BUDGET_ELEMENTS");
  EXPECT_EQ(via_env.exit_code, 0);
  EXPECT_NE(via_env.out.find("result TRC 3 true"), std::string::npos);
}

TEST(Cli, CheckSingleCriterion) {
  RunResult r = run_cli("check --only 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("criterion 2 PASS"), std::string::npos);
  EXPECT_NE(r.out.find("check seed=20240817"), std::string::npos);
  EXPECT_NE(r.out.find("check PASS 1 criteria"), std::string::npos);
}

TEST(Cli, CheckDeterministicUnderSeed) {
  RunResult a = run_cli("check --only 9 --seed 7");
  RunResult b = run_cli("check --only 9 --seed 7");
  EXPECT_EQ(a.exit_code, 0);
  // Identical output apart from wall-clock timings.
  auto strip_times = [](std::string text) {
    for (size_t pos; (pos = text.find(" time=")) != std::string::npos;) {
      size_t end = text.find('s', pos);
      text.erase(pos, end - pos + 1);
    }
    return text;
  };
  EXPECT_EQ(strip_times(a.out), strip_times(b.out));
}

}  // namespace
}  // namespace rainbow
