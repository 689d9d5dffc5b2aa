#include <gtest/gtest.h>

#include <sstream>

#include "godp/cli.hpp"
#include "godp/emitter.hpp"
#include "support.hpp"

using namespace godp;
using namespace godp::testing;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& rel) { return (corpus() / rel).string(); }

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST(Cli, ExpandTargetMatchesGolden) {
  auto out = scratch_dir("cli_expand");
  CliRun r = run({"expand", path("logs/change_pd.gdol"), "--lib", path("patterns"), "--lib",
               path("aux/foundation.gdol"), "--target", "Change_PD_Vehicle_log", "--out",
               out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<fs::path> written;
  for (const auto& e : fs::directory_iterator(out)) written.push_back(e.path());
  ASSERT_EQ(written.size(), 1u);
  EXPECT_EQ(written[0].filename(), "Change_PD_Vehicle_log.omn");
  GoldenDiff d = diff_golden(parse_manchester_fragment(read_file(written[0])),
                             read_file(corpus() / "golden" / "Change_PD_Vehicle_log.omn"));
  EXPECT_TRUE(d.empty()) << to_string(d);
}

TEST(Cli, ExpandWritesEveryOntologyOfTheInputs) {
  auto out = scratch_dir("cli_expand_all");
  CliRun r = run({"expand", path("logs/roles_driver.gdol"), "--lib", path("."), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(out / "Role_PotentialDriver_log.omn"));
  EXPECT_TRUE(fs::exists(out / "Roles_Driver_log.omn"));
  EXPECT_EQ(count_lines(r.out, "wrote "), 2u);
}

TEST(Cli, PatternsOnlyFileWritesNothing) {
  auto out = scratch_dir("cli_patterns_only");
  CliRun r = run({"expand", path("patterns/scoped.gdol"), "--out", out.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::is_empty(out));
}

TEST(Cli, CheckWithoutConstraintsHasZeroObligations) {
  CliRun r = run({"check", path("logs/temporal_extent.gdol"), "--lib", path("patterns"), "--strict"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0 obligations, 0 proven, 0 unproven"), std::string::npos) << r.out;
}

TEST(Cli, StrictCheckFailsWithoutTypingFacts) {
  CliRun r = run({"check", path("logs/data_driver.gdol"), "--lib", path("."), "--target",
               "Data_Driver_log", "--strict"});
  EXPECT_EQ(r.code, kExitVerificationFailure);
  EXPECT_GT(count_lines(r.out, "UNPROVEN "), 0u);
  // Without --strict unproven obligations are only reported.
  CliRun lax = run({"check", path("logs/data_driver.gdol"), "--lib", path("."), "--target",
                 "Data_Driver_log"});
  EXPECT_EQ(lax.code, kExitOk);
  EXPECT_EQ(lax.out, r.out);
}

TEST(Cli, StrictCheckPassesWithTypingFacts) {
  CliRun r = run({"check", path("aux/data_driver_strict.gdol"), "--lib", path("."), "--strict"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(count_lines(r.out, "UNPROVEN "), 0u);
  EXPECT_GT(count_lines(r.out, "proven   "), 0u);
}

TEST(Cli, CheckLinesNameOrigin) {
  CliRun r = run({"check", path("logs/data_driver.gdol"), "--lib", path("."), "--target",
               "Data_Driver_log"});
  std::string needle = "Data_Driver_log: Domain(licencedFor_le_BMotorVehicle, PotentialDriver)  [DATA_Driver_Role.licencedForSomeDI at ";
  EXPECT_NE(r.out.find(needle), std::string::npos) << r.out;
}

TEST(Cli, EmitObligationsWritesUnprovenFiles) {
  auto dir = scratch_dir("cli_obligations");
  CliRun r = run({"check", path("logs/data_driver.gdol"), "--lib", path("."), "--target",
               "Data_Driver_log", "--emit-obligations", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".omn");
  }
  EXPECT_EQ(files, count_lines(r.out, "UNPROVEN "));
  EXPECT_EQ(files, count_lines(r.out, "exported "));
}

TEST(Cli, RefineReportsEachRefinement) {
  CliRun ok = run({"refine", path("logs/refinements.gdol"), "--lib", path("patterns")});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out, "R: proven\nScoped_Step1: proven\nScoped_Step2: proven\n");

  CliRun bad = run({"refine", path("aux/weakened_refinement.gdol"), "--lib", path("patterns")});
  EXPECT_EQ(bad.code, kExitVerificationFailure);
  EXPECT_EQ(count_lines(bad.out, "Weakened: UNPROVEN"), 1u);
  EXPECT_EQ(count_lines(bad.out, "  unproven: "), 1u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate", path("logs/temporal_extent.gdol")}).code, kExitUsage);
  EXPECT_EQ(run({"expand"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", path("logs/temporal_extent.gdol"), "--depth", "many"}).code, kExitUsage);
  EXPECT_EQ(run({"expand", "/nonexistent/file.gdol"}).code, kExitUsage);
  CliRun r = run({"expand", path("logs/temporal_extent.gdol"), "--lib", path("patterns"), "--target", "Nope"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("UnknownPattern"), std::string::npos) << r.err;
}

TEST(Cli, ParseAndExpansionErrorsExitTwo) {
  auto dir = scratch_dir("cli_errors");
  write_file(dir / "broken.gdol", "pattern P [Class: X");
  CliRun r = run({"expand", (dir / "broken.gdol").string(), "--out", dir.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("UnbalancedBracket"), std::string::npos) << r.err;

  write_file(dir / "deep.gdol", "pattern Loop [ Class: X ] = Loop[X]\nontology O = Loop[Y]");
  CliRun d = run({"expand", (dir / "deep.gdol").string(), "--depth", "50", "--out", dir.string()});
  EXPECT_EQ(d.code, kExitUsage);
  EXPECT_NE(d.err.find("DepthExceeded"), std::string::npos) << d.err;
}

TEST(Cli, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("expand"), std::string::npos);
}
