#include <gtest/gtest.h>

#include <sstream>

#include "crsym/cli.hpp"

using namespace crsym;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "crsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SymmetriesHyperquadric) {
  CliRun r = run({"symmetries", "--zoo", "hyperquadric1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["grading"]["total_dim"], 8);
  EXPECT_EQ(j["grading"]["dims"]["-1/2"], 2);
  EXPECT_TRUE(j["grading"]["components"][0].contains("basis"));
}

TEST(Cli, ValidatePluriharmonic) {
  CliRun r = run({"validate", "--expr", "z1^2", "--mu", "1/2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("pluriharmonic"), std::string::npos);
  json j = json::parse(r.out);
  EXPECT_FALSE(j["validation"]["ok"].get<bool>());
}

TEST(Cli, VerdictsSos14) {
  CliRun r = run({"verdicts", "--zoo", "sos_1_4"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdicts"]["grading_shape"], "thm_5_4");
  EXPECT_EQ(j["verdicts"]["jet_order"], 2);
  EXPECT_FALSE(j["grading"]["components"][0].contains("basis"));
}

TEST(Cli, SosAndJsonSourcesAgree) {
  CliRun a = run({"verdicts", "--sos", "z1,z2^2", "--mu", "1/2,1/4"});
  CliRun b = run({"verdicts", "--json", R"({"sos": {"mu": ["1/2", "1/4"], "Q": ["z1", "z2^2"]}})"});
  CliRun c = run({"verdicts", "--json",
               R"({"n": 2, "mu": ["1/2","1/4"], "P": {"terms": [
                    {"alpha": [1,0], "beta": [1,0], "re": "1", "im": "0"},
                    {"alpha": [0,2], "beta": [0,2], "re": "1", "im": "0"}]}})"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(a.out, b.out);
  json ja = json::parse(a.out), jc = json::parse(c.out);
  EXPECT_EQ(ja["grading"], jc["grading"]);
}

TEST(Cli, LeviTube) {
  CliRun r = run({"levi", "--expr", "Re(z1)*abs2(z2)", "--mu", "1/2,1/4", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["pseudoconvexity"]["status"], "not_psd");
  EXPECT_EQ(j["options"]["seed"], 9);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"symmetries"}).code, 2);
  EXPECT_EQ(run({"symmetries", "--zoo", "nope"}).code, 2);
  EXPECT_EQ(run({"symmetries", "--expr", "abs2(z1)"}).code, 2);
  EXPECT_EQ(run({"symmetries", "--expr", "abs2(z1) +", "--mu", "1/2"}).code, 2);
  EXPECT_EQ(run({"symmetries", "--zoo", "hyperquadric1", "--expr", "abs2(z1)", "--mu", "1/2"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  CliRun bad_json = run({"verdicts", "--json", "{"});
  EXPECT_EQ(bad_json.code, 2);
  EXPECT_NE(bad_json.err.find("bad model JSON"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  CliRun a = run({"symmetries", "--zoo", "sos_1_4"});
  CliRun b = run({"symmetries", "--zoo", "sos_1_4"});
  EXPECT_EQ(a.out, b.out);
  CliRun t = run({"symmetries", "--zoo", "sos_1_4", "--timings"});
  EXPECT_TRUE(json::parse(t.out).contains("timings"));
  EXPECT_FALSE(json::parse(a.out).contains("timings"));
}

TEST(Cli, ZooListAndRunAll) {
  CliRun l = run({"zoo-list"});
  ASSERT_EQ(l.code, 0);
  EXPECT_EQ(json::parse(l.out)["models"].size(), zoo().size());
  CliRun r = run({"zoo-run-all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
}

TEST(Cli, GoldenDriftIsAnAssertionFailure) {
  auto dir = std::filesystem::temp_directory_path() / "crsym_golden_drift";
  std::filesystem::remove_all(dir);
  CliRun missing = run({"zoo-run-all", "--golden-dir", dir.string()});
  EXPECT_EQ(missing.code, 1);
  CliRun update = run({"zoo-run-all", "--golden-dir", dir.string(), "--update-golden"});
  EXPECT_EQ(update.code, 0) << update.err;
  std::ofstream(dir / "hyperquadric1.json") << "{}\n";
  CliRun drift = run({"zoo-run-all", "--golden-dir", dir.string()});
  EXPECT_EQ(drift.code, 1);
  EXPECT_NE(drift.err.find("hyperquadric1: check golden failed"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, DebugExtendedMenu) {
  CliRun r = run({"symmetries", "--zoo", "tube_x1z2", "--debug-extended-menu"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_TRUE(j["options"]["debug_extended_menu"].get<bool>());
  EXPECT_TRUE(j["grading"]["extended_findings"].empty());
}
