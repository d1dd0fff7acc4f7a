#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclosemi/cli.hpp"
#include "cyclosemi/semigroup.hpp"
#include "cyclosemi/serialize.hpp"
#include "gtest/gtest.h"

namespace cyclosemi {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclosemi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_.empty()) unsetenv(name_);
    else setenv(name_, old_.c_str(), 1);
  }

 private:
  const char* name_;
  std::string old_;
};

TEST(CliAnalyzeTest, FiveToEight) {
  const auto r = run({"analyze", "5", "6", "7", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["minimal_generators"], Json::parse(R"(["5","6","7","8"])"));
  EXPECT_EQ(j["frobenius"], "9");
  EXPECT_EQ(j["genus"], "5");
  EXPECT_EQ(j["gaps"], Json::parse(R"(["1","2","3","4","9"])"));
  EXPECT_EQ(j["polynomial"], Json::parse(R"(["1","-1","0","0","0","1","0","0","0","-1","1"])"));
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j["cyclotomic_report"]["cyclotomic"], false);
}

TEST(CliAnalyzeTest, TwoThreeIsPhiSix) {
  const auto r = run({"analyze", "2", "3"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["cyclotomic_report"]["cyclotomic"], true);
  ASSERT_EQ(j["cyclotomic_report"]["factors"].size(), 1u);
  EXPECT_EQ(j["cyclotomic_report"]["factors"][0]["index"], "6");
  EXPECT_EQ(j["cyclotomic_report"]["factors"][0]["multiplicity"], "1");
}

TEST(CliAnalyzeTest, TextFormat) {
  const auto r = run({"analyze", "5", "6", "7", "8", "--format", "text"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("polynomial: x^10 - x^9 + x^5 - x + 1"), std::string::npos);
  EXPECT_NE(r.out.find("cyclotomic: false"), std::string::npos);
}

TEST(CliAnalyzeTest, BadInputIsUsageError) {
  EXPECT_EQ(run({"analyze", "2", "4"}).code, kExitUsage);
  EXPECT_NE(run({"analyze", "2", "4"}).err.find("error"), std::string::npos);
  EXPECT_EQ(run({"analyze", "0", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "5", "6", "--format", "xml"}).code, kExitUsage);
}

TEST(CliAnalyzeTest, JsonRoundTripIsByteIdentical) {
  for (const auto& gens : std::vector<std::vector<std::string>>{{"5", "6", "7", "8"}, {"3", "7", "11"}, {"1"}}) {
    std::vector<std::string> args{"analyze"};
    args.insert(args.end(), gens.begin(), gens.end());
    const auto r = run(args);
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out);

    std::vector<Element> g;
    for (const auto& s : gens) g.push_back(std::stoll(s));
    const auto j = analysis_record(NumericalSemigroup::from_generators(g));
    EXPECT_EQ(poly_from_json(j["polynomial"]), semigroup_polynomial(NumericalSemigroup::from_generators(g)));
  }
}

TEST(CliFamilyTest, Agrees) {
  const auto r = run({"family", "--n", "8", "--t", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["closed_form_agrees"], true);
  EXPECT_EQ(j["analysis"]["minimal_generators"], Json::parse(R"(["6","7","10","11"])"));
  EXPECT_EQ(j["certificate_threshold"], "128");
  EXPECT_EQ(run({"family", "--n", "7", "--t", "1"}).code, kExitUsage);
}

TEST(CliScanTest, Csv) {
  const auto r = run({"scan", "--t", "0", "--n-min", "5", "--n-max", "9", "--format", "csv", "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "n,t,embedding_dimension,expected_dimension,symmetric,cyclotomic,agree\n"
            "5,0,4,4,true,false,true\n"
            "6,0,5,5,true,false,true\n"
            "7,0,6,6,true,false,true\n"
            "8,0,7,7,true,false,true\n"
            "9,0,8,8,true,false,true\n");
}

TEST(CliScanTest, JsonAndDomainErrors) {
  const auto r = run({"scan", "--t", "1", "--n-min", "8", "--n-max", "12"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["all_agree"], true);
  EXPECT_EQ(j["rows"].size(), 5u);

  const auto bad = run({"scan", "--t", "0", "--n-min", "1", "--n-max", "10"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("n-min"), std::string::npos);
  EXPECT_EQ(run({"scan", "--t", "0", "--n-min", "9", "--n-max", "5"}).code, kExitUsage);
}

TEST(CliScanTest, DimensionsTwoAndThreeReportDisagreement) {
  // n = 3, 4 give symmetric semigroups of dimension 2 and 3: cyclotomic.
  EXPECT_EQ(run({"scan", "--t", "0", "--n-min", "3", "--n-max", "6"}).code, kExitAssertionFailed);
}

TEST(CliRootsTest, CountAndCertificate) {
  const auto r = run({"roots", "--n", "5", "--t", "0", "--count", "--exclusion"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["roots"].size(), 10u);
  EXPECT_EQ(j["exclusion_ok"], true);
  EXPECT_EQ(j["unit_circle"]["exact_cyclotomic"], false);

  const auto c = run({"roots", "--n", "80", "--t", "0", "--certificate", "--band"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(Json::parse(c.out)["certificate"]["passed"], true);

  EXPECT_EQ(run({"roots", "--n", "40", "--t", "0", "--certificate"}).code, kExitUsage);
  EXPECT_EQ(run({"roots", "--n", "20", "--t", "1", "--band"}).code, kExitUsage);
}

TEST(CliRootsTest, SamplesCsv) {
  const auto path = std::filesystem::temp_directory_path() / "cyclosemi_samples_test.csv";
  const auto r = run({"roots", "--n", "5", "--t", "0", "--samples-csv", path.string(), "--samples", "16"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,q");
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 16);
  std::filesystem::remove(path);
}

TEST(CliCensusTest, CsvAndSummary) {
  const auto path = std::filesystem::temp_directory_path() / "cyclosemi_census_test.json";
  const auto r = run({"census", "--max-genus", "6", "--workers", "2", "--summary", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("genus,e,total,symmetric,cyclotomic,sym_not_cyc\n0,1,1,1,1,0\n", 0), 0u);
  std::ifstream in(path);
  const auto j = Json::parse(in);
  EXPECT_EQ(j["totals_by_genus"], Json::parse(R"(["1","1","2","4","7","12","23"])"));
  EXPECT_EQ(j["low_dimension_equivalence"], true);
  std::filesystem::remove(path);

  const auto partial = run({"census", "--max-genus", "10", "--node-limit", "10", "--format", "json"});
  EXPECT_EQ(partial.code, kExitAssertionFailed);
  EXPECT_EQ(Json::parse(partial.out)["partial"], true);
  EXPECT_EQ(run({"census", "--max-genus", "-2"}).code, kExitUsage);
}

TEST(CliMiscTest, VersionAndBadSubcommand) {
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliWorkersTest, Resolution) {
  EXPECT_EQ(resolve_workers(3), 3u);
  {
    ScopedEnv env("CYCLOSEMI_WORKERS", "5");
    EXPECT_EQ(resolve_workers(0), 5u);
    EXPECT_EQ(resolve_workers(2), 2u);
  }
  {
    ScopedEnv env("CYCLOSEMI_WORKERS", "zero");
    EXPECT_THROW(resolve_workers(0), std::invalid_argument);
    EXPECT_EQ(run({"scan", "--t", "0", "--n-min", "5", "--n-max", "6"}).code, kExitUsage);
  }
  EXPECT_GE(resolve_workers(0), 1u);
}

TEST(CliBinaryTest, ExitCodes) {
  const std::string bin = CYCLOSEMI_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("analyze 5 6 7 8"), kExitOk);
  EXPECT_EQ(status("analyze 2 4"), kExitUsage);
  EXPECT_EQ(status("scan --t 0 --n-min 1 --n-max 4"), kExitUsage);
  EXPECT_EQ(status("--version"), kExitOk);
}

}  // namespace
}  // namespace cyclosemi
