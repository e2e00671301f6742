// Copyright 2026 The bsstar Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"

namespace bsstar::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bsstar_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

nlohmann::json without_timing(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("elapsed_ms");
  return j;
}

TEST(CliGenTest, Summaries) {
  EXPECT_NE(invoke({"gen", "-n", "3"}).err.find("n=3 vertices=6 edges=9"), std::string::npos);
  EXPECT_NE(invoke({"gen", "-n", "4"}).err.find("vertices=24 edges=60"), std::string::npos);
  EXPECT_NE(invoke({"gen", "-n", "2"}).err.find("vertices=2 edges=1"), std::string::npos);
  const auto path = scratch("gen.txt");
  const Result r = invoke({"gen", "-n", "3", "--out", path.string()});
  EXPECT_EQ(r.code, kVerified);
  EXPECT_NE(r.out.find("edges=9"), std::string::npos);
  const std::string text = slurp(path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  EXPECT_EQ(invoke({"gen", "-n", "13"}).code, kUsage);
  EXPECT_EQ(invoke({"gen", "-n", "3", "--out", "/nonexistent/dir/x"}).code, kIo);
}

TEST(CliVerifyTest, PaperSubjects) {
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "3", "--mode", "exhaustive"}).code,
            kVerified);
  EXPECT_EQ(invoke({"verify", "--subject", "lemma25", "-n", "3", "--mode", "exhaustive"}).code,
            kVerified);
  EXPECT_EQ(invoke({"verify", "--subject", "thm41", "-n", "4", "--mode", "sampled", "--trials",
                    "300", "--seed", "7"})
                .code,
            kVerified);
  for (const char* subject : {"structure", "lemma22", "lemma23"}) {
    EXPECT_EQ(invoke({"verify", "--subject", subject, "-n", "4"}).code, kVerified) << subject;
  }
  for (const char* subject : {"lemma24", "lemma27", "lemma29"}) {
    EXPECT_EQ(invoke({"verify", "--subject", subject, "-n", "3"}).code, kVerified) << subject;
  }
  EXPECT_EQ(invoke({"verify", "--subject", "lemma24", "-n", "4"}).code, kBudget);
}

TEST(CliVerifyTest, ViolationExitCode) {
  const Result r =
      invoke({"verify", "--subject", "thm31", "-n", "3", "--max-faults", "2"});
  EXPECT_EQ(r.code, kViolation);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["violations"].empty());
}

TEST(CliVerifyTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "-n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "4", "--mode", "sampled"}).code,
            kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm41", "-n", "4", "--mode", "exhaustive"}).code,
            kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "lemma99", "-n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "lemma25", "-n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "4", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "4", "--budget", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "4", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kVerified);
}

TEST(CliVerifyTest, BudgetRefusalAndForce) {
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "5"}).code, kBudget);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "4", "--budget", "1000"}).code, kBudget);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "3", "--budget", "10", "--force"}).code,
            kVerified);
}

TEST(CliVerifyTest, EnvironmentBudget) {
  EXPECT_EQ(default_budget(nullptr), kDefaultBudget);
  EXPECT_EQ(default_budget("1234"), 1234u);
  EXPECT_THROW(default_budget("12x"), UsageError);
  EXPECT_THROW(default_budget("0"), UsageError);
  ::setenv("BSSTAR_BUDGET", "100", 1);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "3", "--max-faults", "1"}).code,
            kBudget);
  EXPECT_EQ(invoke({"verify", "--subject", "thm31", "-n", "3", "--budget", "1000"}).code,
            kVerified);
  ::unsetenv("BSSTAR_BUDGET");
}

TEST(CliVerifyTest, ReportFilesAndFormats) {
  const auto json_path = scratch("report.json");
  const auto csv_path = scratch("report.csv");
  const Result r = invoke({"verify", "--subject", "lemma24", "-n", "3", "--out", json_path.string()});
  EXPECT_EQ(r.code, kVerified);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("PASS"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(json_path));
  EXPECT_EQ(j["subject"], "lemma24");
  EXPECT_EQ(j["examined_fault_sets"], 130);
  EXPECT_EQ(invoke({"verify", "--subject", "lemma24", "-n", "3", "--format", "csv", "--out",
                    csv_path.string()})
                .code,
            kVerified);
  EXPECT_EQ(slurp(csv_path).rfind("subject,n,mode,seed", 0), 0u);
  EXPECT_EQ(invoke({"verify", "--subject", "lemma24", "-n", "3", "--out", "/nonexistent/x"}).code,
            kIo);
}

TEST(CliVerifyTest, SameSeedSameReport) {
  const std::vector<std::string> args = {"verify", "--subject", "thm31",  "-n",
                                         "5",      "--mode",    "sampled", "--trials",
                                         "200",    "--seed",    "99",      "--pairs",
                                         "20"};
  const Result a = invoke(args);
  auto more = args;
  more.insert(more.end(), {"--workers", "3"});
  const Result b = invoke(more);
  EXPECT_EQ(a.code, kVerified);
  EXPECT_EQ(without_timing(a.out), without_timing(b.out));
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 99);
  EXPECT_EQ(nlohmann::json::parse(a.out)["budget"]["pairs_per_set"], 20);
}

TEST(CliConfigTest, PrecedenceCliOverFileOverDefaults) {
  const RunSettings file = parse_config_json(
      R"({"n": 4, "subject": "thm31", "mode": "sampled", "seed": 5, "trials": 40, "pairs": "all",
          "workers": 2, "format": "csv", "force": true})");
  RunSettings cli;
  cli.trials = 10;
  cli.pairs = 7;
  const RunConfig c = resolve(cli, file, 555);
  EXPECT_EQ(c.n, 4);
  EXPECT_EQ(c.subject, "thm31");
  EXPECT_EQ(c.mode, SweepMode::kSampled);
  EXPECT_EQ(c.seed, std::optional<std::uint64_t>(5));
  EXPECT_EQ(c.trials, 10u);
  EXPECT_EQ(c.pairs, 7u);
  EXPECT_EQ(c.workers, 2u);
  EXPECT_EQ(c.format, Format::kCsv);
  EXPECT_TRUE(c.force);
  EXPECT_EQ(c.budget, 555u);

  RunSettings minimal;
  minimal.n = 5;
  minimal.subject = "thm41";
  minimal.seed = 1;
  const RunConfig d = resolve(minimal, RunSettings{}, kDefaultBudget);
  EXPECT_EQ(d.mode, SweepMode::kSampled);
  EXPECT_EQ(d.pairs, 100u);
  EXPECT_EQ(d.budget, kDefaultBudget);
  minimal.n = 4;
  EXPECT_EQ(resolve(minimal, RunSettings{}, kDefaultBudget).pairs, kAllPairs);
}

TEST(CliConfigTest, RejectsBadConfig) {
  EXPECT_THROW(parse_config_json("[1]"), UsageError);
  EXPECT_THROW(parse_config_json("{"), UsageError);
  EXPECT_THROW(parse_config_json(R"({"colour": 1})"), UsageError);
  EXPECT_THROW(parse_config_json(R"({"n": -3})"), UsageError);
  EXPECT_THROW(parse_config_json(R"({"pairs": 0})"), UsageError);
  EXPECT_THROW(parse_config_json(R"({"mode": "fast"})"), UsageError);
}

TEST(CliConfigTest, ConfigFileOnCommandLine) {
  const auto path = scratch("config.json");
  spit(path, R"({"n": 3, "subject": "thm31", "max_faults": 2})");
  EXPECT_EQ(invoke({"verify", "--config", path.string()}).code, kViolation);
  EXPECT_EQ(invoke({"verify", "--config", path.string(), "--max-faults", "1"}).code, kVerified);
  EXPECT_EQ(invoke({"verify", "--config", "/nonexistent/config.json"}).code, kIo);
}

TEST(CliVerifyTest, SingleFaultSetFromFile) {
  const auto path = scratch("faults.json");
  spit(path, R"([["1234","2134"],["1234","1324"]])");
  const Result ok = invoke({"verify", "-n", "4", "--faults-file", path.string()});
  EXPECT_EQ(ok.code, kVerified);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["examined_pairs"], 276);
  spit(path, R"([["2134","2314"],["2134","2143"],["2134","3124"],["2134","4132"]])");
  EXPECT_EQ(invoke({"verify", "-n", "4", "--faults-file", path.string()}).code, kViolation);
  spit(path, R"([["1234","4321"]])");
  EXPECT_EQ(invoke({"verify", "-n", "4", "--faults-file", path.string()}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "-n", "4", "--faults-file", "/nonexistent/f.json"}).code, kIo);
  EXPECT_EQ(invoke({"verify", "-n", "4", "--subject", "thm31", "--faults-file", path.string()}).code,
            kUsage);
}

TEST(CliSharpnessTest, Examples) {
  const Result r31 = invoke({"sharpness", "31", "-n", "4"});
  EXPECT_EQ(r31.code, kVerified);
  EXPECT_NE(r31.out.find("faults=4 "), std::string::npos);
  EXPECT_NE(r31.out.find("min_deg=5 paths=4"), std::string::npos);
  const Result r41 = invoke({"sharpness", "41", "-n", "4"});
  EXPECT_EQ(r41.code, kVerified);
  EXPECT_NE(r41.out.find("faults=8 graph_min_degree=2 min_deg=5 paths=4"), std::string::npos);
  const Result r5 = invoke({"sharpness", "41", "-n", "5", "--u", "21345"});
  EXPECT_EQ(r5.code, kVerified);
  EXPECT_NE(r5.out.find("u=21345"), std::string::npos);
  EXPECT_NE(r5.out.find("faults=14 graph_min_degree=2 min_deg=7 paths=6"), std::string::npos);
  EXPECT_EQ(invoke({"sharpness", "41", "-n", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"sharpness", "32", "-n", "4"}).code, kUsage);
  EXPECT_EQ(invoke({"sharpness", "31", "-n", "4", "--u", "1123"}).code, kUsage);
}

TEST(CliPathsTest, Examples) {
  const Result r = invoke({"paths", "123", "321"});
  EXPECT_EQ(r.code, kVerified);
  EXPECT_NE(r.out.find("paths=3"), std::string::npos);
  EXPECT_NE(r.out.find("path 3:"), std::string::npos);
  EXPECT_EQ(invoke({"paths", "123", "123"}).code, kUsage);
  EXPECT_EQ(invoke({"paths", "123", "3210"}).code, kUsage);
  EXPECT_EQ(invoke({"paths", "123", "321", "-n", "4"}).code, kUsage);
  const auto path = scratch("paths_faults.json");
  spit(path, R"([["123","213"]])");
  const Result f = invoke({"paths", "123", "213", "--faults-file", path.string()});
  EXPECT_EQ(f.code, kVerified);
  EXPECT_NE(f.out.find("faults=1 min_deg=2 paths=2"), std::string::npos);
  spit(path, "not json");
  EXPECT_EQ(invoke({"paths", "123", "213", "--faults-file", path.string()}).code, kUsage);
}

TEST(CliLambdaTest, Values) {
  const Result r = invoke({"lambda", "-n", "4"});
  EXPECT_EQ(r.code, kVerified);
  EXPECT_NE(r.out.find("lambda=5"), std::string::npos);
  EXPECT_EQ(invoke({"lambda", "-n", "2"}).code, kUsage);
}

}  // namespace
}  // namespace bsstar::cli
