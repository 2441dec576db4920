#include "namerel/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "test_paths.h"

namespace namerel {
namespace {

namespace fs = std::filesystem;
using testing::TestData;

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.status = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path TempFile(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / ("namerel_cli_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

TEST(CliTest, ScoreEmitsRowsAndDistribution) {
  CliRun r = Cli({"score", "--mode", "baseline", "-i", TestData("compare_corpus.csv"),
               "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("name,score,mode,flags,credits\n"), std::string::npos);
  EXPECT_NE(r.out.find("pytracks,100,baseline,,tracks:lemma:1.00\n"), std::string::npos);
  EXPECT_NE(r.out.find("foo,0,baseline,empty_summary,foo:none:0.00\n"), std::string::npos);
  EXPECT_NE(r.out.find("total,zero_count"), std::string::npos);
}

TEST(CliTest, JsonLinesScoreOutput) {
  CliRun r = Cli({"score", "-i", TestData("compare_corpus.csv"), "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  nlohmann::json last;
  while (std::getline(lines, line)) {
    last = nlohmann::json::parse(line);
    if (last.contains("name")) ++records;
  }
  EXPECT_EQ(records, 6);
  EXPECT_EQ(last.at("distribution").at("total"), 6);
}

TEST(CliTest, InvalidThresholdIsUsageError) {
  CliRun r = Cli({"score", "--mode", "full", "--fuzzy-threshold", "101", "-i",
               TestData("compare_corpus.csv")});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).status, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(Cli({"score", "--mode", "best", "-i", "x.csv"}).status, kExitUsage);
  EXPECT_EQ(Cli({"score"}).status, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).status, kExitOk);
}

TEST(CliTest, MissingInputIsFailure) {
  CliRun r = Cli({"stats", "-i", "/nonexistent/corpus.csv"});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_NE(r.err.find("/nonexistent/corpus.csv"), std::string::npos);
}

TEST(CliTest, FormatErrorIsFailure) {
  const auto bad = TempFile("bad.csv", "title,summary\nfoo,bar\n");
  CliRun r = Cli({"score", "-i", bad.string()});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_NE(r.err.find("missing column name"), std::string::npos);
}

TEST(CliTest, CompareHundredsNonDecreasing) {
  CliRun r = Cli({"compare", "-i", TestData("compare_corpus.csv"), "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& modes = doc.at("modes");
  EXPECT_LE(modes.at("baseline").at("hundred_count"), modes.at("ngram").at("hundred_count"));
  EXPECT_LE(modes.at("ngram").at("hundred_count"), modes.at("full").at("hundred_count"));
  EXPECT_GE(modes.at("baseline").at("zero_count"), modes.at("ngram").at("zero_count"));
  EXPECT_GE(modes.at("ngram").at("zero_count"), modes.at("full").at("zero_count"));
}

TEST(CliTest, CompareEmptyCorpus) {
  const auto empty = TempFile("empty.csv", "name,summary\n");
  CliRun r = Cli({"compare", "-i", empty.string(), "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("modes").at("full").at("total"), 0);
  EXPECT_TRUE(doc.at("records").empty());
}

TEST(CliTest, ValidateFixtureMeans) {
  CliRun r = Cli({"validate", "-i", TestData("validation_corpus.csv"), "-l",
               TestData("validation_labels.csv"), "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out).at("validation");
  EXPECT_DOUBLE_EQ(doc.at("baseline").at("mean_agreement").get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc.at("ngram").at("mean_agreement").get<double>(), 0.7);
  EXPECT_DOUBLE_EQ(doc.at("full").at("mean_agreement").get<double>(), 0.8);
}

TEST(CliTest, ValidateAgainstOwnFullPredictions) {
  CliRun scored = Cli({"score", "-i", TestData("validation_corpus.csv"), "--format", "json"});
  ASSERT_EQ(scored.status, kExitOk);
  std::string labels = "name,primary,secondary\n";
  std::istringstream lines(scored.out);
  std::string line;
  while (std::getline(lines, line)) {
    const auto row = nlohmann::json::parse(line);
    if (!row.contains("name")) continue;
    const int s = row.at("score");
    const int label = s >= 75 ? 3 : s / 25;
    labels += row.at("name").get<std::string>() + "," + std::to_string(label) + ",0\n";
  }
  const auto path = TempFile("own_labels.csv", labels);
  CliRun r = Cli({"validate", "-i", TestData("validation_corpus.csv"), "-l", path.string(),
               "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out).at("validation");
  EXPECT_EQ(doc.at("full").at("mean_agreement"), 1.0);
}

TEST(CliTest, ValidateRequiresLabels) {
  EXPECT_EQ(Cli({"validate", "-i", TestData("validation_corpus.csv")}).status, kExitUsage);
}

TEST(CliTest, ValidateUnknownLabelNamesRecord) {
  const auto labels = TempFile("stray_labels.csv", "name,primary,secondary\nnope,1,1\n");
  CliRun r = Cli({"validate", "-i", TestData("validation_corpus.csv"), "-l", labels.string()});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_NE(r.err.find("nope"), std::string::npos);
}

TEST(CliTest, StatsTopToken) {
  CliRun r = Cli({"stats", "-i", TestData("stats_corpus.csv"), "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto stats = nlohmann::json::parse(r.out).at("stats");
  EXPECT_EQ(stats.at("record_count"), 4);
  EXPECT_DOUBLE_EQ(stats.at("mean_summary_token_count").get<double>(), 3.25);
  EXPECT_EQ(stats.at("top_name_tokens").at(0).at("token"), "py");
  EXPECT_EQ(stats.at("top_name_tokens").at(0).at("count"), 3);
}

TEST(CliTest, StatsEmptyCorpus) {
  const auto empty = TempFile("empty_stats.csv", "name,summary\n");
  CliRun r = Cli({"stats", "-i", empty.string(), "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("record_count,0\n"), std::string::npos);
}

TEST(CliTest, OutputFile) {
  const fs::path out = fs::temp_directory_path() / "namerel_cli_test_out.txt";
  fs::remove(out);
  CliRun r = Cli({"compare", "-i", TestData("compare_corpus.csv"), "-o", out.string()});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), Cli({"compare", "-i", TestData("compare_corpus.csv")}).out);
}

TEST(CliTest, JobsDoNotChangeOutput) {
  const std::vector<std::string> base = {"score", "-i", TestData("validation_corpus.csv"),
                                         "--format", "csv"};
  auto with_jobs = [&](const char* n) {
    auto args = base;
    args.push_back("--jobs");
    args.push_back(n);
    return Cli(args).out;
  };
  EXPECT_EQ(with_jobs("1"), with_jobs("4"));
  EXPECT_EQ(with_jobs("1"), Cli(base).out);
}

TEST(CliTest, WordlistFromEnvironment) {
  ::setenv(kWordlistEnv, TestData("tiny_words.txt").c_str(), 1);
  CliRun tiny = Cli({"stats", "-i", TestData("stats_corpus.csv"), "--format", "csv"});
  ::unsetenv(kWordlistEnv);
  CliRun shipped = Cli({"stats", "-i", TestData("stats_corpus.csv"), "--format", "csv"});
  ASSERT_EQ(tiny.status, kExitOk);
  // "requests" is not in the tiny list, so it is split differently.
  EXPECT_NE(tiny.out, shipped.out);
}

TEST(CliTest, CustomCommonWords) {
  const auto common = TempFile("common.txt", "json\n");
  CliRun s = Cli({"score", "-i", TestData("stats_corpus.csv"), "--common-words",
               common.string(), "--format", "csv"});
  ASSERT_EQ(s.status, kExitOk) << s.err;
  // "py" is scored again once the common-word set no longer contains it,
  // while "json" drops out of both sides.
  EXPECT_NE(s.out.find("py-json,0,full,,py:none:0.00\n"), std::string::npos) << s.out;
}

}  // namespace
}  // namespace namerel
