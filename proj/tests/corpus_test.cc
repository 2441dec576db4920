#include "namerel/corpus.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "namerel/csv.h"
#include "namerel/errors.h"
#include "namerel/normalizer.h"
#include "test_paths.h"

namespace namerel {
namespace {

std::vector<PackageRecord> Load(const std::string& text, std::string* diag = nullptr) {
  std::istringstream in(text);
  std::ostringstream err;
  auto records = LoadCorpus(in, err);
  if (diag) *diag = err.str();
  return records;
}

TEST(CsvReaderTest, QuotedFieldsAndCrlf) {
  std::istringstream in("a,b\r\n\"x, \"\"y\"\"\",\"multi\nline\"\r\nlast,\n");
  csv::Reader reader(in);
  auto header = reader.Next();
  ASSERT_TRUE(header);
  EXPECT_EQ(header->fields, (std::vector<std::string>{"a", "b"}));
  auto row = reader.Next();
  ASSERT_TRUE(row);
  EXPECT_EQ(row->line, 2u);
  EXPECT_EQ(row->fields, (std::vector<std::string>{"x, \"y\"", "multi\nline"}));
  auto last = reader.Next();
  ASSERT_TRUE(last);
  EXPECT_EQ(last->line, 4u);
  EXPECT_EQ(last->fields, (std::vector<std::string>{"last", ""}));
  EXPECT_FALSE(reader.Next());
}

TEST(CsvReaderTest, UnterminatedQuoteIsFatal) {
  std::istringstream in("a\n\"open");
  csv::Reader reader(in);
  reader.Next();
  EXPECT_THROW(reader.Next(), FormatError);
}

TEST(LoadCorpusTest, SingleRow) {
  auto records = Load("name,summary\npytracks,tracks GPS data");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "pytracks");
  EXPECT_EQ(records[0].summary, "tracks GPS data");
}

TEST(LoadCorpusTest, EmptySummaryPassesThrough) {
  auto records = Load("name,summary\nfoo,");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "foo");
  EXPECT_EQ(records[0].summary, "");
}

TEST(LoadCorpusTest, MissingColumnIsFatal) {
  try {
    Load("title,summary\nfoo,bar\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_STREQ(e.what(), "missing column name");
  }
  EXPECT_THROW(Load("name,description\nfoo,bar\n"), FormatError);
}

TEST(LoadCorpusTest, EmptyNameRowsSkippedWithRowNumber) {
  std::string diag;
  auto records = Load("name,summary\nfoo,a\n  ,b\nbar,c\n", &diag);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].name, "bar");
  EXPECT_NE(diag.find("row 3"), std::string::npos) << diag;
}

TEST(LoadCorpusTest, ColumnOrderAndExtraColumns) {
  auto records = Load("id,summary,name\n1,\"Tracks, GPS\",pytracks\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "pytracks");
  EXPECT_EQ(records[0].summary, "Tracks, GPS");
}

TEST(LoadCorpusTest, FieldsKeptVerbatim) {
  auto records = Load("name,summary\n  PyTracks ,\"  Tracks  GPS! \"\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "  PyTracks ");
  EXPECT_EQ(records[0].summary, "  Tracks  GPS! ");
}

TEST(LoadCorpusTest, UnreadableFileIsIoError) {
  EXPECT_THROW(LoadCorpusFile("/nonexistent/corpus.csv"), IoError);
}

TEST(LoadCorpusTest, RoundTripProperty) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab ,\"\n\r\txyz-!";
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  auto random_text = [&](bool nonblank) {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[pick(rng)]);
    if (nonblank) s.insert(s.begin(), 'n');
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PackageRecord> records;
    for (int i = 0; i < 5; ++i) records.push_back({random_text(true), random_text(false)});
    std::ostringstream out;
    WriteCorpus(out, records);
    EXPECT_EQ(Load(out.str()), records);
  }
}

TEST(LoadLabelsTest, ParsesRows) {
  std::istringstream in("name,primary,secondary\nfoo,3,2\n");
  auto labels = LoadLabels(in);
  ASSERT_EQ(labels.size(), 1u);
  EXPECT_EQ(labels[0], (LabeledRecord{"foo", 3, 2}));
}

TEST(LoadLabelsTest, OutOfRangeLabel) {
  std::istringstream in("name,primary,secondary\nfoo,4,2\n");
  try {
    LoadLabels(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("label out of range"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(LoadLabelsTest, NonIntegerLabel) {
  std::istringstream in("name,primary,secondary\nfoo,2.5,2\n");
  EXPECT_THROW(LoadLabels(in), FormatError);
}

TEST(LoadLabelsTest, DuplicateName) {
  std::istringstream in("name,primary,secondary\nfoo,3,2\nfoo,1,1\n");
  try {
    LoadLabels(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(LoadLabelsTest, MissingColumn) {
  std::istringstream in("name,primary\nfoo,3\n");
  EXPECT_THROW(LoadLabels(in), FormatError);
}

TEST(CorpusStatsTest, EmptyCorpus) {
  CorpusStats stats = ComputeCorpusStats({}, TokenizeSummary);
  EXPECT_EQ(stats.record_count, 0u);
  EXPECT_EQ(stats.empty_summary_count, 0u);
  EXPECT_EQ(stats.mean_summary_token_count, 0.0);
  EXPECT_TRUE(stats.top_name_tokens.empty());
}

TEST(CorpusStatsTest, TokenFrequenciesRanked) {
  // Names tokenized by separators: py x3, json x1.
  std::vector<PackageRecord> records = {
      {"py", "a b c d"}, {"py-json", "a b c d e f"}, {"py", ""}};
  CorpusStats stats = ComputeCorpusStats(records, TokenizeSummary);
  using Entry = std::pair<std::string, std::size_t>;
  EXPECT_EQ(stats.top_name_tokens, (std::vector<Entry>{{"py", 3}, {"json", 1}}));
  EXPECT_EQ(stats.empty_summary_count, 1u);
}

TEST(CorpusStatsTest, MeanSummaryTokens) {
  std::vector<PackageRecord> records = {{"a", "one two three four"},
                                        {"b", "one two three four five six"}};
  EXPECT_DOUBLE_EQ(ComputeCorpusStats(records, TokenizeSummary).mean_summary_token_count,
                   5.0);
}

TEST(CorpusStatsTest, TiesAreLexicographicAndCountsSum) {
  std::vector<PackageRecord> records = {{"zeta-alpha-mid", ""}, {"mid-zeta", ""},
                                        {"alpha", ""}};
  CorpusStats stats = ComputeCorpusStats(records, TokenizeSummary);
  using Entry = std::pair<std::string, std::size_t>;
  EXPECT_EQ(stats.top_name_tokens,
            (std::vector<Entry>{{"alpha", 2}, {"mid", 2}, {"zeta", 2}}));
  std::size_t sum = 0;
  for (const auto& [token, count] : stats.top_name_tokens) sum += count;
  std::size_t produced = 0;
  for (const auto& r : records) produced += TokenizeSummary(r.name).size();
  EXPECT_EQ(sum, produced);
}

}  // namespace
}  // namespace namerel
