#include "namerel/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <unordered_set>

#include "namerel/csv.h"
#include "namerel/errors.h"
#include "namerel/normalizer.h"

namespace namerel {
namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  });
}

std::size_t RequireColumn(const csv::Row& header, std::string_view column) {
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    if (header.fields[i] == column) return i;
  }
  throw FormatError("missing column " + std::string(column));
}

std::string FieldOrEmpty(const csv::Row& row, std::size_t index) {
  return index < row.fields.size() ? row.fields[index] : std::string();
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

int ParseLabel(const std::string& text, std::size_t line) {
  int value = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("line " + std::to_string(line) + ": label '" + text +
                      "' is not an integer");
  }
  if (value < 0 || value > 3) {
    throw FormatError("line " + std::to_string(line) + ": label out of range (" +
                      text + ")");
  }
  return value;
}

}  // namespace

std::vector<PackageRecord> LoadCorpus(std::istream& in, std::ostream& diag) {
  if (!in) throw IoError("input stream is not readable");
  csv::Reader reader(in);
  std::optional<csv::Row> header = reader.Next();
  if (!header) throw FormatError("missing column name");
  const std::size_t name_col = RequireColumn(*header, "name");
  const std::size_t summary_col = RequireColumn(*header, "summary");

  std::vector<PackageRecord> records;
  while (std::optional<csv::Row> row = reader.Next()) {
    std::string name = FieldOrEmpty(*row, name_col);
    if (IsBlank(name)) {
      diag << "row " << row->line << ": empty name, row skipped\n";
      continue;
    }
    records.push_back({std::move(name), FieldOrEmpty(*row, summary_col)});
  }
  return records;
}

std::vector<PackageRecord> LoadCorpusFile(const std::string& path,
                                          std::ostream& diag) {
  std::ifstream in = OpenOrThrow(path);
  return LoadCorpus(in, diag);
}

void WriteCorpus(std::ostream& out, std::span<const PackageRecord> records) {
  csv::WriteRow(out, {"name", "summary"});
  for (const PackageRecord& r : records) csv::WriteRow(out, {r.name, r.summary});
}

std::vector<LabeledRecord> LoadLabels(std::istream& in) {
  if (!in) throw IoError("label stream is not readable");
  csv::Reader reader(in);
  std::optional<csv::Row> header = reader.Next();
  if (!header) throw FormatError("missing column name");
  const std::size_t name_col = RequireColumn(*header, "name");
  const std::size_t primary_col = RequireColumn(*header, "primary");
  const std::size_t secondary_col = RequireColumn(*header, "secondary");

  std::vector<LabeledRecord> labels;
  std::unordered_set<std::string> seen;
  while (std::optional<csv::Row> row = reader.Next()) {
    LabeledRecord label;
    label.name = FieldOrEmpty(*row, name_col);
    if (IsBlank(label.name)) {
      throw FormatError("line " + std::to_string(row->line) + ": empty name");
    }
    label.primary_label = ParseLabel(FieldOrEmpty(*row, primary_col), row->line);
    label.secondary_label =
        ParseLabel(FieldOrEmpty(*row, secondary_col), row->line);
    if (!seen.insert(label.name).second) {
      throw FormatError("line " + std::to_string(row->line) +
                        ": duplicate name '" + label.name + "'");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

std::vector<LabeledRecord> LoadLabelsFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return LoadLabels(in);
}

CorpusStats ComputeCorpusStats(std::span<const PackageRecord> records,
                               const Tokenizer& name_tokenizer) {
  CorpusStats stats;
  stats.record_count = records.size();
  if (records.empty()) return stats;

  std::map<std::string, std::size_t> name_counts;
  std::size_t summary_tokens = 0;
  for (const PackageRecord& r : records) {
    if (IsBlank(r.summary)) ++stats.empty_summary_count;
    summary_tokens += TokenizeSummary(r.summary).size();
    for (std::string& token : name_tokenizer(r.name)) ++name_counts[std::move(token)];
  }
  stats.mean_summary_token_count =
      static_cast<double>(summary_tokens) / static_cast<double>(records.size());

  stats.top_name_tokens.assign(name_counts.begin(), name_counts.end());
  // name_counts is already lexicographic, so a stable sort keeps ties ordered.
  std::stable_sort(stats.top_name_tokens.begin(), stats.top_name_tokens.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return stats;
}

}  // namespace namerel
