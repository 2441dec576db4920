#ifndef NAMEREL_CORPUS_H_
#define NAMEREL_CORPUS_H_

#include <cstddef>
#include <functional>
#include <iostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namerel {

// One (name, summary) pair, the unit of scoring. Fields are kept verbatim.
struct PackageRecord {
  std::string name;
  std::string summary;

  friend bool operator==(const PackageRecord&, const PackageRecord&) = default;
};

// Manual relevance labels for one record, each in {0,1,2,3}.
struct LabeledRecord {
  std::string name;
  int primary_label = 0;
  int secondary_label = 0;

  friend bool operator==(const LabeledRecord&, const LabeledRecord&) = default;
};

struct CorpusStats {
  std::size_t record_count = 0;
  std::size_t empty_summary_count = 0;
  double mean_summary_token_count = 0.0;
  // Descending frequency, ties in lexicographic order.
  std::vector<std::pair<std::string, std::size_t>> top_name_tokens;
};

using Tokenizer = std::function<std::vector<std::string>(std::string_view)>;

// Reads a CSV corpus with a header naming at least `name` and `summary`.
// Rows whose name is blank are reported on `diag` (with the 1-based file
// line) and skipped. Throws FormatError for a missing column and IoError
// for an unreadable stream.
std::vector<PackageRecord> LoadCorpus(std::istream& in,
                                      std::ostream& diag = std::cerr);
std::vector<PackageRecord> LoadCorpusFile(const std::string& path,
                                          std::ostream& diag = std::cerr);

// Writes records back out as `name,summary` CSV.
void WriteCorpus(std::ostream& out, std::span<const PackageRecord> records);

// Reads a `name,primary,secondary` label file. Out-of-range labels,
// non-integer labels and duplicate names are fatal.
std::vector<LabeledRecord> LoadLabels(std::istream& in);
std::vector<LabeledRecord> LoadLabelsFile(const std::string& path);

// Summary statistics used to spot corpus-wide boilerplate tokens in names.
// Summary token counts use TokenizeSummary.
CorpusStats ComputeCorpusStats(std::span<const PackageRecord> records,
                               const Tokenizer& name_tokenizer);

}  // namespace namerel

#endif  // NAMEREL_CORPUS_H_
