#ifndef NAMEREL_SCORER_H_
#define NAMEREL_SCORER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "namerel/corpus.h"
#include "namerel/normalizer.h"
#include "namerel/segmenter.h"

namespace namerel {

// The three incremental pipelines.
//   kBaseline: membership of name tokens in the lemmatized summary.
//   kNgram:    adds summary n-grams/acronyms and name-side n-gram checks.
//   kFull:     adds name-token lemmatization and fuzzy matching.
enum class Mode { kBaseline, kNgram, kFull };

inline constexpr Mode kAllModes[] = {Mode::kBaseline, Mode::kNgram, Mode::kFull};

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Match tiers, highest priority first.
enum class MatchVia { kExact, kNgram, kAcronym, kLemma, kFuzzy, kNone };

std::string_view MatchViaName(MatchVia via);

struct ScoreConfig {
  Mode mode = Mode::kFull;
  int fuzzy_threshold = 25;  // fuzzy ratios below this earn nothing
  std::size_t summary_ngram_max = 3;
  std::size_t acronym_max = 5;
  bool acronyms_enabled = true;
  // Without this, baseline and ngram modes also compare the lemma of each
  // name token against the summary. With it, only kFull does.
  bool strict_baseline = false;

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

// Everything the pipelines read. Immutable; share across threads.
struct Models {
  SegmentationModel segmentation;
  StopwordSet stopwords;
  CommonWordSet common_words = DefaultCommonWords();
  LemmaRules lemma_rules;
};

// Matchable forms of one summary.
class SummaryIndex {
 public:
  enum class Kind { kWord, kNgram, kAcronym };

  // Adds `entry` unless present; a repeated entry keeps the strongest kind.
  void Add(std::string entry, Kind kind);

  std::optional<Kind> Find(std::string_view entry) const;
  bool contains(std::string_view entry) const { return Find(entry).has_value(); }

  // Distinct entries in insertion order: lemmas, then n-grams, then acronyms.
  const std::vector<std::string>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool empty_summary = false;

 private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, Kind> kinds_;
};

struct TokenCredit {
  std::string name_token;
  int credit_percent = 0;  // credit in hundredths, 0..100
  MatchVia matched_via = MatchVia::kNone;
  std::string matched_text;

  double credit() const { return credit_percent / 100.0; }
};

enum ScoreFlag : unsigned {
  kNoFlags = 0,
  kEmptyNameTokens = 1u << 0,
  kEmptySummary = 1u << 1,
};

struct ScoreResult {
  std::string name;
  int score = 0;  // 0..100
  Mode mode = Mode::kFull;
  std::vector<TokenCredit> credits;
  std::size_t name_token_count = 0;
  unsigned flags = kNoFlags;
};

// Tokenize, drop stopwords and common words, lemmatize. In kNgram and kFull
// the index also receives summary n-grams and acronyms built over the
// filtered tokens before lemmatization.
SummaryIndex PrepareSummary(const PackageRecord& record, const ScoreConfig& config,
                            const Models& models);

// Per-token tiers: exact membership, lemma membership and fuzzy matching.
// Name-side n-grams span several tokens and are applied by ScoreRecord.
TokenCredit ComputeTokenCredit(std::string_view name_token,
                               const SummaryIndex& index, const ScoreConfig& config,
                               const LemmaRules& lemma_rules);

ScoreResult ScoreRecord(const PackageRecord& record, const ScoreConfig& config,
                        const Models& models);

// Scores each record, in order. `jobs` > 1 fans out over worker threads;
// the output does not depend on it.
std::vector<ScoreResult> ScoreCorpus(std::span<const PackageRecord> records,
                                     const ScoreConfig& config, const Models& models,
                                     std::size_t jobs = 1);

// "token:via:credit" triples joined with ';', credit printed as 0.00..1.00.
std::string SerializeCredits(const std::vector<TokenCredit>& credits);
// Set flag names joined with '|', empty when none.
std::string SerializeFlags(unsigned flags);

}  // namespace namerel

#endif  // NAMEREL_SCORER_H_
