#include "namerel/scorer.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "namerel/matcher.h"

namespace namerel {
namespace {

// Rank of a tier in the exact > ngram > acronym > lemma > fuzzy order.
int Priority(MatchVia via) { return static_cast<int>(via); }

MatchVia ViaForKind(SummaryIndex::Kind kind) {
  switch (kind) {
    case SummaryIndex::Kind::kWord:
      return MatchVia::kExact;
    case SummaryIndex::Kind::kNgram:
      return MatchVia::kNgram;
    case SummaryIndex::Kind::kAcronym:
      return MatchVia::kAcronym;
  }
  return MatchVia::kNone;
}

// Keeps the larger credit; on equal credit the higher-priority tier.
void Offer(TokenCredit& current, int percent, MatchVia via, std::string_view text) {
  if (percent > current.credit_percent ||
      (percent == current.credit_percent && percent > 0 &&
       Priority(via) < Priority(current.matched_via))) {
    current.credit_percent = percent;
    current.matched_via = via;
    current.matched_text = std::string(text);
  }
}

bool NameLemmaEnabled(const ScoreConfig& config) {
  return config.mode == Mode::kFull || !config.strict_baseline;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kBaseline:
      return "baseline";
    case Mode::kNgram:
      return "ngram";
    case Mode::kFull:
      return "full";
  }
  return "?";
}

std::optional<Mode> ParseMode(std::string_view name) {
  for (Mode m : kAllModes) {
    if (ModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view MatchViaName(MatchVia via) {
  switch (via) {
    case MatchVia::kExact:
      return "exact";
    case MatchVia::kNgram:
      return "ngram";
    case MatchVia::kAcronym:
      return "acronym";
    case MatchVia::kLemma:
      return "lemma";
    case MatchVia::kFuzzy:
      return "fuzzy";
    case MatchVia::kNone:
      return "none";
  }
  return "?";
}

void ScoreConfig::Validate() const {
  if (fuzzy_threshold < 0 || fuzzy_threshold > 100) {
    throw std::invalid_argument("fuzzy threshold must be in [0, 100]");
  }
  if (summary_ngram_max < 2) {
    throw std::invalid_argument("summary n-gram maximum must be at least 2");
  }
  if (acronym_max < 2) {
    throw std::invalid_argument("acronym maximum must be at least 2");
  }
}

void SummaryIndex::Add(std::string entry, Kind kind) {
  auto [it, inserted] = kinds_.try_emplace(entry, kind);
  if (inserted) {
    entries_.push_back(std::move(entry));
  } else if (static_cast<int>(kind) < static_cast<int>(it->second)) {
    it->second = kind;
  }
}

std::optional<SummaryIndex::Kind> SummaryIndex::Find(std::string_view entry) const {
  auto it = kinds_.find(std::string(entry));
  if (it == kinds_.end()) return std::nullopt;
  return it->second;
}

SummaryIndex PrepareSummary(const PackageRecord& record, const ScoreConfig& config,
                            const Models& models) {
  SummaryIndex index;
  const std::vector<std::string> tokens = FilterTokens(
      TokenizeSummary(record.summary), models.stopwords, models.common_words);
  if (tokens.empty()) {
    index.empty_summary = true;
    return index;
  }

  for (const std::string& token : tokens) {
    index.Add(models.lemma_rules.Lemmatize(token), SummaryIndex::Kind::kWord);
  }
  if (config.mode == Mode::kBaseline) return index;

  for (std::string& gram : Ngrams(tokens, 2, config.summary_ngram_max)) {
    index.Add(std::move(gram), SummaryIndex::Kind::kNgram);
  }
  if (config.acronyms_enabled) {
    for (std::string& initials : Acronyms(tokens, 2, config.acronym_max)) {
      index.Add(std::move(initials), SummaryIndex::Kind::kAcronym);
    }
  }
  return index;
}

TokenCredit ComputeTokenCredit(std::string_view name_token,
                               const SummaryIndex& index, const ScoreConfig& config,
                               const LemmaRules& lemma_rules) {
  TokenCredit credit;
  credit.name_token = std::string(name_token);

  if (auto kind = index.Find(name_token)) {
    Offer(credit, 100, ViaForKind(*kind), name_token);
  }
  if (credit.credit_percent < 100 && NameLemmaEnabled(config)) {
    const std::string lemma = lemma_rules.Lemmatize(name_token);
    if (lemma != name_token && index.contains(lemma)) {
      Offer(credit, 100, MatchVia::kLemma, lemma);
    }
  }
  if (credit.credit_percent < 100 && config.mode == Mode::kFull) {
    if (auto match = BestFuzzyMatch(name_token, index.entries())) {
      if (match->ratio > 0 && match->ratio >= config.fuzzy_threshold) {
        Offer(credit, match->ratio, MatchVia::kFuzzy, match->candidate);
      }
    }
  }
  return credit;
}

ScoreResult ScoreRecord(const PackageRecord& record, const ScoreConfig& config,
                        const Models& models) {
  ScoreResult result;
  result.name = record.name;
  result.mode = config.mode;

  const std::vector<std::string> name_tokens =
      FilterTokens(TokenizeName(models.segmentation, record.name), models.stopwords,
                   models.common_words);
  result.name_token_count = name_tokens.size();

  const SummaryIndex index = PrepareSummary(record, config, models);
  if (index.empty_summary) result.flags |= kEmptySummary;
  if (name_tokens.empty()) {
    result.flags |= kEmptyNameTokens;
    return result;
  }

  result.credits.reserve(name_tokens.size());
  for (const std::string& token : name_tokens) {
    result.credits.push_back(
        ComputeTokenCredit(token, index, config, models.lemma_rules));
  }

  if (config.mode != Mode::kBaseline && !index.empty()) {
    const std::size_t count = name_tokens.size();
    for (std::size_t n = 2; n <= count; ++n) {
      for (std::size_t start = 0; start + n <= count; ++start) {
        std::string gram;
        for (std::size_t k = start; k < start + n; ++k) gram += name_tokens[k];
        if (!index.contains(gram)) continue;
        for (std::size_t k = start; k < start + n; ++k) {
          Offer(result.credits[k], 100, MatchVia::kNgram, gram);
        }
      }
    }
  }

  if (index.empty_summary) return result;  // nothing can match; score stays 0

  std::size_t total_percent = 0;
  for (const TokenCredit& c : result.credits) total_percent += c.credit_percent;
  const std::size_t count = result.credits.size();
  // round_half_up(total_percent / count)
  result.score = static_cast<int>((2 * total_percent + count) / (2 * count));
  return result;
}

std::vector<ScoreResult> ScoreCorpus(std::span<const PackageRecord> records,
                                     const ScoreConfig& config, const Models& models,
                                     std::size_t jobs) {
  std::vector<ScoreResult> results(records.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(records.size(), 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      results[i] = ScoreRecord(records[i], config, models);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      results[i] = ScoreRecord(records[i], config, models);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return results;
}

std::string SerializeCredits(const std::vector<TokenCredit>& credits) {
  std::string out;
  for (const TokenCredit& c : credits) {
    if (!out.empty()) out += ';';
    char number[16];
    std::snprintf(number, sizeof(number), "%d.%02d", c.credit_percent / 100,
                  c.credit_percent % 100);
    out += c.name_token;
    out += ':';
    out += MatchViaName(c.matched_via);
    out += ':';
    out += number;
  }
  return out;
}

std::string SerializeFlags(unsigned flags) {
  std::string out;
  if (flags & kEmptyNameTokens) out += "empty_name_tokens";
  if (flags & kEmptySummary) {
    if (!out.empty()) out += '|';
    out += "empty_summary";
  }
  return out;
}

}  // namespace namerel
