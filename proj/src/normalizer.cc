#include "namerel/normalizer.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "namerel/errors.h"

namespace namerel {
namespace {

bool IsAsciiAlnum(unsigned char c) { return c < 0x80 && std::isalnum(c) != 0; }

char ToLower(unsigned char c) { return static_cast<char>(std::tolower(c)); }

std::string TrimLower(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return ToLower(c); });
  return out;
}

// Splits on anything that is not an ASCII letter or digit, lowercasing.
std::vector<std::string> AlnumRuns(std::string_view text) {
  std::vector<std::string> runs;
  std::string current;
  for (unsigned char c : text) {
    if (IsAsciiAlnum(c)) {
      current.push_back(ToLower(c));
    } else if (!current.empty()) {
      runs.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) runs.push_back(std::move(current));
  return runs;
}

bool HasVowel(std::string_view s) {
  return s.find_first_of("aeiouy") != std::string_view::npos;
}

}  // namespace

WordSet::WordSet(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    std::string word = TrimLower(w);
    if (!word.empty()) words_.insert(std::move(word));
  }
}

WordSet WordSet::Load(std::istream& in) {
  if (!in) throw IoError("word list stream is not readable");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw IoError("read failure on word list stream");
  return WordSet(lines);
}

WordSet WordSet::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return Load(in);
}

CommonWordSet DefaultCommonWords() { return CommonWordSet({"py", "python"}); }

std::vector<SuffixRule> DefaultSuffixRules() {
  return {
      {"sses", "ss", 2, false}, {"ies", "y", 2, false},
      {"ss", "ss", 2, false},   {"us", "us", 2, false},
      {"is", "is", 2, false},   {"eed", "eed", 2, false},
      {"s", "", 3, false},      {"ing", "", 3, true},
      {"ed", "", 3, true},
  };
}

LemmaRules::LemmaRules() : suffix_rules_(DefaultSuffixRules()) {}

LemmaRules::LemmaRules(std::map<std::string, std::string, std::less<>> exceptions,
                       std::vector<SuffixRule> suffix_rules)
    : exceptions_(std::move(exceptions)), suffix_rules_(std::move(suffix_rules)) {
  // Exception targets are base forms; the suffix rules must not strip them.
  for (const auto& [word, lemma] : exceptions_) base_forms_.insert(lemma);
}

LemmaRules LemmaRules::Load(std::istream& in) {
  if (!in) throw IoError("lemma exception stream is not readable");
  std::map<std::string, std::string, std::less<>> exceptions;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("lemma exceptions line " + std::to_string(line_no) +
                        ": expected word<TAB>lemma");
    }
    std::string word = TrimLower(std::string_view(line).substr(0, tab));
    std::string lemma = TrimLower(std::string_view(line).substr(tab + 1));
    if (word.empty() || lemma.empty()) {
      throw FormatError("lemma exceptions line " + std::to_string(line_no) +
                        ": empty word or lemma");
    }
    exceptions.insert_or_assign(std::move(word), std::move(lemma));
  }
  if (in.bad()) throw IoError("read failure on lemma exception stream");
  return LemmaRules(std::move(exceptions), DefaultSuffixRules());
}

LemmaRules LemmaRules::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return Load(in);
}

const SuffixRule* LemmaRules::FirstMatch(std::string_view word) const {
  for (const SuffixRule& rule : suffix_rules_) {
    if (!word.ends_with(rule.suffix)) continue;
    const std::string_view stem = word.substr(0, word.size() - rule.suffix.size());
    if (stem.size() < rule.min_stem_length) continue;
    if (rule.stem_needs_vowel && !HasVowel(stem)) continue;
    return &rule;
  }
  return nullptr;
}

bool LemmaRules::IsFixedPoint(std::string_view word) const {
  if (auto it = exceptions_.find(word); it != exceptions_.end()) {
    return it->second == word;
  }
  if (base_forms_.contains(word)) return true;
  const SuffixRule* rule = FirstMatch(word);
  return rule == nullptr || rule->suffix == rule->replacement;
}

std::string LemmaRules::Lemmatize(std::string_view word) const {
  if (auto it = exceptions_.find(word); it != exceptions_.end()) return it->second;
  if (base_forms_.contains(word)) return std::string(word);

  for (const SuffixRule& rule : suffix_rules_) {
    if (!word.ends_with(rule.suffix)) continue;
    const std::string_view stem = word.substr(0, word.size() - rule.suffix.size());
    if (stem.size() < rule.min_stem_length) continue;
    if (rule.stem_needs_vowel && !HasVowel(stem)) continue;
    std::string candidate = std::string(stem) + rule.replacement;
    if (candidate == word || IsFixedPoint(candidate)) return candidate;
  }
  return std::string(word);
}

std::vector<std::string> TokenizeSummary(std::string_view text) {
  return AlnumRuns(text);
}

std::vector<std::string> TokenizeName(const SegmentationModel& model,
                                      std::string_view name) {
  std::vector<std::string> tokens;
  for (const std::string& chunk : AlnumRuns(name)) {
    for (std::string& piece : Segment(model, chunk)) tokens.push_back(std::move(piece));
  }
  return tokens;
}

std::vector<std::string> FilterTokens(const std::vector<std::string>& tokens,
                                      const StopwordSet& stopwords,
                                      const CommonWordSet& common) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (!stopwords.contains(t) && !common.contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace namerel
