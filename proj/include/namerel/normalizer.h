#ifndef NAMEREL_NORMALIZER_H_
#define NAMEREL_NORMALIZER_H_

#include <cstddef>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "namerel/segmenter.h"

namespace namerel {

// A set of lowercase tokens removed before matching. Used both for English
// stopwords and for corpus-specific boilerplate such as "py" and "python".
class WordSet {
 public:
  WordSet() = default;
  // Entries are trimmed and lowercased; blank entries are dropped.
  explicit WordSet(const std::vector<std::string>& words);

  static WordSet Load(std::istream& in);
  static WordSet LoadFile(const std::string& path);

  bool contains(std::string_view word) const { return words_.contains(word); }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

using StopwordSet = WordSet;
using CommonWordSet = WordSet;

// {"py", "python"}: the boilerplate tokens of Python package names.
CommonWordSet DefaultCommonWords();

// Suffix rewrite applied by Lemmatize. `stem` is the word minus `suffix`;
// the rule matches only when stem.size() >= min_stem_length and, when
// stem_needs_vowel is set, the stem contains a vowel.
struct SuffixRule {
  std::string suffix;
  std::string replacement;
  std::size_t min_stem_length = 2;
  bool stem_needs_vowel = false;
};

// The compiled-in rule table, in application order:
//   sses -> ss, ies -> y, then identity guards for -ss, -us, -is, -eed so
//   those endings are never stripped, then -s -> "" (stem >= 3),
//   -ing -> "" and -ed -> "" (stem >= 3, stem must contain a vowel).
// Undoubling ("logging" -> "log") and silent-e restoration ("loving" ->
// "love") are carried by the exception table.
std::vector<SuffixRule> DefaultSuffixRules();

class LemmaRules {
 public:
  LemmaRules();  // default suffix rules, no exceptions
  LemmaRules(std::map<std::string, std::string, std::less<>> exceptions,
             std::vector<SuffixRule> suffix_rules);

  // Reads `word<TAB>lemma` lines and pairs them with the default rules.
  // Blank lines and lines starting with '#' are ignored. Throws FormatError
  // on a malformed line.
  static LemmaRules Load(std::istream& in);
  static LemmaRules LoadFile(const std::string& path);

  const std::map<std::string, std::string, std::less<>>& exceptions() const {
    return exceptions_;
  }
  const std::vector<SuffixRule>& suffix_rules() const { return suffix_rules_; }

  // Exceptions win. Otherwise the first matching rule applies, provided its
  // output is itself a fixed point; a rule whose output would be rewritten
  // again is passed over. Unmatched words come back unchanged.
  std::string Lemmatize(std::string_view word) const;

 private:
  const SuffixRule* FirstMatch(std::string_view word) const;
  bool IsFixedPoint(std::string_view word) const;

  std::map<std::string, std::string, std::less<>> exceptions_;
  std::set<std::string, std::less<>> base_forms_;
  std::vector<SuffixRule> suffix_rules_;
};

// Lowercased ASCII alphanumeric runs, in order. Every other byte separates.
std::vector<std::string> TokenizeSummary(std::string_view text);

// Lowercases the name, splits on non-alphanumerics and segments each chunk.
std::vector<std::string> TokenizeName(const SegmentationModel& model,
                                      std::string_view name);

// Drops tokens found in either set, keeping the survivors' order.
std::vector<std::string> FilterTokens(const std::vector<std::string>& tokens,
                                      const StopwordSet& stopwords,
                                      const CommonWordSet& common);

}  // namespace namerel

#endif  // NAMEREL_NORMALIZER_H_
