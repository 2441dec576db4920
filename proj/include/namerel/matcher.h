#ifndef NAMEREL_MATCHER_H_
#define NAMEREL_MATCHER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namerel {

struct FuzzyMatch {
  std::string candidate;
  int ratio = 0;  // 0..100

  friend bool operator==(const FuzzyMatch&, const FuzzyMatch&) = default;
};

// Unit-cost insert/delete/substitute distance over bytes.
std::size_t Levenshtein(std::string_view a, std::string_view b);

// round_half_up(100 * (1 - distance / max(|a|, |b|))); 100 when both empty.
// Only identical strings score 100; unequal ones are capped at 99.
int SimilarityRatio(std::string_view a, std::string_view b);

// Highest-ratio candidate; the earliest one wins ties. nullopt when there
// are no candidates.
std::optional<FuzzyMatch> BestFuzzyMatch(std::string_view token,
                                         std::span<const std::string> candidates);

// Every contiguous window of n tokens, n_min <= n <= min(n_max, size),
// joined without a separator. Shorter windows come first.
std::vector<std::string> Ngrams(std::span<const std::string> tokens,
                                std::size_t n_min, std::size_t n_max);

// First characters of every contiguous window of n tokens, same ordering
// as Ngrams. Requires 2 <= n_min <= n_max.
std::vector<std::string> Acronyms(std::span<const std::string> tokens,
                                  std::size_t n_min, std::size_t n_max);

}  // namespace namerel

#endif  // NAMEREL_MATCHER_H_
