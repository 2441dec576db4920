#include "namerel/matcher.h"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace namerel {

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitution});
      diagonal = above;
    }
  }
  return row[b.size()];
}

int SimilarityRatio(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 100;
  const std::size_t distance = Levenshtein(a, b);
  const std::size_t same = longest - distance;
  // round_half_up(100 * same / longest) in integers.
  const int ratio = static_cast<int>((200 * same + longest) / (2 * longest));
  // Past 200 characters one edit would round up to 100; reserve 100 for
  // identical strings.
  return distance > 0 ? std::min(ratio, 99) : ratio;
}

std::optional<FuzzyMatch> BestFuzzyMatch(std::string_view token,
                                         std::span<const std::string> candidates) {
  std::optional<FuzzyMatch> best;
  for (const std::string& candidate : candidates) {
    const int ratio = SimilarityRatio(token, candidate);
    if (!best || ratio > best->ratio) {
      best = FuzzyMatch{candidate, ratio};
      if (ratio == 100) break;
    }
  }
  return best;
}

std::vector<std::string> Ngrams(std::span<const std::string> tokens,
                                std::size_t n_min, std::size_t n_max) {
  assert(n_min >= 1 && n_min <= n_max);
  std::vector<std::string> grams;
  const std::size_t top = std::min(n_max, tokens.size());
  for (std::size_t n = n_min; n <= top; ++n) {
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      std::string gram;
      for (std::size_t k = start; k < start + n; ++k) gram += tokens[k];
      grams.push_back(std::move(gram));
    }
  }
  return grams;
}

std::vector<std::string> Acronyms(std::span<const std::string> tokens,
                                  std::size_t n_min, std::size_t n_max) {
  assert(n_min >= 2 && n_min <= n_max);
  std::vector<std::string> out;
  const std::size_t top = std::min(n_max, tokens.size());
  for (std::size_t n = n_min; n <= top; ++n) {
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      std::string initials;
      for (std::size_t k = start; k < start + n; ++k) {
        if (!tokens[k].empty()) initials.push_back(tokens[k].front());
      }
      out.push_back(std::move(initials));
    }
  }
  return out;
}

}  // namespace namerel
