#ifndef NAMEREL_SEGMENTER_H_
#define NAMEREL_SEGMENTER_H_

#include <cstddef>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace namerel {

// Cost charged per character of a word missing from the wordlist. Chosen so
// that any in-vocabulary decomposition beats leaving characters unknown.
inline constexpr double kUnknownUnitCost = 100.0;

// Frequency-ranked wordlist used to split concatenated names. Immutable
// once built; share one instance across threads freely.
class SegmentationModel {
 public:
  SegmentationModel() = default;

  // Words in descending frequency. Entries are lowercased; duplicates keep
  // their first rank; empty or non-alphanumeric entries are reported on
  // `diag` and dropped.
  static SegmentationModel FromWords(const std::vector<std::string>& words,
                                     std::ostream& diag = std::cerr);

  // One word per line, most frequent first.
  static SegmentationModel Load(std::istream& in, std::ostream& diag = std::cerr);
  static SegmentationModel LoadFile(const std::string& path,
                                    std::ostream& diag = std::cerr);

  const std::vector<std::string>& ranked_words() const { return ranked_words_; }
  std::size_t vocab_size() const { return ranked_words_.size(); }
  std::size_t max_word_length() const { return max_word_length_; }
  std::optional<std::size_t> Rank(std::string_view word) const;

  // ln((rank + 1) * ln(vocab_size + 2)) for known words,
  // kUnknownUnitCost * length otherwise. Lower is more probable.
  double WordCost(std::string_view word) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> ranked_words_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>>
      rank_index_;
  std::size_t max_word_length_ = 0;
  double log_vocab_ = 0.0;  // ln(ln(vocab_size + 2))
};

// Splits a lowercase alphanumeric chunk into the minimum-cost partition.
// Ties on cost go to fewer tokens, then to the longer final token. The
// concatenation of the result always equals `chunk`.
std::vector<std::string> Segment(const SegmentationModel& model,
                                 std::string_view chunk);

// Total WordCost of a partition, summed left to right.
double PartitionCost(const SegmentationModel& model,
                     const std::vector<std::string>& tokens);

}  // namespace namerel

#endif  // NAMEREL_SEGMENTER_H_
