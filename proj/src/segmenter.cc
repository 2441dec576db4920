#include "namerel/segmenter.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>

#include "namerel/errors.h"

namespace namerel {
namespace {

bool IsAlnumWord(std::string_view word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; });
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

SegmentationModel SegmentationModel::FromWords(
    const std::vector<std::string>& words, std::ostream& diag) {
  SegmentationModel model;
  model.ranked_words_.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string word = Trim(words[i]);
    if (!IsAlnumWord(word)) {
      diag << "wordlist entry " << (i + 1) << ": '" << words[i]
           << "' is not alphanumeric, skipped\n";
      continue;
    }
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (model.rank_index_.contains(word)) continue;
    model.rank_index_.emplace(word, model.ranked_words_.size());
    model.max_word_length_ = std::max(model.max_word_length_, word.size());
    model.ranked_words_.push_back(std::move(word));
  }
  model.log_vocab_ =
      std::log(std::log(static_cast<double>(model.ranked_words_.size()) + 2.0));
  return model;
}

SegmentationModel SegmentationModel::Load(std::istream& in, std::ostream& diag) {
  if (!in) throw IoError("wordlist stream is not readable");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw IoError("read failure on wordlist stream");
  return FromWords(lines, diag);
}

SegmentationModel SegmentationModel::LoadFile(const std::string& path,
                                              std::ostream& diag) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open wordlist " + path);
  return Load(in, diag);
}

std::optional<std::size_t> SegmentationModel::Rank(std::string_view word) const {
  auto it = rank_index_.find(word);
  if (it == rank_index_.end()) return std::nullopt;
  return it->second;
}

double SegmentationModel::WordCost(std::string_view word) const {
  if (auto rank = Rank(word)) {
    // ln((r+1) * ln(N+2)) split into a sum so the vocabulary term is cached.
    return std::log(static_cast<double>(*rank) + 1.0) + log_vocab_;
  }
  return kUnknownUnitCost * static_cast<double>(word.size());
}

std::vector<std::string> Segment(const SegmentationModel& model,
                                 std::string_view chunk) {
  const std::size_t n = chunk.size();
  if (n == 0) return {};

  struct Cell {
    double cost = std::numeric_limits<double>::infinity();
    std::size_t tokens = 0;
    std::size_t last_length = 0;
  };
  // best[i] describes the cheapest partition of chunk[0, i).
  std::vector<Cell> best(n + 1);
  best[0].cost = 0.0;

  const std::size_t window = std::max(model.max_word_length(), n);
  for (std::size_t end = 1; end <= n; ++end) {
    Cell& cell = best[end];
    const std::size_t longest = std::min(window, end);
    for (std::size_t len = 1; len <= longest; ++len) {
      const Cell& prev = best[end - len];
      const double cost = prev.cost + model.WordCost(chunk.substr(end - len, len));
      const std::size_t tokens = prev.tokens + 1;
      const bool better =
          cost < cell.cost ||
          (cost == cell.cost &&
           (tokens < cell.tokens ||
            (tokens == cell.tokens && len > cell.last_length)));
      if (better) cell = {cost, tokens, len};
    }
  }

  std::vector<std::string> out(best[n].tokens);
  std::size_t end = n;
  for (std::size_t i = out.size(); i-- > 0;) {
    const std::size_t len = best[end].last_length;
    out[i] = std::string(chunk.substr(end - len, len));
    end -= len;
  }
  return out;
}

double PartitionCost(const SegmentationModel& model,
                     const std::vector<std::string>& tokens) {
  double total = 0.0;
  for (const std::string& t : tokens) total += model.WordCost(t);
  return total;
}

}  // namespace namerel
