#ifndef NAMEREL_REPORT_H_
#define NAMEREL_REPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "namerel/corpus.h"
#include "namerel/scorer.h"

namespace namerel {

enum class ReportFormat { kText, kJson, kCsv };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// Labels 0..3 for the half-open ranges [0,25) [25,50) [50,75) [75,100].
// Throws std::out_of_range outside [0, 100].
int ScoreToLabel(int score);

struct Distribution {
  std::size_t total = 0;
  std::size_t zero_count = 0;
  std::size_t hundred_count = 0;
  std::array<std::size_t, 4> bucket_counts{};  // indexed by ScoreToLabel
  double bottom_half_share = 0.0;              // share of scores below 50

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

Distribution ComputeDistribution(std::span<const int> scores);

struct ModeScores {
  std::string mode;
  std::vector<int> scores;
};

// Distributions side by side plus per-record movement against the first
// mode. deltas[r][m - 1] = scores[m][r] - scores[0][r].
struct ModeComparison {
  std::vector<std::string> modes;
  std::vector<Distribution> distributions;
  std::vector<std::string> names;  // may be empty
  std::vector<std::vector<int>> scores;
  std::vector<std::vector<int>> deltas;
};

// Throws FormatError when the score lists (or `names`, if given) differ in
// length.
ModeComparison CompareModes(std::vector<ModeScores> per_mode,
                            std::vector<std::string> names = {});

struct RecordAgreement {
  std::string name;
  int primary_label = 0;
  int secondary_label = 0;
  int predicted_label = 0;
  double agreement = 0.0;  // 1, 0.5 or 0
};

struct ValidationOutcome {
  std::vector<RecordAgreement> per_record;  // label-file order
  double mean_agreement = 0.0;
};

// Predicted label == primary scores 1, == secondary scores 0.5, else 0.
// Throws FormatError when a label names no result, or names more than one.
ValidationOutcome Validate(std::span<const ScoreResult> results,
                           std::span<const LabeledRecord> labels);

struct ModeValidation {
  std::string mode;
  ValidationOutcome outcome;
};

// Renderers. Output is deterministic; JSON keys are sorted.
void RenderDistribution(std::ostream& out, const Distribution& dist,
                        ReportFormat format);
void RenderScores(std::ostream& out, std::span<const ScoreResult> results,
                  ReportFormat format);
void RenderComparison(std::ostream& out, const ModeComparison& comparison,
                      ReportFormat format);
void RenderValidation(std::ostream& out, std::span<const ModeValidation> modes,
                      ReportFormat format);
void RenderStats(std::ostream& out, const CorpusStats& stats, std::size_t top,
                 ReportFormat format);

}  // namespace namerel

#endif  // NAMEREL_REPORT_H_
