#include "namerel/report.h"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "namerel/csv.h"
#include "namerel/errors.h"

namespace namerel {
namespace {

using nlohmann::json;

constexpr const char* kBucketNames[4] = {"[0,25)", "[25,50)", "[50,75)", "[75,100]"};

std::string Printf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Printf(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  const int size = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out(static_cast<std::size_t>(size), '\0');
  std::vsnprintf(out.data(), out.size() + 1, fmt, args);
  va_end(args);
  return out;
}

std::string Fixed4(double value) { return Printf("%.4f", value); }

json DistributionJson(const Distribution& d) {
  return json{{"total", d.total},
              {"zero_count", d.zero_count},
              {"hundred_count", d.hundred_count},
              {"bucket_counts", d.bucket_counts},
              {"bottom_half_share", d.bottom_half_share}};
}

const std::vector<std::string> kDistributionCsvHeader = {
    "total",        "zero_count",    "hundred_count",  "bucket_0_25",
    "bucket_25_50", "bucket_50_75",  "bucket_75_100",  "bottom_half_share"};

std::vector<std::string> DistributionCsvFields(const Distribution& d) {
  std::vector<std::string> fields = {std::to_string(d.total),
                                     std::to_string(d.zero_count),
                                     std::to_string(d.hundred_count)};
  for (std::size_t c : d.bucket_counts) fields.push_back(std::to_string(c));
  fields.push_back(Fixed4(d.bottom_half_share));
  return fields;
}

std::size_t Widest(std::span<const std::string> values, std::size_t floor) {
  std::size_t width = floor;
  for (const std::string& v : values) width = std::max(width, v.size());
  return width;
}

std::string AgreementText(double a) { return Printf("%.1f", a); }

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

int ScoreToLabel(int score) {
  if (score < 0 || score > 100) {
    throw std::out_of_range("score " + std::to_string(score) +
                            " outside [0, 100]");
  }
  return score >= 75 ? 3 : score / 25;
}

Distribution ComputeDistribution(std::span<const int> scores) {
  Distribution d;
  d.total = scores.size();
  for (int s : scores) {
    ++d.bucket_counts[static_cast<std::size_t>(ScoreToLabel(s))];
    if (s == 0) ++d.zero_count;
    if (s == 100) ++d.hundred_count;
  }
  if (d.total > 0) {
    d.bottom_half_share = static_cast<double>(d.bucket_counts[0] + d.bucket_counts[1]) /
                          static_cast<double>(d.total);
  }
  return d;
}

ModeComparison CompareModes(std::vector<ModeScores> per_mode,
                            std::vector<std::string> names) {
  ModeComparison cmp;
  const std::size_t records = per_mode.empty() ? names.size() : per_mode.front().scores.size();
  for (const ModeScores& m : per_mode) {
    if (m.scores.size() != records) {
      throw FormatError("mode '" + m.mode + "' has " + std::to_string(m.scores.size()) +
                        " scores, expected " + std::to_string(records));
    }
  }
  if (!names.empty() && names.size() != records) {
    throw FormatError("name list does not align with score lists");
  }

  for (ModeScores& m : per_mode) {
    cmp.modes.push_back(m.mode);
    cmp.distributions.push_back(ComputeDistribution(m.scores));
    cmp.scores.push_back(std::move(m.scores));
  }
  cmp.names = std::move(names);
  cmp.deltas.resize(records);
  for (std::size_t r = 0; r < records; ++r) {
    for (std::size_t m = 1; m < cmp.scores.size(); ++m) {
      cmp.deltas[r].push_back(cmp.scores[m][r] - cmp.scores[0][r]);
    }
  }
  return cmp;
}

ValidationOutcome Validate(std::span<const ScoreResult> results,
                           std::span<const LabeledRecord> labels) {
  std::unordered_map<std::string_view, std::size_t> by_name;
  std::unordered_map<std::string_view, std::size_t> name_count;
  for (std::size_t i = 0; i < results.size(); ++i) {
    by_name.emplace(results[i].name, i);
    ++name_count[results[i].name];
  }

  ValidationOutcome outcome;
  double sum = 0.0;
  for (const LabeledRecord& label : labels) {
    auto it = by_name.find(label.name);
    if (it == by_name.end()) {
      throw FormatError("label references unknown record '" + label.name + "'");
    }
    if (name_count[label.name] > 1) {
      throw FormatError("label for '" + label.name + "' matches more than one record");
    }
    RecordAgreement rec;
    rec.name = label.name;
    rec.primary_label = label.primary_label;
    rec.secondary_label = label.secondary_label;
    rec.predicted_label = ScoreToLabel(results[it->second].score);
    if (rec.predicted_label == label.primary_label) {
      rec.agreement = 1.0;
    } else if (rec.predicted_label == label.secondary_label) {
      rec.agreement = 0.5;
    }
    sum += rec.agreement;
    outcome.per_record.push_back(std::move(rec));
  }
  if (!labels.empty()) outcome.mean_agreement = sum / static_cast<double>(labels.size());
  return outcome;
}

void RenderDistribution(std::ostream& out, const Distribution& d,
                        ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      out << json{{"distribution", DistributionJson(d)}}.dump(2) << '\n';
      return;
    case ReportFormat::kCsv:
      csv::WriteRow(out, kDistributionCsvHeader);
      csv::WriteRow(out, DistributionCsvFields(d));
      return;
    case ReportFormat::kText:
      out << Printf("%-12s %8s\n", "bucket", "count");
      for (std::size_t b = 0; b < 4; ++b) {
        out << Printf("%-12s %8zu\n", kBucketNames[b], d.bucket_counts[b]);
      }
      out << Printf("%-12s %8zu\n", "zero", d.zero_count);
      out << Printf("%-12s %8zu\n", "hundred", d.hundred_count);
      out << Printf("%-12s %8zu\n", "total", d.total);
      out << Printf("%-12s %8s\n", "bottom_half", Fixed4(d.bottom_half_share).c_str());
      return;
  }
}

void RenderScores(std::ostream& out, std::span<const ScoreResult> results,
                  ReportFormat format) {
  std::vector<int> scores;
  scores.reserve(results.size());
  for (const ScoreResult& r : results) scores.push_back(r.score);
  const Distribution dist = ComputeDistribution(scores);

  switch (format) {
    case ReportFormat::kJson:
      for (const ScoreResult& r : results) {
        out << json{{"name", r.name},
                    {"score", r.score},
                    {"mode", ModeName(r.mode)},
                    {"flags", SerializeFlags(r.flags)},
                    {"credits", SerializeCredits(r.credits)}}
                   .dump()
            << '\n';
      }
      out << json{{"distribution", DistributionJson(dist)}}.dump() << '\n';
      return;
    case ReportFormat::kCsv:
      csv::WriteRow(out, {"name", "score", "mode", "flags", "credits"});
      for (const ScoreResult& r : results) {
        csv::WriteRow(out, {r.name, std::to_string(r.score), std::string(ModeName(r.mode)),
                            SerializeFlags(r.flags), SerializeCredits(r.credits)});
      }
      out << '\n';
      RenderDistribution(out, dist, ReportFormat::kCsv);
      return;
    case ReportFormat::kText: {
      std::vector<std::string> names;
      std::vector<std::string> flags;
      for (const ScoreResult& r : results) {
        names.push_back(r.name);
        flags.push_back(SerializeFlags(r.flags));
      }
      const int name_w = static_cast<int>(Widest(names, 4));
      const int flag_w = static_cast<int>(Widest(flags, 5));
      out << Printf("%-*s  %5s  %-8s  %-*s  %s\n", name_w, "name", "score", "mode",
                    flag_w, "flags", "credits");
      for (std::size_t i = 0; i < results.size(); ++i) {
        const ScoreResult& r = results[i];
        out << Printf("%-*s  %5d  %-8s  %-*s  %s\n", name_w, r.name.c_str(), r.score,
                      std::string(ModeName(r.mode)).c_str(), flag_w, flags[i].c_str(),
                      SerializeCredits(r.credits).c_str());
      }
      out << '\n';
      RenderDistribution(out, dist, ReportFormat::kText);
      return;
    }
  }
}

void RenderComparison(std::ostream& out, const ModeComparison& cmp,
                      ReportFormat format) {
  const std::size_t records = cmp.deltas.size();
  auto record_name = [&](std::size_t r) {
    return cmp.names.empty() ? "#" + std::to_string(r + 1) : cmp.names[r];
  };

  switch (format) {
    case ReportFormat::kJson: {
      json modes = json::object();
      for (std::size_t m = 0; m < cmp.modes.size(); ++m) {
        modes[cmp.modes[m]] = DistributionJson(cmp.distributions[m]);
      }
      json rows = json::array();
      for (std::size_t r = 0; r < records; ++r) {
        json scores = json::object();
        json deltas = json::object();
        for (std::size_t m = 0; m < cmp.modes.size(); ++m) {
          scores[cmp.modes[m]] = cmp.scores[m][r];
          if (m > 0) deltas[cmp.modes[m]] = cmp.deltas[r][m - 1];
        }
        rows.push_back({{"name", record_name(r)}, {"scores", scores}, {"deltas", deltas}});
      }
      out << json{{"modes", modes}, {"records", rows}}.dump(2) << '\n';
      return;
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"mode"};
      header.insert(header.end(), kDistributionCsvHeader.begin(),
                    kDistributionCsvHeader.end());
      csv::WriteRow(out, header);
      for (std::size_t m = 0; m < cmp.modes.size(); ++m) {
        std::vector<std::string> row = {cmp.modes[m]};
        auto fields = DistributionCsvFields(cmp.distributions[m]);
        row.insert(row.end(), fields.begin(), fields.end());
        csv::WriteRow(out, row);
      }
      out << '\n';
      std::vector<std::string> rec_header = {"name"};
      for (const std::string& m : cmp.modes) rec_header.push_back(m);
      for (std::size_t m = 1; m < cmp.modes.size(); ++m) {
        rec_header.push_back("delta_" + cmp.modes[m]);
      }
      csv::WriteRow(out, rec_header);
      for (std::size_t r = 0; r < records; ++r) {
        std::vector<std::string> row = {record_name(r)};
        for (const auto& s : cmp.scores) row.push_back(std::to_string(s[r]));
        for (int d : cmp.deltas[r]) row.push_back(std::to_string(d));
        csv::WriteRow(out, row);
      }
      return;
    }
    case ReportFormat::kText: {
      out << Printf("%-10s %7s %6s %8s %7s %8s %8s %9s %12s\n", "mode", "total", "zero",
                    "hundred", "[0,25)", "[25,50)", "[50,75)", "[75,100]", "bottom_half");
      for (std::size_t m = 0; m < cmp.modes.size(); ++m) {
        const Distribution& d = cmp.distributions[m];
        out << Printf("%-10s %7zu %6zu %8zu %7zu %8zu %8zu %9zu %12s\n",
                      cmp.modes[m].c_str(), d.total, d.zero_count, d.hundred_count,
                      d.bucket_counts[0], d.bucket_counts[1], d.bucket_counts[2],
                      d.bucket_counts[3], Fixed4(d.bottom_half_share).c_str());
      }
      out << '\n';
      std::vector<std::string> names;
      for (std::size_t r = 0; r < records; ++r) names.push_back(record_name(r));
      const int name_w = static_cast<int>(Widest(names, 4));
      std::string line = Printf("%-*s", name_w, "name");
      for (const std::string& m : cmp.modes) line += Printf(" %9s", m.c_str());
      for (std::size_t m = 1; m < cmp.modes.size(); ++m) {
        line += Printf(" %9s", ("d_" + cmp.modes[m]).c_str());
      }
      out << line << '\n';
      for (std::size_t r = 0; r < records; ++r) {
        line = Printf("%-*s", name_w, names[r].c_str());
        for (const auto& s : cmp.scores) line += Printf(" %9d", s[r]);
        for (int d : cmp.deltas[r]) line += Printf(" %+9d", d);
        out << line << '\n';
      }
      return;
    }
  }
}

void RenderValidation(std::ostream& out, std::span<const ModeValidation> modes,
                      ReportFormat format) {
  const std::size_t records = modes.empty() ? 0 : modes.front().outcome.per_record.size();

  switch (format) {
    case ReportFormat::kJson: {
      json doc = json::object();
      for (const ModeValidation& mv : modes) {
        json rows = json::array();
        for (const RecordAgreement& a : mv.outcome.per_record) {
          rows.push_back({{"name", a.name},
                          {"primary", a.primary_label},
                          {"secondary", a.secondary_label},
                          {"predicted", a.predicted_label},
                          {"agreement", a.agreement}});
        }
        doc[mv.mode] = {{"mean_agreement", mv.outcome.mean_agreement}, {"records", rows}};
      }
      out << json{{"validation", doc}}.dump(2) << '\n';
      return;
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"name", "primary", "secondary"};
      for (const ModeValidation& mv : modes) {
        header.push_back(mv.mode + "_predicted");
        header.push_back(mv.mode + "_agreement");
      }
      csv::WriteRow(out, header);
      for (std::size_t r = 0; r < records; ++r) {
        const RecordAgreement& first = modes.front().outcome.per_record[r];
        std::vector<std::string> row = {first.name, std::to_string(first.primary_label),
                                        std::to_string(first.secondary_label)};
        for (const ModeValidation& mv : modes) {
          const RecordAgreement& a = mv.outcome.per_record[r];
          row.push_back(std::to_string(a.predicted_label));
          row.push_back(AgreementText(a.agreement));
        }
        csv::WriteRow(out, row);
      }
      out << '\n';
      csv::WriteRow(out, {"mode", "mean_agreement"});
      for (const ModeValidation& mv : modes) {
        csv::WriteRow(out, {mv.mode, Fixed4(mv.outcome.mean_agreement)});
      }
      return;
    }
    case ReportFormat::kText: {
      std::vector<std::string> names;
      if (!modes.empty()) {
        for (const RecordAgreement& a : modes.front().outcome.per_record) {
          names.push_back(a.name);
        }
      }
      const int name_w = static_cast<int>(Widest(names, 4));
      std::string line = Printf("%-*s %4s %4s", name_w, "name", "pri", "sec");
      for (const ModeValidation& mv : modes) {
        line += Printf(" %9s %5s", mv.mode.c_str(), "agree");
      }
      out << line << '\n';
      for (std::size_t r = 0; r < records; ++r) {
        const RecordAgreement& first = modes.front().outcome.per_record[r];
        line = Printf("%-*s %4d %4d", name_w, first.name.c_str(), first.primary_label,
                      first.secondary_label);
        for (const ModeValidation& mv : modes) {
          const RecordAgreement& a = mv.outcome.per_record[r];
          line += Printf(" %9d %5s", a.predicted_label, AgreementText(a.agreement).c_str());
        }
        out << line << '\n';
      }
      out << '\n';
      for (const ModeValidation& mv : modes) {
        out << Printf("mean agreement %-10s %s\n", mv.mode.c_str(),
                      Fixed4(mv.outcome.mean_agreement).c_str());
      }
      return;
    }
  }
}

void RenderStats(std::ostream& out, const CorpusStats& stats, std::size_t top,
                 ReportFormat format) {
  const std::size_t shown = std::min(top, stats.top_name_tokens.size());
  switch (format) {
    case ReportFormat::kJson: {
      json tokens = json::array();
      for (std::size_t i = 0; i < shown; ++i) {
        tokens.push_back({{"token", stats.top_name_tokens[i].first},
                          {"count", stats.top_name_tokens[i].second}});
      }
      out << json{{"stats",
                   {{"record_count", stats.record_count},
                    {"empty_summary_count", stats.empty_summary_count},
                    {"mean_summary_token_count", stats.mean_summary_token_count},
                    {"top_name_tokens", tokens}}}}
                 .dump(2)
          << '\n';
      return;
    }
    case ReportFormat::kCsv:
      csv::WriteRow(out, {"metric", "value"});
      csv::WriteRow(out, {"record_count", std::to_string(stats.record_count)});
      csv::WriteRow(out, {"empty_summary_count", std::to_string(stats.empty_summary_count)});
      csv::WriteRow(out, {"mean_summary_token_count", Fixed4(stats.mean_summary_token_count)});
      out << '\n';
      csv::WriteRow(out, {"token", "count"});
      for (std::size_t i = 0; i < shown; ++i) {
        csv::WriteRow(out, {stats.top_name_tokens[i].first,
                            std::to_string(stats.top_name_tokens[i].second)});
      }
      return;
    case ReportFormat::kText:
      out << Printf("%-24s %zu\n", "records", stats.record_count);
      out << Printf("%-24s %zu\n", "empty summaries", stats.empty_summary_count);
      out << Printf("%-24s %s\n", "mean summary tokens",
                    Fixed4(stats.mean_summary_token_count).c_str());
      out << "top name tokens:\n";
      for (std::size_t i = 0; i < shown; ++i) {
        out << Printf("  %-22s %zu\n", stats.top_name_tokens[i].first.c_str(),
                      stats.top_name_tokens[i].second);
      }
      return;
  }
}

}  // namespace namerel
