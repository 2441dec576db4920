#include "namerel/cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "namerel/corpus.h"
#include "namerel/errors.h"
#include "namerel/report.h"
#include "namerel/scorer.h"

#ifndef NAMEREL_DATA_DIR
#define NAMEREL_DATA_DIR "data"
#endif

namespace namerel {
namespace {

struct RunOptions {
  std::string input_path;
  std::string output_path;
  std::string labels_path;
  std::string mode = "full";
  int fuzzy_threshold = 25;
  std::string wordlist_path;
  std::string stopword_path;
  std::string common_word_path;
  std::string lemma_path;
  bool strict_baseline = false;
  bool no_acronyms = false;
  std::string format = "text";
  std::size_t jobs = 0;
  std::size_t top = 20;
};

Models LoadModels(const RunOptions& opt, std::ostream& err) {
  Models models;
  std::string wordlist = opt.wordlist_path;
  if (wordlist.empty()) {
    const char* env = std::getenv(kWordlistEnv);
    wordlist = (env != nullptr && *env != '\0') ? env
                                                : DefaultDataDir() + "/english_words.txt";
  }
  models.segmentation = SegmentationModel::LoadFile(wordlist, err);
  models.stopwords = StopwordSet::LoadFile(
      opt.stopword_path.empty() ? DefaultDataDir() + "/stopwords.txt" : opt.stopword_path);
  if (!opt.common_word_path.empty()) {
    models.common_words = CommonWordSet::LoadFile(opt.common_word_path);
  }
  models.lemma_rules = LemmaRules::LoadFile(
      opt.lemma_path.empty() ? DefaultDataDir() + "/lemma_exceptions.txt" : opt.lemma_path);
  return models;
}

ScoreConfig MakeConfig(const RunOptions& opt, Mode mode) {
  ScoreConfig config;
  config.mode = mode;
  config.fuzzy_threshold = opt.fuzzy_threshold;
  config.strict_baseline = opt.strict_baseline;
  config.acronyms_enabled = !opt.no_acronyms;
  config.Validate();
  return config;
}

std::size_t Jobs(const RunOptions& opt) {
  if (opt.jobs > 0) return opt.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PackageRecord> LoadInput(const RunOptions& opt, std::ostream& err) {
  return LoadCorpusFile(opt.input_path, err);
}

void RunScore(const RunOptions& opt, ReportFormat format, std::ostream& out,
              std::ostream& err) {
  const ScoreConfig config = MakeConfig(opt, *ParseMode(opt.mode));
  const Models models = LoadModels(opt, err);
  const auto records = LoadInput(opt, err);
  RenderScores(out, ScoreCorpus(records, config, models, Jobs(opt)), format);
}

void RunCompare(const RunOptions& opt, ReportFormat format, std::ostream& out,
                std::ostream& err) {
  const Models models = LoadModels(opt, err);
  const auto records = LoadInput(opt, err);
  std::vector<ModeScores> per_mode;
  for (Mode mode : kAllModes) {
    ModeScores ms{std::string(ModeName(mode)), {}};
    for (const ScoreResult& r :
         ScoreCorpus(records, MakeConfig(opt, mode), models, Jobs(opt))) {
      ms.scores.push_back(r.score);
    }
    per_mode.push_back(std::move(ms));
  }
  std::vector<std::string> names;
  for (const PackageRecord& r : records) names.push_back(r.name);
  RenderComparison(out, CompareModes(std::move(per_mode), std::move(names)), format);
}

void RunValidate(const RunOptions& opt, ReportFormat format, std::ostream& out,
                 std::ostream& err) {
  const Models models = LoadModels(opt, err);
  const auto records = LoadInput(opt, err);
  const auto labels = LoadLabelsFile(opt.labels_path);
  std::vector<ModeValidation> outcomes;
  for (Mode mode : kAllModes) {
    const auto results = ScoreCorpus(records, MakeConfig(opt, mode), models, Jobs(opt));
    outcomes.push_back({std::string(ModeName(mode)), Validate(results, labels)});
  }
  RenderValidation(out, outcomes, format);
}

void RunStats(const RunOptions& opt, ReportFormat format, std::ostream& out,
              std::ostream& err) {
  const Models models = LoadModels(opt, err);
  const auto records = LoadInput(opt, err);
  const CorpusStats stats = ComputeCorpusStats(records, [&](std::string_view name) {
    return TokenizeName(models.segmentation, name);
  });
  RenderStats(out, stats, opt.top, format);
}

void AddCommonOptions(CLI::App& cmd, RunOptions& opt) {
  cmd.add_option("-i,--input", opt.input_path, "Corpus CSV with name,summary columns")
      ->required();
  cmd.add_option("-o,--output", opt.output_path, "Write the report here instead of stdout");
  cmd.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd.add_option("--wordlist", opt.wordlist_path,
                 std::string("Frequency-ranked wordlist (default: $") + kWordlistEnv +
                     " or the shipped English list)");
  cmd.add_option("--stopwords", opt.stopword_path, "Stopword file, one per line");
  cmd.add_option("--common-words", opt.common_word_path,
                 "Corpus-specific common words, one per line (default: py, python)");
  cmd.add_option("--lemma-exceptions", opt.lemma_path, "word<TAB>lemma exception table");
  cmd.add_option("-j,--jobs", opt.jobs, "Scoring threads (0 = hardware concurrency)");
}

void AddScoringOptions(CLI::App& cmd, RunOptions& opt) {
  cmd.add_option("--fuzzy-threshold", opt.fuzzy_threshold,
                 "Minimum fuzzy ratio that earns credit")
      ->check(CLI::Range(0, 100));
  cmd.add_flag("--strict-baseline", opt.strict_baseline,
               "Compare name tokens unlemmatized in baseline and ngram modes");
  cmd.add_flag("--no-acronyms", opt.no_acronyms, "Do not index summary acronyms");
}

}  // namespace

std::string DefaultDataDir() { return NAMEREL_DATA_DIR; }

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunOptions opt;
  CLI::App app{"Scores how well package names are reflected in their summaries."};
  app.name("namerel");
  app.require_subcommand(1);

  CLI::App* score = app.add_subcommand("score", "Score every record with one pipeline");
  AddCommonOptions(*score, opt);
  AddScoringOptions(*score, opt);
  score->add_option("--mode", opt.mode, "Pipeline: baseline, ngram or full")
      ->check(CLI::IsMember({"baseline", "ngram", "full"}));

  CLI::App* compare = app.add_subcommand("compare", "Run all three pipelines side by side");
  AddCommonOptions(*compare, opt);
  AddScoringOptions(*compare, opt);

  CLI::App* validate =
      app.add_subcommand("validate", "Agreement of each pipeline with manual labels");
  AddCommonOptions(*validate, opt);
  AddScoringOptions(*validate, opt);
  validate->add_option("-l,--labels", opt.labels_path, "Labels CSV: name,primary,secondary")
      ->required();

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics and frequent name tokens");
  AddCommonOptions(*stats, opt);
  stats->add_option("--top", opt.top, "How many name tokens to list");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "namerel: " << e.what() << '\n';
    return kExitUsage;
  }

  const ReportFormat format = *ParseReportFormat(opt.format);
  try {
    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& sink = opt.output_path.empty() ? out : static_cast<std::ostream&>(buffer);

    if (score->parsed()) {
      RunScore(opt, format, sink, err);
    } else if (compare->parsed()) {
      RunCompare(opt, format, sink, err);
    } else if (validate->parsed()) {
      RunValidate(opt, format, sink, err);
    } else {
      RunStats(opt, format, sink, err);
    }

    if (!opt.output_path.empty()) {
      file.open(opt.output_path, std::ios::binary);
      if (!file) throw IoError("cannot write " + opt.output_path);
      file << buffer.str();
      if (!file.flush()) throw IoError("write failed on " + opt.output_path);
    }
  } catch (const std::invalid_argument& e) {
    err << "namerel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "namerel: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace namerel
