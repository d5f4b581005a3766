// Copyright 2026 The Sentox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sentox/classifier.h"
#include "sentox/corpus.h"
#include "sentox/error.h"
#include "sentox/evaluation.h"
#include "sentox/lexicon.h"
#include "sentox/preprocess.h"
#include "sentox/sentiment.h"
#include "sentox/strings.h"
#include "sentox/subversion.h"

namespace sentox::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr const char* kOutputDirEnv = "SENTOX_OUTPUT_DIR";
constexpr const char* kDefaultOutputDir = "sentox_out";

// ---------------------------------------------------------------------------
// Shared option groups

struct LexiconArgs {
  std::string dir;
  std::vector<std::string> files;
  std::vector<std::string> names;

  void add_to(CLI::App* app) {
    app->add_option("--lexicon-dir", dir,
                    "Directory of unified lexicon TSVs (from `lexicon build`)");
    app->add_option("--lexicon", files, "Unified lexicon TSV (repeatable)")
        ->check(CLI::ExistingFile);
    app->add_option("--lexicons", names,
                    "Lexicon names to use, in order (default: all found)")
        ->delimiter(',');
  }

  std::vector<UnifiedLexicon> load(
      const std::vector<std::string>& default_names = {}) const {
    std::map<std::string, std::string> available;  // name -> path
    std::vector<std::string> order;
    const auto add = [&](const fs::path& p) {
      const std::string name = p.stem().string();
      if (available.emplace(name, p.string()).second) order.push_back(name);
    };
    for (const std::string& f : files) add(f);
    if (!dir.empty()) {
      if (!fs::is_directory(dir)) {
        throw UsageError("lexicon directory " + dir + " does not exist");
      }
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".tsv") {
          found.push_back(e.path());
        }
      }
      std::sort(found.begin(), found.end());
      for (const fs::path& p : found) add(p);
    }
    if (available.empty()) {
      throw UsageError("no lexicons given (use --lexicon-dir or --lexicon)");
    }

    std::vector<std::string> wanted = names;
    if (wanted.empty()) {
      wanted = default_names;
      // Fall back to everything when the preferred set is not available.
      for (const std::string& n : default_names) {
        if (available.count(n) == 0) {
          wanted = order;
          break;
        }
      }
      if (wanted.empty()) wanted = order;
    }
    std::vector<UnifiedLexicon> out;
    for (const std::string& n : wanted) {
      const auto it = available.find(n);
      if (it == available.end()) {
        throw UsageError("unknown lexicon '" + n + "'");
      }
      out.push_back(UnifiedLexicon::load_tsv(it->second));
    }
    return out;
  }
};

struct ScoringArgs {
  std::string selection = "all";
  int top_k = 3;
  bool negation = false;
  bool frequency = false;

  void add_to(CLI::App* app) {
    app->add_option("--selection", selection, "Word selection: all or top")
        ->check(CLI::IsMember({"all", "top"}));
    app->add_option("--top-k", top_k, "Words per polarity for top selection")
        ->check(CLI::PositiveNumber);
    app->add_flag("--negation", negation, "Flip scores inside negation scope");
    app->add_flag("--frequency", frequency, "Damp corpus-frequent words");
  }

  ScoringConfig config() const {
    ScoringConfig c;
    c.selection =
        selection == "top" ? WordSelection::kTopWords : WordSelection::kAllWords;
    c.top_k = top_k;
    c.use_negation = negation;
    c.use_frequency = frequency;
    c.validate();
    return c;
  }
};

CombinationStrategy strategy_from(const std::string& name) {
  const auto s = parse_strategy(name);
  if (!s) throw UsageError("unknown strategy '" + name + "'");
  return *s;
}

std::vector<std::string> texts_of(const std::vector<LabeledMessage>& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (const LabeledMessage& m : corpus) out.push_back(m.text);
  return out;
}

FrequencyTable reference_frequencies(const std::string& freq_corpus,
                                     const std::vector<LabeledMessage>& fallback,
                                     std::span<const UnifiedLexicon> lexicons) {
  const IdiomSet idioms = combined_idioms(lexicons);
  if (freq_corpus.empty()) {
    return FrequencyTable::from_texts(texts_of(fallback), idioms);
  }
  return FrequencyTable::from_texts(texts_of(load_corpus(freq_corpus)), idioms);
}

NegationCueList cues_from(const std::string& path) {
  return path.empty() ? NegationCueList::defaults()
                      : NegationCueList::load_file(path);
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << content;
}

// ---------------------------------------------------------------------------

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.name("sentox");
    app_.description(
        "Lexicon-based sentiment scoring and sentiment-aware toxicity "
        "detection");
    app_.require_subcommand(1);
    app_.set_config("--config", "", "Key-value configuration file");
    app_.option_defaults()->always_capture_default();
    add_lexicon();
    add_score();
    add_eval();
    add_perturb();
    add_experiment();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app_.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app_.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    try {
      action_();
      return kExitOk;
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const IngestionError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const DegenerateError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << '\n';
      return kExitInternal;
    }
  }

 private:
  // Flag/config value wins, then the environment, then the default.
  fs::path output_dir(const std::string& flag) const {
    std::string dir = flag;
    if (dir.empty()) {
      if (const char* env = std::getenv(kOutputDirEnv); env && *env) dir = env;
    }
    if (dir.empty()) dir = kDefaultOutputDir;
    fs::create_directories(dir);
    return dir;
  }

  void snapshot_config(const fs::path& dir) const {
    write_text_file(dir / "run_config.ini", app_.config_to_str(true, false));
  }

  // -------------------------------------------------------------------------
  // lexicon build

  void add_lexicon() {
    CLI::App* lexicon = app_.add_subcommand("lexicon", "Lexicon ingestion");
    lexicon->require_subcommand(1);
    CLI::App* build = lexicon->add_subcommand(
        "build", "Convert source lexicons to the unified TSV format");
    for (auto format :
         {LexiconFormat::kSentiWordNet, LexiconFormat::kAfinn,
          LexiconFormat::kBingLiu, LexiconFormat::kGeneralInquirer,
          LexiconFormat::kSubjectivityClues, LexiconFormat::kNrc}) {
      std::string flag(default_lexicon_name(format));
      std::replace(flag.begin(), flag.end(), '_', '-');
      build->add_option("--" + flag, lexicon_sources_[format],
                        "Source file in the original " + flag + " layout")
          ->check(CLI::ExistingFile);
    }
    build->add_option("--bing-liu-positive", bing_positive_,
                      "Bing Liu positive word list")
        ->check(CLI::ExistingFile);
    build->add_option("--bing-liu-negative", bing_negative_,
                      "Bing Liu negative word list")
        ->check(CLI::ExistingFile);
    build->add_option("--out", out_dir_, "Output directory");
    build->callback([this] { action_ = [this] { cmd_lexicon_build(); }; });
  }

  void cmd_lexicon_build() {
    std::vector<UnifiedLexicon> built;
    for (const auto& [format, path] : lexicon_sources_) {
      if (path.empty()) continue;
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      built.push_back(parse_lexicon(in, format, path));
    }
    if (!bing_positive_.empty() || !bing_negative_.empty()) {
      if (bing_positive_.empty() || bing_negative_.empty()) {
        throw UsageError("--bing-liu-positive and --bing-liu-negative go "
                         "together");
      }
      if (!lexicon_sources_[LexiconFormat::kBingLiu].empty()) {
        throw UsageError("give either --bing-liu or the two word lists");
      }
      std::ifstream pos(bing_positive_);
      std::ifstream neg(bing_negative_);
      built.push_back(parse_bing_liu_lists(pos, neg));
    }
    if (built.empty()) throw UsageError("no source lexicons given");

    const fs::path dir = output_dir(out_dir_);
    json summary;
    summary["lexicons"] = json::array();
    for (const UnifiedLexicon& lex : built) {
      std::ofstream f(dir / (lex.name() + ".tsv"), std::ios::binary);
      lex.write_tsv(f);
      summary["lexicons"].push_back({{"name", lex.name()},
                                     {"entries", lex.size()},
                                     {"terms", lex.vocabulary().size()},
                                     {"idioms", lex.idioms().size()}});
      out_ << lex.name() << ": " << lex.size() << " entries, "
           << lex.idioms().size() << " idioms\n";
    }
    const std::size_t common = common_vocabulary(built).size();
    summary["common_vocabulary"] = common;
    out_ << "common vocabulary across " << built.size()
         << " lexicons: " << common << '\n';
    write_text_file(dir / "summary.json", summary.dump(2) + "\n");
    snapshot_config(dir);
  }

  // -------------------------------------------------------------------------
  // score

  void add_score() {
    CLI::App* score = app_.add_subcommand(
        "score", "Score a JSONL corpus with one or more lexicons");
    score->add_option("--corpus", corpus_path_, "Corpus JSONL")
        ->required()
        ->check(CLI::ExistingFile);
    score_lexicons_.add_to(score);
    score_scoring_.add_to(score);
    score->add_option("--strategy", strategy_,
                      "Combination: majority, maximum or average")
        ->check(CLI::IsMember({"majority", "maximum", "average"}));
    score->add_option("--freq-corpus", freq_corpus_,
                      "Reference corpus for word frequencies (default: the "
                      "scored corpus)")
        ->check(CLI::ExistingFile);
    score->add_option("--cues", cues_path_, "Negation cue list")
        ->check(CLI::ExistingFile);
    score->add_option("--output", output_file_, "Output JSONL (default stdout)");
    score->callback([this] { action_ = [this] { cmd_score(); }; });
  }

  void cmd_score() {
    const std::vector<LabeledMessage> corpus = load_corpus(corpus_path_);
    const std::vector<UnifiedLexicon> lexicons = score_lexicons_.load();
    const FrequencyTable freqs =
        reference_frequencies(freq_corpus_, corpus, lexicons);
    const NegationCueList cues = cues_from(cues_path_);
    const LexiconEnsemble ensemble(lexicons, score_scoring_.config(), freqs,
                                   strategy_from(strategy_), cues);

    std::ofstream file;
    if (!output_file_.empty()) {
      file.open(output_file_, std::ios::binary);
      if (!file) throw UsageError("cannot write " + output_file_);
    }
    std::ostream& sink = output_file_.empty() ? out_ : file;
    for (const LabeledMessage& m : corpus) {
      const EnsembleScore s = ensemble.score(m.text);
      json line;
      line["id"] = m.id;
      json scores;
      for (const NamedSentiment& ns : s.per_lexicon) {
        scores[ns.lexicon] = {{"pos_sum", ns.sentiment.pos_sum},
                              {"neg_sum", ns.sentiment.neg_sum},
                              {"score", ns.sentiment.score()}};
      }
      line["scores"] = scores;
      line["combined"] = s.combined;
      sink << line.dump() << '\n';
    }
  }

  // -------------------------------------------------------------------------
  // eval

  void add_eval() {
    CLI::App* eval = app_.add_subcommand("eval", "Evaluation reports");
    eval->require_subcommand(1);

    CLI::App* sentiment = eval->add_subcommand(
        "sentiment", "Overlap of positive and negative score distributions");
    sentiment->add_option("--corpus", corpus_path_, "Labeled corpus JSONL")
        ->required()
        ->check(CLI::ExistingFile);
    eval_lexicons_.add_to(sentiment);
    sentiment->add_option("--strategies", strategies_,
                          "Combination strategies for the combined table")
        ->delimiter(',');
    sentiment->add_option("--combine", combine_names_,
                          "Lexicons to combine (default: sentiwordnet, afinn, "
                          "bing_liu when present)")
        ->delimiter(',');
    sentiment->add_option("--top-k", eval_top_k_, "Top-k for Top variants")
        ->check(CLI::PositiveNumber);
    sentiment->add_option("--freq-corpus", freq_corpus_,
                          "Reference corpus for word frequencies")
        ->check(CLI::ExistingFile);
    sentiment->add_option("--cues", cues_path_, "Negation cue list")
        ->check(CLI::ExistingFile);
    sentiment->add_option("--out", out_dir_, "Output directory");
    sentiment->callback([this] { action_ = [this] { cmd_eval_sentiment(); }; });

    CLI::App* corr = eval->add_subcommand(
        "correlation", "Correlation between sentiment and toxicity");
    corr->add_option("--corpus", corpus_path_, "Corpus JSONL with toxicity")
        ->required()
        ->check(CLI::ExistingFile);
    eval_lexicons_.add_to(corr);
    corr->add_option("--strategy", strategy_, "Combination strategy")
        ->check(CLI::IsMember({"majority", "maximum", "average"}));
    corr->add_option("--method", method_, "pearson or spearman")
        ->check(CLI::IsMember({"pearson", "spearman"}));
    corr->add_option("--top-k", eval_top_k_, "Top-k for Top variants")
        ->check(CLI::PositiveNumber);
    corr->add_option("--freq-corpus", freq_corpus_,
                     "Reference corpus for word frequencies")
        ->check(CLI::ExistingFile);
    corr->add_option("--cues", cues_path_, "Negation cue list")
        ->check(CLI::ExistingFile);
    corr->add_option("--out", out_dir_, "Output directory");
    corr->callback([this] { action_ = [this] { cmd_eval_correlation(); }; });

    CLI::App* scope = eval->add_subcommand(
        "scope", "Negation scope metrics against gold annotations");
    scope->add_option("--gold", gold_path_, "Gold scope JSONL")
        ->required()
        ->check(CLI::ExistingFile);
    scope->add_option("--cues", cues_path_, "Negation cue list")
        ->check(CLI::ExistingFile);
    scope->add_option("--window", window_, "Fixed window size in words")
        ->check(CLI::PositiveNumber);
    scope->add_option("--out", out_dir_, "Output directory");
    scope->callback([this] { action_ = [this] { cmd_eval_scope(); }; });
  }

  void cmd_eval_sentiment() {
    const std::vector<LabeledMessage> corpus = load_corpus(corpus_path_);
    const bool labeled = std::any_of(
        corpus.begin(), corpus.end(),
        [](const LabeledMessage& m) { return m.sentiment_label.has_value(); });
    if (!labeled) throw UsageError("corpus has no sentiment labels");

    const std::vector<UnifiedLexicon> lexicons = eval_lexicons_.load();
    const FrequencyTable freqs =
        reference_frequencies(freq_corpus_, corpus, lexicons);
    const NegationCueList cues = cues_from(cues_path_);
    GridOptions options;
    options.freqs = &freqs;
    options.cues = &cues;

    const std::vector<ScoringConfig> all = all_scoring_variants(eval_top_k_);
    const SentimentGrid per_lexicon =
        sentiment_grid(corpus, all, lexicons, {}, options);

    json report;
    report["per_lexicon"] = per_lexicon.to_json();
    std::string text = per_lexicon.render_text();

    std::vector<UnifiedLexicon> combined;
    std::vector<std::string> wanted = combine_names_;
    if (wanted.empty()) wanted = {"sentiwordnet", "afinn", "bing_liu"};
    for (const std::string& n : wanted) {
      for (const UnifiedLexicon& lex : lexicons) {
        if (lex.name() == n) combined.push_back(lex);
      }
    }
    if (!combine_names_.empty() && combined.size() != combine_names_.size()) {
      throw UsageError("--combine names a lexicon that was not loaded");
    }
    if (combined.size() >= 2) {
      std::vector<CombinationStrategy> strategies;
      for (const std::string& s : strategies_) {
        strategies.push_back(strategy_from(s));
      }
      const std::vector<ScoringConfig> top = top_scoring_variants(eval_top_k_);
      const SentimentGrid grid =
          sentiment_grid(corpus, top, combined, strategies, options);
      report["combined"] = grid.to_json();
      text += "\n" + grid.render_text();
    }

    out_ << text;
    const fs::path dir = output_dir(out_dir_);
    write_text_file(dir / "sentiment_grid.txt", text);
    write_text_file(dir / "sentiment_grid.json", report.dump(2) + "\n");
    snapshot_config(dir);
  }

  void cmd_eval_correlation() {
    const std::vector<LabeledMessage> corpus = load_corpus(corpus_path_);
    const bool labeled = std::any_of(
        corpus.begin(), corpus.end(),
        [](const LabeledMessage& m) { return m.toxicity.has_value(); });
    if (!labeled) throw UsageError("corpus has no toxicity values");

    const std::vector<UnifiedLexicon> lexicons =
        eval_lexicons_.load({"sentiwordnet", "afinn", "bing_liu"});
    const FrequencyTable freqs =
        reference_frequencies(freq_corpus_, corpus, lexicons);
    const NegationCueList cues = cues_from(cues_path_);
    const CorrelationMethod method = method_ == "spearman"
                                         ? CorrelationMethod::kSpearman
                                         : CorrelationMethod::kPearson;

    json report;
    report["method"] = method_;
    report["strategy"] = strategy_;
    report["rows"] = json::array();
    std::ostringstream text;
    text << "Sentiment detection  | Correlation (" << method_ << ")\n";
    text << "---------------------+------------------------\n";
    for (const ScoringConfig& config : top_scoring_variants(eval_top_k_)) {
      const LexiconEnsemble ensemble(lexicons, config, freqs,
                                     strategy_from(strategy_), cues);
      const MessageScorer scorer = [&](const LabeledMessage& m) {
        return ensemble.score(m.text).combined;
      };
      const CorrelationReport r = correlation(corpus, scorer, {}, method);
      report["rows"].push_back({{"config", config.label()},
                                {"coefficient", r.coefficient},
                                {"n", r.n}});
      std::string label = config.label();
      label.resize(std::max<std::size_t>(label.size(), 20), ' ');
      text << label << " | " << format_fixed(r.coefficient, 4) << '\n';
    }
    out_ << text.str();
    const fs::path dir = output_dir(out_dir_);
    write_text_file(dir / "correlation.txt", text.str());
    write_text_file(dir / "correlation.json", report.dump(2) + "\n");
    snapshot_config(dir);
  }

  void cmd_eval_scope() {
    std::ifstream in(gold_path_);
    const std::vector<GoldScope> gold = read_gold_scopes(in, gold_path_);
    const NegationCueList cues = cues_from(cues_path_);
    const ScopeMetrics m = run_scope_evaluation(gold, cues, window_);

    const auto pct = [](double v) { return format_fixed(100.0 * v, 2) + "%"; };
    std::ostringstream text;
    text << "Metric             | Fixed window (" << window_ << ")\n";
    text << "-------------------+-----------------\n";
    text << "Accuracy           | " << pct(m.accuracy) << '\n';
    text << "Recall             | " << pct(m.recall)
         << (m.recall_undefined ? " (undefined)" : "") << '\n';
    text << "Precision          | " << pct(m.precision)
         << (m.precision_undefined ? " (undefined)" : "") << '\n';
    text << "Exact match        | " << pct(m.exact_match) << '\n';
    text << "Standard deviation | " << format_fixed(m.scope_std_dev, 2)
         << " words\n";
    text << "ms per sentence    | " << format_fixed(m.ms_per_sentence, 4)
         << '\n';
    text << "sentences with cue | " << m.sentences << '\n';

    json report{{"window", window_},
                {"sentences", m.sentences},
                {"accuracy", m.accuracy},
                {"recall", m.recall},
                {"precision", m.precision},
                {"exact_match", m.exact_match},
                {"scope_std_dev", m.scope_std_dev},
                {"ms_per_sentence", m.ms_per_sentence},
                {"precision_undefined", m.precision_undefined},
                {"recall_undefined", m.recall_undefined}};
    out_ << text.str();
    const fs::path dir = output_dir(out_dir_);
    write_text_file(dir / "scope.txt", text.str());
    write_text_file(dir / "scope.json", report.dump(2) + "\n");
    snapshot_config(dir);
  }

  // -------------------------------------------------------------------------
  // perturb

  void add_perturb() {
    CLI::App* perturb_cmd = app_.add_subcommand(
        "perturb", "Apply keyword substitutions to a corpus or a text");
    auto* corpus = perturb_cmd->add_option("--corpus", corpus_path_,
                                           "Corpus JSONL")
                       ->check(CLI::ExistingFile);
    auto* text = perturb_cmd->add_option("--text", text_, "A single message");
    corpus->excludes(text);
    perturb_cmd->add_option("--map", map_path_,
                            "Substitution map TSV (default: bundled list)")
        ->check(CLI::ExistingFile);
    perturb_cmd->add_option("--output", output_file_,
                            "Output JSONL (default stdout)");
    perturb_cmd->callback([this] { action_ = [this] { cmd_perturb(); }; });
  }

  void cmd_perturb() {
    const SubstitutionMap map = map_path_.empty()
                                    ? SubstitutionMap::defaults()
                                    : SubstitutionMap::load_file(map_path_);
    if (corpus_path_.empty()) {
      out_ << perturb(text_, map).text << '\n';
      return;
    }
    std::vector<LabeledMessage> corpus = load_corpus(corpus_path_);
    std::size_t altered = 0;
    for (LabeledMessage& m : corpus) {
      Perturbation p = perturb(m.text, map);
      altered += p.altered;
      m.text = std::move(p.text);
    }
    std::ofstream file;
    if (!output_file_.empty()) {
      file.open(output_file_, std::ios::binary);
      if (!file) throw UsageError("cannot write " + output_file_);
    }
    std::ostream& sink = output_file_.empty() ? out_ : file;
    write_corpus(sink, corpus);

    err_ << "altered " << altered << " of " << corpus.size() << " messages";
    const bool any_toxic =
        std::any_of(corpus.begin(), corpus.end(), [](const LabeledMessage& m) {
          return m.toxic_flag.value_or(false);
        });
    if (any_toxic) {
      err_ << "; toxic coverage "
           << format_fixed(coverage(load_corpus(corpus_path_), map), 4);
    }
    err_ << '\n';
  }

  // -------------------------------------------------------------------------
  // experiment

  void add_experiment() {
    CLI::App* exp = app_.add_subcommand(
        "experiment",
        "Toxicity detection with and without sentiment, clean and subverted");
    exp->add_option("--corpus", corpus_path_, "Corpus JSONL with toxic_flag")
        ->required()
        ->check(CLI::ExistingFile);
    exp_lexicons_.add_to(exp);
    exp->add_option("--map", map_path_,
                    "Substitution map TSV (default: bundled list)")
        ->check(CLI::ExistingFile);
    exp->add_option("--seeds", seeds_, "Run seeds")->delimiter(',');
    exp->add_flag("--no-subversion", no_subversion_,
                  "Skip the subverted test condition");
    exp->add_option("--epochs", exp_config_.train.epochs, "Maximum epochs")
        ->check(CLI::PositiveNumber);
    exp->add_option("--learning-rate", exp_config_.train.learning_rate,
                    "Gradient step size");
    exp->add_option("--l2", exp_config_.train.l2, "L2 penalty");
    exp->add_option("--batch-size", exp_config_.train.batch_size,
                    "Mini-batch size (0 = full batch)");
    exp->add_option("--patience", exp_config_.train.patience,
                    "Early-stopping patience in epochs")
        ->check(CLI::PositiveNumber);
    exp->add_option("--buckets", exp_config_.buckets,
                    "Hashed character n-gram buckets")
        ->check(CLI::PositiveNumber);
    exp->add_option("--alphabet-size", exp_config_.alphabet_size,
                    "Characters kept in the alphabet")
        ->check(CLI::PositiveNumber);
    exp->add_option("--out", out_dir_, "Output directory");
    exp->callback([this] { action_ = [this] { cmd_experiment(); }; });
  }

  void cmd_experiment() {
    if (seeds_.empty()) throw UsageError("--seeds must not be empty");
    const std::vector<LabeledMessage> corpus = load_corpus(corpus_path_);
    const std::vector<UnifiedLexicon> lexicons =
        exp_lexicons_.load({"sentiwordnet", "afinn", "bing_liu"});
    if (lexicons.size() > kSentimentLexicons) {
      throw UsageError("the experiment uses at most three lexicons");
    }
    const SubstitutionMap map = map_path_.empty()
                                    ? SubstitutionMap::defaults()
                                    : SubstitutionMap::load_file(map_path_);
    ExperimentConfig config = exp_config_;
    config.subversion = !no_subversion_;

    const ExperimentReport report =
        run_experiment(corpus, map, seeds_, lexicons, config);
    json j = report.to_json();
    json lex_names = json::array();
    for (const UnifiedLexicon& l : lexicons) lex_names.push_back(l.name());
    j["lexicons"] = lex_names;

    const fs::path dir = output_dir(out_dir_);
    write_text_file(dir / "report.json", j.dump(2) + "\n");
    write_text_file(dir / "report.txt", report.render_text());
    snapshot_config(dir);
    out_ << report.render_text();
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_;
  std::function<void()> action_;

  // Option storage, shared between subcommands where the meaning matches.
  std::map<LexiconFormat, std::string> lexicon_sources_;
  std::string bing_positive_;
  std::string bing_negative_;
  std::string out_dir_;
  std::string corpus_path_;
  std::string freq_corpus_;
  std::string cues_path_;
  std::string output_file_;
  std::string strategy_ = "average";
  std::string method_ = "pearson";
  std::vector<std::string> strategies_{"majority", "maximum", "average"};
  std::vector<std::string> combine_names_;
  int eval_top_k_ = 3;
  std::string gold_path_;
  int window_ = 5;
  std::string text_;
  std::string map_path_;
  std::vector<std::uint64_t> seeds_{1, 2, 3};
  bool no_subversion_ = false;
  ExperimentConfig exp_config_;
  LexiconArgs score_lexicons_;
  LexiconArgs eval_lexicons_;
  LexiconArgs exp_lexicons_;
  ScoringArgs score_scoring_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  WarningHandler previous = set_warning_handler(
      [&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
  int code = kExitInternal;
  try {
    Cli cli(out, err);
    code = cli.run(args);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  set_warning_handler(std::move(previous));
  return code;
}

}  // namespace sentox::cli
