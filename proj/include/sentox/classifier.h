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

#ifndef SENTOX_CLASSIFIER_H_
#define SENTOX_CLASSIFIER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sentox/corpus.h"
#include "sentox/lexicon.h"
#include "sentox/preprocess.h"
#include "sentox/sentiment.h"
#include "sentox/subversion.h"

namespace sentox {

// ---------------------------------------------------------------------------
// Character alphabet

class CharAlphabet {
 public:
  static constexpr std::size_t kDefaultSize = 60;

  CharAlphabet() = default;
  // Code points in rank order. Throws UsageError on duplicates.
  explicit CharAlphabet(std::vector<char32_t> chars);

  // Most frequent code points after ASCII case folding, ties broken by the
  // smaller code point. Throws UsageError on an empty corpus.
  static CharAlphabet build(std::span<const std::string> texts,
                            std::size_t max_size = kDefaultSize);

  std::size_t size() const { return chars_.size(); }
  const std::vector<char32_t>& chars() const { return chars_; }
  // Position of the code point, or nullopt when not in the alphabet.
  std::optional<std::size_t> index(char32_t c) const;

  // One hex code point per line, in rank order.
  std::string serialize() const;
  static CharAlphabet deserialize(std::string_view text);

  friend bool operator==(const CharAlphabet& a, const CharAlphabet& b) {
    return a.chars_ == b.chars_;
  }

 private:
  std::vector<char32_t> chars_;
  std::map<char32_t, std::size_t> index_;
};

// Decodes UTF-8; invalid bytes become U+FFFD. ASCII letters are lowercased.
std::vector<char32_t> folded_code_points(std::string_view text);

// ---------------------------------------------------------------------------
// Features

inline constexpr std::size_t kSentimentLexicons = 3;
inline constexpr std::size_t kSentimentSlots = 3 * kSentimentLexicons;

struct FeatureVector {
  std::size_t buckets = 0;
  // Hashed character 2- and 3-gram counts, sorted by bucket, no duplicates.
  std::vector<std::pair<std::uint32_t, double>> char_ngrams;
  // (pos_sum, neg_sum, net) for each sentiment lexicon in order.
  std::array<double, kSentimentSlots> sentiment{};
  double length = 0.0;  // token count

  std::size_t width() const { return buckets + kSentimentSlots + 1; }
  std::vector<double> dense() const;
  // Calls fn(index, value) for every non-zero feature in index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [idx, v] : char_ngrams) fn(std::size_t{idx}, v);
    for (std::size_t k = 0; k < kSentimentSlots; ++k) {
      if (sentiment[k] != 0.0) fn(buckets + k, sentiment[k]);
    }
    if (length != 0.0) fn(buckets + kSentimentSlots, length);
  }
};

// Sentiment inputs: up to three lexicons scored with Top-k + frequency.
struct SentimentChannel {
  std::span<const UnifiedLexicon> lexicons;
  const FrequencyTable* freqs = nullptr;
  const NegationCueList* cues = nullptr;  // defaults when null
  ScoringConfig config{WordSelection::kTopWords, 3, false, true};
};

struct FeatureOptions {
  std::size_t buckets = 4096;
  bool with_sentiment = true;
};

FeatureVector extract_features(std::string_view text,
                               const CharAlphabet& alphabet,
                               const SentimentChannel& channel,
                               const FeatureOptions& options);

// ---------------------------------------------------------------------------
// Model and training

struct TrainConfig {
  int epochs = 60;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  std::uint64_t seed = 1;
  std::size_t batch_size = 32;  // 0 means full batch
  int patience = 5;             // epochs without validation improvement
};

struct TrainMeta {
  std::uint64_t seed = 0;
  int epochs_run = 0;
  int best_epoch = 0;
  double learning_rate = 0.0;
  double l2 = 0.0;
  double validation_accuracy = 0.0;
};

struct Model {
  std::vector<double> weights;
  double bias = 0.0;
  // Per-feature multiplier applied before the dot product (max-abs scaling
  // fitted on the training set). Empty means all ones.
  std::vector<double> input_scale;
  TrainMeta meta;

  std::size_t width() const { return weights.size(); }
  double logit(const FeatureVector& x) const;
  double predict_proba(const FeatureVector& x) const;
  bool predict(const FeatureVector& x) const {
    return predict_proba(x) >= 0.5;
  }
};

struct Gradient {
  std::vector<double> weights;
  double bias = 0.0;
};

// Mean logistic loss plus (l2 / 2) * |w|^2.
double logistic_loss(const Model& model, std::span<const FeatureVector> x,
                     std::span<const int> y, double l2);
Gradient loss_gradient(const Model& model, std::span<const FeatureVector> x,
                       std::span<const int> y, double l2);

std::vector<double> fit_input_scale(std::span<const FeatureVector> x);

struct LabeledFeatures {
  std::span<const FeatureVector> x;
  std::span<const int> y;  // 1 toxic, 0 not
};

// Mini-batch gradient descent on the regularized logistic loss. Keeps the
// weights from the best validation epoch and stops after `patience`
// epochs without improvement. Throws UsageError if only one class occurs.
Model train(LabeledFeatures train_set, const TrainConfig& config,
            std::optional<LabeledFeatures> validation = std::nullopt);

double accuracy(const Model& model, LabeledFeatures data);

nlohmann::ordered_json model_to_json(const Model& model,
                                     const CharAlphabet& alphabet,
                                     const FeatureOptions& options,
                                     std::string_view config_hash);

// ---------------------------------------------------------------------------
// Experiment

// Keeps every toxic message and samples as many non-toxic ones without
// replacement. Order follows the input. Throws UsageError when a message
// has no toxic_flag or a class is missing.
std::vector<LabeledMessage> balance(std::span<const LabeledMessage> corpus,
                                    std::uint64_t seed);

struct Split {
  std::vector<LabeledMessage> train;
  std::vector<LabeledMessage> validation;
  std::vector<LabeledMessage> test;
};

// floor(0.7 n) / floor(0.2 n) / rest after a seeded shuffle. Needs n >= 10.
Split split(std::span<const LabeledMessage> corpus, std::uint64_t seed);

// Accuracy at threshold 0.5, optionally perturbing each message first.
double evaluate(const Model& model, std::span<const LabeledMessage> test,
                const CharAlphabet& alphabet, const SentimentChannel& channel,
                const FeatureOptions& options,
                const SubstitutionMap* perturbation = nullptr);

struct ExperimentConfig {
  TrainConfig train;
  std::size_t buckets = 4096;
  std::size_t alphabet_size = CharAlphabet::kDefaultSize;
  bool subversion = true;
};

struct RunResult {
  std::uint64_t seed = 0;
  // [with_sentiment][subverted]
  double accuracy[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double test_coverage = 0.0;  // fraction of toxic test messages altered
  std::size_t train_size = 0;
  std::size_t validation_size = 0;
  std::size_t test_size = 0;
  std::vector<std::string> train_ids;
  std::string alphabet;         // CharAlphabet::serialize()
  std::string frequency_table;  // FrequencyTable::write_tsv()
};

struct ExperimentReport {
  std::vector<RunResult> runs;
  bool subversion = true;
  double corpus_coverage = 0.0;  // over the whole corpus
  std::size_t map_size = 0;

  // Mean over runs.
  double mean_accuracy(bool with_sentiment, bool subverted) const;
  nlohmann::ordered_json to_json() const;
  std::string render_text() const;
};

// For each seed: balance, split, build alphabet and frequency table from
// the training split, train with and without sentiment, and evaluate on the
// clean and the perturbed test split.
ExperimentReport run_experiment(std::span<const LabeledMessage> corpus,
                                const SubstitutionMap& map,
                                std::span<const std::uint64_t> seeds,
                                std::span<const UnifiedLexicon> lexicons,
                                const ExperimentConfig& config);

// The idiom set the experiment uses for frequency counting: the union of
// all lexicon idioms.
IdiomSet combined_idioms(std::span<const UnifiedLexicon> lexicons);

}  // namespace sentox

#endif  // SENTOX_CLASSIFIER_H_
