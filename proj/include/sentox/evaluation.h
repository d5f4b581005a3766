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

#ifndef SENTOX_EVALUATION_H_
#define SENTOX_EVALUATION_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sentox/corpus.h"
#include "sentox/lexicon.h"
#include "sentox/sentiment.h"

namespace sentox {

using MessageScorer = std::function<double(const LabeledMessage&)>;
using ToxicityExtractor =
    std::function<std::optional<double>(const LabeledMessage&)>;

// Area under min(N(mean1, std1), N(mean2, std2)), by the trapezoid rule.
// Zero deviations are replaced by 1e-9. Result is clamped to [0, 1].
double gaussian_overlap(double mean1, double std1, double mean2, double std2);

struct SampleStats {
  double mean = 0.0;
  double std_dev = 0.0;  // n - 1 denominator
  std::size_t n = 0;
};

// Throws UsageError when fewer than two values are given.
SampleStats sample_stats(std::span<const double> values);

struct OverlapReport {
  double mean_neg = 0.0;
  double mean_pos = 0.0;
  double std_neg = 0.0;
  double std_pos = 0.0;
  double overlap = 0.0;
  std::size_t n_neg = 0;
  std::size_t n_pos = 0;
};

// Pools slight and clear negatives against slight and clear positives,
// fits a normal to each pool and returns their overlap. Each pool needs at
// least two messages.
OverlapReport overlap_report(std::span<const LabeledMessage> corpus,
                             const MessageScorer& scorer);

enum class CorrelationMethod { kPearson, kSpearman };

struct CorrelationReport {
  double coefficient = 0.0;
  std::size_t n = 0;
  CorrelationMethod method = CorrelationMethod::kPearson;
};

// Throws DegenerateError when either variable has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);
// Pearson over average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

// Messages without a toxicity value are skipped. Needs at least two pairs.
CorrelationReport correlation(
    std::span<const LabeledMessage> corpus, const MessageScorer& scorer,
    const ToxicityExtractor& toxicity = {},
    CorrelationMethod method = CorrelationMethod::kPearson);

struct GridCell {
  std::string row;     // scoring configuration label
  std::string column;  // lexicon name or combination strategy
  std::optional<OverlapReport> report;
  std::string error;   // set when report is empty
};

struct SentimentGrid {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<GridCell> cells;  // row-major

  const GridCell& at(std::size_t row, std::size_t column) const {
    return cells.at(row * columns.size() + column);
  }
  // "[mean_neg, mean_pos] overlap" per cell.
  std::string render_text() const;
  nlohmann::ordered_json to_json() const;
};

struct GridOptions {
  const FrequencyTable* freqs = nullptr;  // empty table when null
  const NegationCueList* cues = nullptr;  // defaults when null
  int window = 5;
};

// One cell per (config, lexicon) when `strategies` is empty, otherwise one
// cell per (config, strategy) combining all lexicons.
SentimentGrid sentiment_grid(std::span<const LabeledMessage> corpus,
                             std::span<const ScoringConfig> configs,
                             std::span<const UnifiedLexicon> lexicons,
                             std::span<const CombinationStrategy> strategies,
                             const GridOptions& options = {});

}  // namespace sentox

#endif  // SENTOX_EVALUATION_H_
