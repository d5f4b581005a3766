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

#ifndef SENTOX_SENTIMENT_H_
#define SENTOX_SENTIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentox/lexicon.h"
#include "sentox/preprocess.h"

namespace sentox {

enum class WordSelection { kAllWords, kTopWords };

struct ScoringConfig {
  WordSelection selection = WordSelection::kAllWords;
  int top_k = 3;
  bool use_negation = false;
  bool use_frequency = false;

  // "All words", "Top + Neg. + Freq." and so on.
  std::string label() const;
  // Throws UsageError if top_k < 1.
  void validate() const;

  friend bool operator==(const ScoringConfig&, const ScoringConfig&) = default;
};

// The eight {All, Top} x {±negation} x {±frequency} variants, All first.
std::vector<ScoringConfig> all_scoring_variants(int top_k = 3);
// The four Top-words variants.
std::vector<ScoringConfig> top_scoring_variants(int top_k = 3);

// Term occurrence counts over a reference corpus.
class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::map<std::string, std::uint64_t> counts);

  // Counts token surfaces (after idiom merging) across messages.
  static FrequencyTable from_messages(std::span<const ProcessedMessage> msgs);
  // Tokenizes and merges idioms, then counts.
  static FrequencyTable from_texts(std::span<const std::string> texts,
                                   const IdiomSet& idioms);

  std::uint64_t count(std::string_view term) const;
  std::uint64_t n_max() const { return n_max_; }
  bool empty() const { return counts_.empty(); }
  std::size_t size() const { return counts_.size(); }
  const std::map<std::string, std::uint64_t, std::less<>>& counts() const {
    return counts_;
  }

  // term<TAB>count, sorted by term.
  void write_tsv(std::ostream& out) const;
  static FrequencyTable read_tsv(std::istream& in);

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t n_max_ = 0;
};

// 1 - sqrt(n / n_max). Throws UsageError unless 0 <= n <= n_max, n_max >= 1.
double frequency_modifier(std::uint64_t n, std::uint64_t n_max);

struct Contribution {
  double pos = 0.0;
  double neg = 0.0;
};

// Lexicon score of one token after the optional negation flip and then the
// optional frequency damping. Unknown words contribute (0, 0); words absent
// from the frequency table are undamped.
Contribution word_contribution(const Token& token, const UnifiedLexicon& lex,
                               const ScoringConfig& config,
                               const FrequencyTable& freqs);

struct MessageSentiment {
  double pos_sum = 0.0;
  double neg_sum = 0.0;

  double score() const { return pos_sum - neg_sum; }
};

MessageSentiment score_message(const ProcessedMessage& msg,
                               const UnifiedLexicon& lex,
                               const ScoringConfig& config,
                               const FrequencyTable& freqs);

enum class CombinationStrategy { kMajorityVote, kMaximumWins, kAverageScores };

std::string_view to_string(CombinationStrategy strategy);
std::string_view display_name(CombinationStrategy strategy);
std::optional<CombinationStrategy> parse_strategy(std::string_view name);

struct NamedSentiment {
  std::string lexicon;
  MessageSentiment sentiment;
};

// Throws UsageError on an empty list.
double combine(std::span<const NamedSentiment> scores,
               CombinationStrategy strategy);
// Weighted mean of net scores. Weights must be non-negative, not all zero,
// and match the score count.
double combine_weighted(std::span<const NamedSentiment> scores,
                        std::span<const double> weights);

enum class Polarity { kPositive, kNegative, kNeutral };

Polarity classify_polarity(double score, double neutral_band = 0.0);

// Scores raw text against one lexicon: preprocesses with the lexicon's
// idioms, then applies score_message.
class SentimentScorer {
 public:
  SentimentScorer(const UnifiedLexicon& lexicon, ScoringConfig config,
                  const FrequencyTable& freqs,
                  const NegationCueList& cues = NegationCueList::defaults(),
                  int window = 5);

  MessageSentiment score(std::string_view text) const;
  MessageSentiment score(std::span<const TaggedWord> tagged) const;

  const UnifiedLexicon& lexicon() const { return *lexicon_; }
  const ScoringConfig& config() const { return config_; }

 private:
  PreprocessOptions options() const;

  const UnifiedLexicon* lexicon_;
  ScoringConfig config_;
  const FrequencyTable* freqs_;
  const NegationCueList* cues_;
  int window_;
};

struct EnsembleScore {
  std::vector<NamedSentiment> per_lexicon;
  double combined = 0.0;
};

// Several lexicons scored under one configuration and merged with a
// combination strategy. A single lexicon passes its score through.
class LexiconEnsemble {
 public:
  LexiconEnsemble(std::span<const UnifiedLexicon> lexicons,
                  ScoringConfig config, const FrequencyTable& freqs,
                  CombinationStrategy strategy,
                  const NegationCueList& cues = NegationCueList::defaults(),
                  int window = 5);

  EnsembleScore score(std::string_view text) const;
  std::size_t size() const { return scorers_.size(); }

 private:
  std::vector<SentimentScorer> scorers_;
  CombinationStrategy strategy_;
};

}  // namespace sentox

#endif  // SENTOX_SENTIMENT_H_
