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

#include "sentox/sentiment.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <utility>

#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {

std::string ScoringConfig::label() const {
  std::string out =
      selection == WordSelection::kAllWords ? "All" : "Top";
  if (!use_negation && !use_frequency) return out + " words";
  if (use_negation && use_frequency) return out + " + Neg. + Freq.";
  return out + (use_negation ? " + Negation" : " + Frequency");
}

void ScoringConfig::validate() const {
  if (top_k < 1) throw UsageError("top-k must be >= 1");
}

std::vector<ScoringConfig> all_scoring_variants(int top_k) {
  std::vector<ScoringConfig> out;
  for (auto selection : {WordSelection::kAllWords, WordSelection::kTopWords}) {
    // Row order: plain, negation, frequency, both.
    for (auto [neg, freq] : {std::pair{false, false}, std::pair{true, false},
                             std::pair{false, true}, std::pair{true, true}}) {
      out.push_back({selection, top_k, neg, freq});
    }
  }
  return out;
}

std::vector<ScoringConfig> top_scoring_variants(int top_k) {
  std::vector<ScoringConfig> all = all_scoring_variants(top_k);
  return {all.begin() + 4, all.end()};
}

FrequencyTable::FrequencyTable(std::map<std::string, std::uint64_t> counts) {
  for (auto& [term, n] : counts) {
    if (n == 0) continue;
    n_max_ = std::max(n_max_, n);
    counts_.emplace(term, n);
  }
}

FrequencyTable FrequencyTable::from_messages(
    std::span<const ProcessedMessage> msgs) {
  std::map<std::string, std::uint64_t> counts;
  for (const ProcessedMessage& m : msgs) {
    for (const Token& t : m.tokens) ++counts[t.surface];
  }
  return FrequencyTable(std::move(counts));
}

FrequencyTable FrequencyTable::from_texts(std::span<const std::string> texts,
                                          const IdiomSet& idioms) {
  std::map<std::string, std::uint64_t> counts;
  for (const std::string& text : texts) {
    for (const Token& t : merge_idioms(tokenize(text), idioms)) {
      ++counts[t.surface];
    }
  }
  return FrequencyTable(std::move(counts));
}

std::uint64_t FrequencyTable::count(std::string_view term) const {
  const auto it = counts_.find(term);
  return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::write_tsv(std::ostream& out) const {
  for (const auto& [term, n] : counts_) out << term << '\t' << n << '\n';
}

FrequencyTable FrequencyTable::read_tsv(std::istream& in) {
  std::map<std::string, std::uint64_t> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (text.empty()) continue;
    const std::size_t tab = text.rfind('\t');
    const auto n = tab == std::string_view::npos
                       ? std::nullopt
                       : parse_int(text.substr(tab + 1));
    if (!n || *n < 0) {
      throw ParseError("frequency table", line_no, "expected term<TAB>count");
    }
    counts[std::string(text.substr(0, tab))] = static_cast<std::uint64_t>(*n);
  }
  return FrequencyTable(std::move(counts));
}

double frequency_modifier(std::uint64_t n, std::uint64_t n_max) {
  if (n_max < 1) throw UsageError("frequency_modifier: n_max must be >= 1");
  if (n > n_max) {
    throw UsageError("frequency_modifier: n = " + std::to_string(n) +
                     " exceeds n_max = " + std::to_string(n_max));
  }
  if (n == n_max) return 0.0;
  return 1.0 - std::sqrt(static_cast<double>(n) / static_cast<double>(n_max));
}

Contribution word_contribution(const Token& token, const UnifiedLexicon& lex,
                               const ScoringConfig& config,
                               const FrequencyTable& freqs) {
  const auto base = lex.lookup(token.surface, token.pos);
  if (!base) return {};
  Contribution c{base->positivity, base->negativity};
  if (config.use_negation && token.negated) std::swap(c.pos, c.neg);
  if (config.use_frequency && !freqs.empty()) {
    const double m = frequency_modifier(freqs.count(token.surface),
                                        freqs.n_max());
    c.pos *= m;
    c.neg *= m;
  }
  return c;
}

MessageSentiment score_message(const ProcessedMessage& msg,
                               const UnifiedLexicon& lex,
                               const ScoringConfig& config,
                               const FrequencyTable& freqs) {
  config.validate();
  MessageSentiment out;
  if (config.selection == WordSelection::kAllWords) {
    for (const Token& t : msg.tokens) {
      const Contribution c = word_contribution(t, lex, config, freqs);
      out.pos_sum += c.pos;
      out.neg_sum += c.neg;
    }
    return out;
  }

  std::vector<double> pos;
  std::vector<double> neg;
  pos.reserve(msg.tokens.size());
  neg.reserve(msg.tokens.size());
  for (const Token& t : msg.tokens) {
    const Contribution c = word_contribution(t, lex, config, freqs);
    pos.push_back(c.pos);
    neg.push_back(c.neg);
  }
  const auto top_sum = [k = static_cast<std::size_t>(config.top_k)](
                           std::vector<double>& v) {
    const std::size_t take = std::min(k, v.size());
    std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(take),
                      v.end(), std::greater<>());
    // Sum largest-first for a fixed summation order.
    double s = 0.0;
    for (std::size_t i = 0; i < take; ++i) s += v[i];
    return s;
  };
  out.pos_sum = top_sum(pos);
  out.neg_sum = top_sum(neg);
  return out;
}

std::string_view to_string(CombinationStrategy strategy) {
  switch (strategy) {
    case CombinationStrategy::kMajorityVote:
      return "majority";
    case CombinationStrategy::kMaximumWins:
      return "maximum";
    case CombinationStrategy::kAverageScores:
      return "average";
  }
  return "";
}

std::string_view display_name(CombinationStrategy strategy) {
  switch (strategy) {
    case CombinationStrategy::kMajorityVote:
      return "Majority vote";
    case CombinationStrategy::kMaximumWins:
      return "Maximum wins";
    case CombinationStrategy::kAverageScores:
      return "Average scores";
  }
  return "";
}

std::optional<CombinationStrategy> parse_strategy(std::string_view name) {
  for (auto s : {CombinationStrategy::kMajorityVote,
                 CombinationStrategy::kMaximumWins,
                 CombinationStrategy::kAverageScores}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

double mean_score(std::span<const NamedSentiment> scores) {
  double sum = 0.0;
  for (const NamedSentiment& s : scores) sum += s.sentiment.score();
  return sum / static_cast<double>(scores.size());
}

}  // namespace

double combine(std::span<const NamedSentiment> scores,
               CombinationStrategy strategy) {
  if (scores.empty()) throw UsageError("combine: no scores");
  switch (strategy) {
    case CombinationStrategy::kAverageScores:
      return mean_score(scores);

    case CombinationStrategy::kMaximumWins: {
      double best = scores.front().sentiment.score();
      for (const NamedSentiment& s : scores.subspan(1)) {
        const double v = s.sentiment.score();
        // Ties on magnitude go to the more negative score.
        if (std::abs(v) > std::abs(best) ||
            (std::abs(v) == std::abs(best) && v < best)) {
          best = v;
        }
      }
      return best;
    }

    case CombinationStrategy::kMajorityVote: {
      double pos_sum = 0.0;
      double neg_sum = 0.0;
      std::size_t pos_n = 0;
      std::size_t neg_n = 0;
      for (const NamedSentiment& s : scores) {
        const double v = s.sentiment.score();
        if (v > 0) {
          pos_sum += v;
          ++pos_n;
        } else if (v < 0) {
          neg_sum += v;
          ++neg_n;
        }
      }
      // A strict majority of all voters, abstentions included.
      const std::size_t half = scores.size() / 2;
      if (pos_n > half) return pos_sum / static_cast<double>(pos_n);
      if (neg_n > half) return neg_sum / static_cast<double>(neg_n);
      return mean_score(scores);
    }
  }
  throw UsageError("combine: unknown strategy");
}

double combine_weighted(std::span<const NamedSentiment> scores,
                        std::span<const double> weights) {
  if (scores.empty()) throw UsageError("combine_weighted: no scores");
  if (weights.size() != scores.size()) {
    throw UsageError("combine_weighted: weight count does not match");
  }
  double total = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!(weights[i] >= 0.0)) {
      throw UsageError("combine_weighted: weights must be non-negative");
    }
    total += weights[i];
    acc += weights[i] * scores[i].sentiment.score();
  }
  if (total <= 0.0) throw UsageError("combine_weighted: weights sum to zero");
  return acc / total;
}

Polarity classify_polarity(double score, double neutral_band) {
  if (neutral_band < 0.0) throw UsageError("neutral band must be >= 0");
  if (score > neutral_band) return Polarity::kPositive;
  if (score < -neutral_band) return Polarity::kNegative;
  return Polarity::kNeutral;
}

SentimentScorer::SentimentScorer(const UnifiedLexicon& lexicon,
                                 ScoringConfig config,
                                 const FrequencyTable& freqs,
                                 const NegationCueList& cues, int window)
    : lexicon_(&lexicon),
      config_(config),
      freqs_(&freqs),
      cues_(&cues),
      window_(window) {
  config_.validate();
}

PreprocessOptions SentimentScorer::options() const {
  PreprocessOptions opts;
  opts.idioms = &lexicon_->idioms();
  opts.cues = cues_;
  opts.window = window_;
  return opts;
}

MessageSentiment SentimentScorer::score(std::string_view text) const {
  return score_message(preprocess(text, options()), *lexicon_, config_, *freqs_);
}

MessageSentiment SentimentScorer::score(
    std::span<const TaggedWord> tagged) const {
  return score_message(preprocess_tagged(tagged, options()), *lexicon_, config_,
                       *freqs_);
}

LexiconEnsemble::LexiconEnsemble(std::span<const UnifiedLexicon> lexicons,
                                 ScoringConfig config,
                                 const FrequencyTable& freqs,
                                 CombinationStrategy strategy,
                                 const NegationCueList& cues, int window)
    : strategy_(strategy) {
  if (lexicons.empty()) throw UsageError("ensemble needs at least one lexicon");
  scorers_.reserve(lexicons.size());
  for (const UnifiedLexicon& lex : lexicons) {
    scorers_.emplace_back(lex, config, freqs, cues, window);
  }
}

EnsembleScore LexiconEnsemble::score(std::string_view text) const {
  EnsembleScore out;
  out.per_lexicon.reserve(scorers_.size());
  for (const SentimentScorer& s : scorers_) {
    out.per_lexicon.push_back({s.lexicon().name(), s.score(text)});
  }
  out.combined = combine(out.per_lexicon, strategy_);
  return out;
}

}  // namespace sentox
