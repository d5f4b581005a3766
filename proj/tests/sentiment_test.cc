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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "sentox/error.h"

namespace sentox {
namespace {

UnifiedLexicon toy_lexicon() {
  return UnifiedLexicon(
      "toy", {
                 {"good", PartOfSpeech::kAny, {0.8, 0.0}},
                 {"great", PartOfSpeech::kAny, {1.0, 0.0}},
                 {"bad", PartOfSpeech::kAny, {0.0, 0.6}},
                 {"awful", PartOfSpeech::kAny, {0.0, 1.0}},
                 {"odd", PartOfSpeech::kAny, {0.25, 0.5}},
                 {"piece_of_cake", PartOfSpeech::kAny, {0.5, 0.0}},
             });
}

std::vector<NamedSentiment> nets(std::initializer_list<double> values) {
  std::vector<NamedSentiment> out;
  for (double v : values) {
    MessageSentiment s;
    if (v >= 0) s.pos_sum = v; else s.neg_sum = -v;
    out.push_back({"l" + std::to_string(out.size()), s});
  }
  return out;
}

TEST(FrequencyModifier, Endpoints) {
  EXPECT_EQ(frequency_modifier(0, 100), 1.0);
  EXPECT_EQ(frequency_modifier(100, 100), 0.0);
  EXPECT_EQ(frequency_modifier(25, 100), 0.5);
  EXPECT_EQ(frequency_modifier(1, 4), 0.5);
  EXPECT_THROW(frequency_modifier(0, 0), UsageError);
  EXPECT_THROW(frequency_modifier(5, 4), UsageError);
}

TEST(FrequencyModifier, MonotoneAndBounded) {
  double prev = 2.0;
  for (std::uint64_t n = 0; n <= 1000; ++n) {
    const double m = frequency_modifier(n, 1000);
    ASSERT_GE(m, 0.0);
    ASSERT_LE(m, 1.0);
    ASSERT_LT(m, prev);
    ASSERT_NEAR(m, 1.0 - std::sqrt(n / 1000.0), 1e-15);
    prev = m;
  }
}

TEST(FrequencyTable, CountsAndRoundTrip) {
  const std::vector<std::string> texts{"Good good bad", "a piece of cake"};
  const FrequencyTable t = FrequencyTable::from_texts(texts, {"piece_of_cake"});
  EXPECT_EQ(t.count("good"), 2u);
  EXPECT_EQ(t.count("piece_of_cake"), 1u);
  EXPECT_EQ(t.count("cake"), 0u);
  EXPECT_EQ(t.n_max(), 2u);
  std::stringstream buf;
  t.write_tsv(buf);
  const FrequencyTable back = FrequencyTable::read_tsv(buf);
  EXPECT_EQ(back.counts(), t.counts());
  std::istringstream bad("word\tx\n");
  EXPECT_THROW(FrequencyTable::read_tsv(bad), ParseError);
  EXPECT_EQ(FrequencyTable({{"z", 0}}).size(), 0u);
}

TEST(WordContribution, FlipThenDamp) {
  const UnifiedLexicon lex = toy_lexicon();
  const FrequencyTable freqs({{"odd", 25}, {"the", 100}});
  Token t{"odd"};
  t.negated = true;
  ScoringConfig cfg;
  Contribution c = word_contribution(t, lex, cfg, freqs);
  EXPECT_EQ(c.pos, 0.25);
  EXPECT_EQ(c.neg, 0.5);
  cfg.use_negation = true;
  c = word_contribution(t, lex, cfg, freqs);
  EXPECT_EQ(c.pos, 0.5);
  EXPECT_EQ(c.neg, 0.25);
  cfg.use_frequency = true;
  c = word_contribution(t, lex, cfg, freqs);
  EXPECT_EQ(c.pos, 0.25);
  EXPECT_EQ(c.neg, 0.125);
  // Absent from the table: undamped.
  Token g{"good"};
  c = word_contribution(g, lex, cfg, freqs);
  EXPECT_EQ(c.pos, 0.8);
  Token u{"unknown"};
  c = word_contribution(u, lex, cfg, freqs);
  EXPECT_EQ(c.pos, 0.0);
  EXPECT_EQ(c.neg, 0.0);
}

TEST(ScoreMessage, TopWordsAgainstSortOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LexiconEntry> entries;
    ProcessedMessage msg;
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> pos;
    std::vector<double> neg;
    for (int i = 0; i < n; ++i) {
      const std::string w = "w" + std::to_string(i);
      const double p = u(rng);
      const double q = u(rng);
      entries.push_back({w, PartOfSpeech::kAny, {p, q}});
      msg.tokens.push_back(Token{w});
      pos.push_back(p);
      neg.push_back(q);
    }
    const UnifiedLexicon lex("r", entries);
    const int k = 1 + static_cast<int>(rng() % 5);
    ScoringConfig cfg{WordSelection::kTopWords, k, false, false};
    const MessageSentiment top = score_message(msg, lex, cfg, {});
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    const std::size_t take = std::min<std::size_t>(k, pos.size());
    const double want_pos = std::accumulate(pos.begin(), pos.begin() + take, 0.0);
    const double want_neg = std::accumulate(neg.begin(), neg.begin() + take, 0.0);
    ASSERT_NEAR(top.pos_sum, want_pos, 1e-12);
    ASSERT_NEAR(top.neg_sum, want_neg, 1e-12);

    cfg.selection = WordSelection::kAllWords;
    const MessageSentiment all = score_message(msg, lex, cfg, {});
    ASSERT_LE(top.pos_sum, all.pos_sum + 1e-12);
    ASSERT_LE(top.neg_sum, all.neg_sum + 1e-12);

    cfg.selection = WordSelection::kTopWords;
    cfg.top_k = k + 1;
    const MessageSentiment wider = score_message(msg, lex, cfg, {});
    ASSERT_GE(wider.pos_sum, top.pos_sum - 1e-12);
    ASSERT_GE(wider.neg_sum, top.neg_sum - 1e-12);
  }
}

TEST(ScoreMessage, TopUsesContributionsAfterNegation) {
  const UnifiedLexicon lex = toy_lexicon();
  // All three words fall in the window: great (0, 1), good (0, 0.8),
  // bad (0.6, 0).
  ProcessedMessage m = preprocess("not great , good and bad");
  ScoringConfig cfg{WordSelection::kTopWords, 1, true, false};
  MessageSentiment s = score_message(m, lex, cfg, {});
  EXPECT_EQ(s.pos_sum, 0.6);
  EXPECT_EQ(s.neg_sum, 1.0);
  cfg.selection = WordSelection::kAllWords;
  s = score_message(m, lex, cfg, {});
  EXPECT_DOUBLE_EQ(s.pos_sum, 0.6);
  EXPECT_DOUBLE_EQ(s.neg_sum, 1.8);
  cfg.top_k = 0;
  EXPECT_THROW(score_message(m, lex, cfg, {}), UsageError);
}

TEST(Combine, WorkedExamples) {
  EXPECT_DOUBLE_EQ(combine(nets({0.4, 0.2, -0.1}),
                           CombinationStrategy::kMajorityVote),
                   0.3);
  EXPECT_EQ(combine(nets({0.4, 0.2, -0.9}), CombinationStrategy::kMaximumWins),
            -0.9);
  const auto v = nets({0.4, 0.2, -0.9});
  EXPECT_EQ(combine(v, CombinationStrategy::kAverageScores),
            (v[0].sentiment.score() + v[1].sentiment.score() +
             v[2].sentiment.score()) / 3.0);
}

TEST(Combine, MajorityAbstentionAndTies) {
  // One positive, two abstaining: no majority, overall mean.
  EXPECT_DOUBLE_EQ(combine(nets({0.6, 0.0, 0.0}),
                           CombinationStrategy::kMajorityVote),
                   0.2);
  EXPECT_DOUBLE_EQ(combine(nets({-0.6, -0.2, 0.0}),
                           CombinationStrategy::kMajorityVote),
                   -0.4);
  EXPECT_DOUBLE_EQ(combine(nets({0.5, -0.3}), CombinationStrategy::kMajorityVote),
                   0.1);
  EXPECT_EQ(combine(nets({0.5, -0.5}), CombinationStrategy::kMaximumWins), -0.5);
  EXPECT_EQ(combine(nets({0.7}), CombinationStrategy::kMajorityVote), 0.7);
  EXPECT_THROW(combine({}, CombinationStrategy::kAverageScores), UsageError);
}

TEST(Combine, ResultWithinScoreRangeProperty) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<NamedSentiment> s;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      MessageSentiment m;
      m.pos_sum = std::max(0.0, u(rng));
      m.neg_sum = std::max(0.0, u(rng));
      s.push_back({"x", m});
    }
    double lo = 1e9;
    double hi = -1e9;
    for (const auto& x : s) {
      lo = std::min(lo, x.sentiment.score());
      hi = std::max(hi, x.sentiment.score());
    }
    for (auto st : {CombinationStrategy::kMajorityVote,
                    CombinationStrategy::kMaximumWins,
                    CombinationStrategy::kAverageScores}) {
      const double c = combine(s, st);
      ASSERT_GE(c, lo - 1e-12);
      ASSERT_LE(c, hi + 1e-12);
    }
  }
}

TEST(Combine, Weighted) {
  const auto v = nets({1.0, -1.0});
  const std::vector<double> w{3.0, 1.0};
  EXPECT_DOUBLE_EQ(combine_weighted(v, w), 0.5);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(combine_weighted(v, zero), UsageError);
  const std::vector<double> neg{-1.0, 2.0};
  EXPECT_THROW(combine_weighted(v, neg), UsageError);
  const std::vector<double> one{1.0};
  EXPECT_THROW(combine_weighted(v, one), UsageError);
}

TEST(Strategy, NamesRoundTrip) {
  for (auto s : {CombinationStrategy::kMajorityVote,
                 CombinationStrategy::kMaximumWins,
                 CombinationStrategy::kAverageScores}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_FALSE(parse_strategy("median"));
  EXPECT_EQ(display_name(CombinationStrategy::kMaximumWins), "Maximum wins");
}

TEST(ScoringConfig, VariantsAndLabels) {
  const auto all = all_scoring_variants();
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all[0].label(), "All words");
  EXPECT_EQ(all[1].label(), "All + Negation");
  EXPECT_EQ(all[2].label(), "All + Frequency");
  EXPECT_EQ(all[7].label(), "Top + Neg. + Freq.");
  const auto top = top_scoring_variants(4);
  ASSERT_EQ(top.size(), 4u);
  for (const auto& c : top) {
    EXPECT_EQ(c.selection, WordSelection::kTopWords);
    EXPECT_EQ(c.top_k, 4);
  }
}

TEST(Polarity, Band) {
  EXPECT_EQ(classify_polarity(0.1), Polarity::kPositive);
  EXPECT_EQ(classify_polarity(-0.1), Polarity::kNegative);
  EXPECT_EQ(classify_polarity(0.0), Polarity::kNeutral);
  EXPECT_EQ(classify_polarity(0.1, 0.2), Polarity::kNeutral);
  EXPECT_THROW(classify_polarity(0.0, -1.0), UsageError);
}

TEST(SentimentScorer, IdiomsAndNegation) {
  const UnifiedLexicon lex = toy_lexicon();
  const FrequencyTable freqs;
  SentimentScorer plain(lex, {}, freqs);
  // The idiom is scored as a unit; "cake" alone is unknown.
  EXPECT_DOUBLE_EQ(plain.score("That was a piece of cake").score(), 0.5);
  EXPECT_DOUBLE_EQ(plain.score("not good").score(), 0.8);
  SentimentScorer neg(lex, {WordSelection::kAllWords, 3, true, false}, freqs);
  EXPECT_DOUBLE_EQ(neg.score("not good").score(), -0.8);
  EXPECT_DOUBLE_EQ(neg.score("not. good").score(), 0.8);
  const std::vector<TaggedWord> tagged{{"awful", "JJ"}};
  EXPECT_DOUBLE_EQ(neg.score(tagged).score(), -1.0);
}

TEST(LexiconEnsemble, CombinesPerLexicon) {
  std::vector<UnifiedLexicon> lexicons{
      toy_lexicon(),
      UnifiedLexicon("other", {{"good", PartOfSpeech::kAny, {0.0, 0.4}}})};
  const FrequencyTable freqs;
  LexiconEnsemble e(lexicons, {}, freqs, CombinationStrategy::kAverageScores);
  EXPECT_EQ(e.size(), 2u);
  const EnsembleScore s = e.score("good");
  ASSERT_EQ(s.per_lexicon.size(), 2u);
  EXPECT_EQ(s.per_lexicon[1].lexicon, "other");
  EXPECT_DOUBLE_EQ(s.combined, 0.2);
  EXPECT_THROW(LexiconEnsemble({}, {}, freqs,
                               CombinationStrategy::kAverageScores),
               UsageError);
}


TEST(Examples, WordContribution) {
  const UnifiedLexicon lex("x", {{"w", PartOfSpeech::kAny, {0.8, 0.1}},
                                 {"v", PartOfSpeech::kAny, {0.6, 0.0}}});
  const FrequencyTable freqs({{"v", 25}, {"the", 100}});
  Token w{"w"};
  w.negated = true;
  Contribution c = word_contribution(w, lex, {WordSelection::kAllWords, 3, true, false}, freqs);
  EXPECT_EQ(c.pos, 0.1);
  EXPECT_EQ(c.neg, 0.8);
  w.negated = false;
  c = word_contribution(w, lex, {}, freqs);
  EXPECT_EQ(c.pos, 0.8);
  EXPECT_EQ(c.neg, 0.1);
  c = word_contribution(Token{"v"}, lex, {WordSelection::kAllWords, 3, false, true}, freqs);
  EXPECT_EQ(c.pos, 0.3);
  EXPECT_EQ(c.neg, 0.0);
}

TEST(Examples, ScoreMessageTopThree) {
  const UnifiedLexicon lex("x", {{"a", PartOfSpeech::kAny, {0.9, 0.0}},
                                 {"b", PartOfSpeech::kAny, {0.5, 0.0}},
                                 {"c", PartOfSpeech::kAny, {0.4, 0.0}},
                                 {"d", PartOfSpeech::kAny, {0.3, 0.0}}});
  ProcessedMessage m;
  for (const char* w : {"d", "a", "c", "b"}) m.tokens.push_back(Token{w});
  const MessageSentiment top =
      score_message(m, lex, {WordSelection::kTopWords, 3, false, false}, {});
  EXPECT_DOUBLE_EQ(top.pos_sum, 1.8);
  EXPECT_DOUBLE_EQ(top.score(), 1.8);
  const MessageSentiment all = score_message(m, lex, {}, {});
  EXPECT_DOUBLE_EQ(all.pos_sum, 2.1);
  EXPECT_EQ(score_message(ProcessedMessage{}, lex, {}, {}).score(), 0.0);
}

TEST(Examples, UnanimousCombination) {
  for (double s : {-0.7, 0.0, 0.35}) {
    const auto v = nets({s, s, s});
    for (auto st : {CombinationStrategy::kMajorityVote,
                    CombinationStrategy::kMaximumWins,
                    CombinationStrategy::kAverageScores}) {
      EXPECT_DOUBLE_EQ(combine(v, st), s);
    }
  }
}

TEST(Examples, Polarity) {
  EXPECT_EQ(classify_polarity(0.3, 0.0), Polarity::kPositive);
  EXPECT_EQ(classify_polarity(0.0, 0.0), Polarity::kNeutral);
  EXPECT_EQ(classify_polarity(-0.05, 0.1), Polarity::kNeutral);
}

}  // namespace
}  // namespace sentox
