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

#include "sentox/lexicon.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sentox/error.h"
#include "test_util.h"

namespace sentox {
namespace {

using testing::load_raw_lexicon;

// Rank-weighted mean, written out term by term.
SentimentScore brute_force_merge(const std::vector<SynsetRecord>& group) {
  long double num_p = 0.0L;
  long double num_n = 0.0L;
  long double den = 0.0L;
  for (const SynsetRecord& r : group) {
    const long double w = 1.0L / static_cast<long double>(r.rank);
    num_p += static_cast<long double>(r.positivity) * w;
    num_n += static_cast<long double>(r.negativity) * w;
    den += w;
  }
  return {static_cast<double>(num_p / den), static_cast<double>(num_n / den)};
}

class WarningCapture {
 public:
  WarningCapture() {
    previous_ = set_warning_handler(
        [this](std::string_view m) { messages.emplace_back(m); });
  }
  ~WarningCapture() { set_warning_handler(std::move(previous_)); }
  std::vector<std::string> messages;

 private:
  WarningHandler previous_;
};

TEST(MergeSynsets, TwoSensesByHand) {
  const std::vector<SynsetRecord> group{
      {"good", PartOfSpeech::kAdjective, 1, 0.5, 0.0},
      {"good", PartOfSpeech::kAdjective, 2, 0.2, 0.1}};
  const SentimentScore s = merge_synsets(group);
  // (0.5 + 0.1) / 1.5 and 0.05 / 1.5
  EXPECT_NEAR(s.positivity, 0.4, 1e-15);
  EXPECT_NEAR(s.negativity, 0.05 / 1.5, 1e-15);
}

TEST(MergeSynsets, SingleSenseIsIdentity) {
  const std::vector<SynsetRecord> group{
      {"bad", PartOfSpeech::kAdjective, 3, 0.125, 0.625}};
  EXPECT_EQ(merge_synsets(group), (SentimentScore{0.125, 0.625}));
}

TEST(MergeSynsets, MatchesBruteForceOnRandomGroups) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<int> ranks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::shuffle(ranks.begin(), ranks.end(), rng);
    std::vector<SynsetRecord> group;
    for (int i = 0; i < k; ++i) {
      const double p = unit(rng);
      const double n = unit(rng) * (1.0 - p);
      group.push_back({"w", PartOfSpeech::kNoun, ranks[i], p, n});
    }
    const SentimentScore got = merge_synsets(group);
    const SentimentScore want = brute_force_merge(group);
    EXPECT_NEAR(got.positivity, want.positivity, 1e-12);
    EXPECT_NEAR(got.negativity, want.negativity, 1e-12);
    // A weighted mean stays inside the range of its inputs.
    double lo = 1.0;
    double hi = 0.0;
    for (const auto& r : group) {
      lo = std::min(lo, r.positivity);
      hi = std::max(hi, r.positivity);
    }
    EXPECT_GE(got.positivity, lo - 1e-15);
    EXPECT_LE(got.positivity, hi + 1e-15);
  }
}

TEST(MergeSynsets, OrderDoesNotMatter) {
  std::vector<SynsetRecord> group{{"w", PartOfSpeech::kNoun, 1, 0.1, 0.3},
                                  {"w", PartOfSpeech::kNoun, 4, 0.7, 0.0},
                                  {"w", PartOfSpeech::kNoun, 2, 0.4, 0.2}};
  const SentimentScore a = merge_synsets(group);
  std::reverse(group.begin(), group.end());
  const SentimentScore b = merge_synsets(group);
  EXPECT_NEAR(a.positivity, b.positivity, 1e-15);
  EXPECT_NEAR(a.negativity, b.negativity, 1e-15);
}

TEST(MergeSynsets, RejectsEmptyAndDuplicateRanks) {
  EXPECT_THROW(merge_synsets({}), UsageError);
  const std::vector<SynsetRecord> dup{{"w", PartOfSpeech::kNoun, 1, 0.1, 0.0},
                                      {"w", PartOfSpeech::kNoun, 1, 0.2, 0.0}};
  EXPECT_THROW(merge_synsets(dup), IngestionError);
}

TEST(NormalizeTerm, FoldsCaseAndJoinsWords) {
  EXPECT_EQ(normalize_term("Piece of  Cake"), "piece_of_cake");
  EXPECT_EQ(normalize_term("GOOD"), "good");
}

TEST(Afinn, MinusThreeBecomesZeroPointSixNegativity) {
  std::istringstream in("abandon\t-3\n");
  const UnifiedLexicon lex = parse_afinn(in);
  EXPECT_EQ(lex.name(), "afinn");
  EXPECT_EQ(lex.lookup("abandon", PartOfSpeech::kAny),
            (SentimentScore{0.0, 0.6}));
}

TEST(Afinn, SignRoundTripForAllValues) {
  for (int v = -5; v <= 5; ++v) {
    std::istringstream in("w\t" + std::to_string(v) + "\n");
    const UnifiedLexicon lex = parse_afinn(in);
    const SentimentScore s = *lex.lookup("w", PartOfSpeech::kAny);
    EXPECT_EQ(s.positivity == 0.0 || s.negativity == 0.0, true);
    const double back = 5.0 * (s.positivity - s.negativity);
    EXPECT_DOUBLE_EQ(back, static_cast<double>(v)) << v;
  }
}

TEST(Afinn, MultiwordEntriesBecomeIdioms) {
  std::istringstream in("no fun\t-3\ncool stuff\t3\n");
  const UnifiedLexicon lex = parse_afinn(in);
  EXPECT_TRUE(lex.idioms().count("no_fun"));
  EXPECT_TRUE(lex.idioms().count("cool_stuff"));
}

TEST(Afinn, ReportsLineOfBadValue) {
  std::istringstream in("good\t3\nbad\t-7\n");
  try {
    parse_afinn(in, "afinn.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.source(), "afinn.txt");
  }
  std::istringstream not_int("good\tthree\n");
  EXPECT_THROW(parse_afinn(not_int), ParseError);
}

TEST(BingLiu, TaggedFile) {
  WarningCapture warnings;
  std::istringstream in(
      ";; comment\ngood\tpositive\nbad\tnegative\nenvious\tpositive\n"
      "envious\tnegative\n");
  const UnifiedLexicon lex = parse_binary_list(in, BinaryScheme::kBingLiu);
  EXPECT_EQ(lex.name(), "bing_liu");
  EXPECT_EQ(lex.lookup("good", PartOfSpeech::kAny), (SentimentScore{1, 0}));
  EXPECT_EQ(lex.lookup("bad", PartOfSpeech::kAny), (SentimentScore{0, 1}));
  EXPECT_EQ(lex.lookup("envious", PartOfSpeech::kAny), (SentimentScore{1, 1}));
  ASSERT_EQ(warnings.messages.size(), 1u);
  EXPECT_NE(warnings.messages[0].find("envious"), std::string::npos);
}

TEST(BingLiu, TwoLists) {
  std::istringstream pos(";; positive words\ngood\nnice\n");
  std::istringstream neg(";; negative words\nbad\n");
  const UnifiedLexicon lex = parse_bing_liu_lists(pos, neg);
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.lookup("nice", PartOfSpeech::kAny), (SentimentScore{1, 0}));
}

TEST(BingLiu, RejectsUnknownLabel) {
  std::istringstream in("good\tpositive\nbad\tawful\n");
  EXPECT_THROW(parse_binary_list(in, BinaryScheme::kBingLiu), ParseError);
}

TEST(GeneralInquirer, HeaderSensesAndEmptyTags) {
  std::istringstream in(
      "Entry\tSource\tPositiv\tNegativ\tHostile\n"
      "ABLE\tH4\tPositiv\t\t\n"
      "ABANDON#1\tH4\t\tNegativ\tHostile\n"
      "ABANDON#2\tH4\t\tNegativ\t\n"
      "ABOUT\tH4\t\t\t\n");
  const UnifiedLexicon lex =
      parse_binary_list(in, BinaryScheme::kGeneralInquirer);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.lookup("able", PartOfSpeech::kAny), (SentimentScore{1, 0}));
  EXPECT_EQ(lex.lookup("abandon", PartOfSpeech::kAny), (SentimentScore{0, 1}));
  EXPECT_FALSE(lex.lookup("about", PartOfSpeech::kAny));
}

TEST(GeneralInquirer, MissingHeaderIsParseError) {
  std::istringstream in("ABLE\tH4\tPositiv\t\n");
  EXPECT_THROW(parse_binary_list(in, BinaryScheme::kGeneralInquirer),
               ParseError);
}

TEST(Nrc, KeepsOnlyPolarityCategories) {
  std::istringstream in(
      "abandon\tfear\t1\nabandon\tnegative\t1\nabandon\tpositive\t0\n"
      "cheer\tjoy\t1\ncheer\tpositive\t1\nbland\tanger\t1\n");
  const UnifiedLexicon lex = parse_binary_list(in, BinaryScheme::kNrc);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.lookup("abandon", PartOfSpeech::kAny), (SentimentScore{0, 1}));
  EXPECT_EQ(lex.lookup("cheer", PartOfSpeech::kAny), (SentimentScore{1, 0}));
  std::istringstream bad("abandon\tfear\t2\n");
  EXPECT_THROW(parse_binary_list(bad, BinaryScheme::kNrc), ParseError);
}

TEST(SubjectivityClues, StrengthPolarityAndPos) {
  WarningCapture warnings;
  std::istringstream in(
      "type=strongsubj len=1 word1=abuse pos1=verb stemmed1=y "
      "priorpolarity=negative\n"
      "type=weaksubj len=1 word1=able pos1=adj stemmed1=n "
      "priorpolarity=positive\n"
      "type=weaksubj len=1 word1=about pos1=anypos priorpolarity=neutral\n"
      "type=strongsubj len=1 word1=brag pos1=anypos priorpolarity=both\n"
      "len=1 word1=odd pos1=adj priorpolarity=negative\n");
  const UnifiedLexicon lex = parse_subjectivity_clues(in);
  EXPECT_EQ(lex.lookup("abuse", PartOfSpeech::kVerb), (SentimentScore{0, 1}));
  EXPECT_EQ(lex.lookup("able", PartOfSpeech::kAdjective),
            (SentimentScore{0.5, 0}));
  EXPECT_FALSE(lex.lookup("about", PartOfSpeech::kAny));
  EXPECT_EQ(lex.lookup("brag", PartOfSpeech::kAny), (SentimentScore{1, 1}));
  EXPECT_EQ(lex.lookup("odd", PartOfSpeech::kAdjective),
            (SentimentScore{0, 0.5}));
  EXPECT_EQ(warnings.messages.size(), 1u);
  EXPECT_TRUE(lex.pos_bearing());
}

TEST(SubjectivityClues, MalformedRecord) {
  std::istringstream in("type=strongsubj word1\n");
  EXPECT_THROW(parse_subjectivity_clues(in), ParseError);
  std::istringstream no_polarity("type=strongsubj word1=x\n");
  EXPECT_THROW(parse_subjectivity_clues(no_polarity), ParseError);
}

TEST(SentiWordNet, GroupsByTermAndPosThenMerges) {
  std::istringstream in(
      "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n"
      "a\t1\t0.5\t0\tgood#1 full#3\tgloss\n"
      "s\t2\t0.25\t0.125\tgood#2\tgloss\n"
      "n\t3\t0\t0.75\tgood#1\tgloss\n"
      "v\t4\t0.125\t0\tcake_walk#1\tgloss\n");
  const UnifiedLexicon lex = parse_sentiwordnet(in);
  const SentimentScore adj = *lex.lookup("good", PartOfSpeech::kAdjective);
  EXPECT_NEAR(adj.positivity, (0.5 + 0.25 / 2) / 1.5, 1e-15);
  EXPECT_NEAR(adj.negativity, (0.125 / 2) / 1.5, 1e-15);
  EXPECT_EQ(lex.lookup("good", PartOfSpeech::kNoun), (SentimentScore{0, 0.75}));
  EXPECT_EQ(lex.lookup("full", PartOfSpeech::kAdjective),
            (SentimentScore{0.5, 0}));
  EXPECT_TRUE(lex.idioms().count("cake_walk"));
}

TEST(SentiWordNet, RejectsBadRows) {
  std::istringstream sum("a\t1\t0.75\t0.5\tgood#1\n");
  EXPECT_THROW(parse_sentiwordnet(sum), ParseError);
  std::istringstream pos("x\t1\t0.5\t0\tgood#1\n");
  EXPECT_THROW(parse_sentiwordnet(pos), ParseError);
  std::istringstream rank("a\t1\t0.5\t0\tgood\n");
  EXPECT_THROW(parse_sentiwordnet(rank), ParseError);
  std::istringstream dup("a\t1\t0.5\t0\tgood#1\na\t2\t0.1\t0\tgood#1\n");
  EXPECT_THROW(parse_sentiwordnet(dup), IngestionError);
}

TEST(UnifiedLexicon, LookupOrder) {
  const UnifiedLexicon lex(
      "test", {{"run", PartOfSpeech::kVerb, {0.25, 0.0}},
               {"run", PartOfSpeech::kNoun, {0.75, 0.5}},
               {"fine", PartOfSpeech::kAny, {0.5, 0.0}},
               {"fine", PartOfSpeech::kNoun, {0.0, 0.25}}});
  // Exact match.
  EXPECT_EQ(lex.lookup("run", PartOfSpeech::kVerb), (SentimentScore{0.25, 0}));
  // Falls back to the Any entry before averaging.
  EXPECT_EQ(lex.lookup("fine", PartOfSpeech::kVerb), (SentimentScore{0.5, 0}));
  // Mean across POS entries.
  EXPECT_EQ(lex.lookup("run", PartOfSpeech::kAny),
            (SentimentScore{0.5, 0.25}));
  EXPECT_EQ(lex.lookup("RUN", PartOfSpeech::kAdverb),
            (SentimentScore{0.5, 0.25}));
  EXPECT_FALSE(lex.lookup("walk", PartOfSpeech::kAny));
}

TEST(UnifiedLexicon, NoPosAveragingWithoutPosEntries) {
  const UnifiedLexicon lex("plain", {{"good", PartOfSpeech::kAny, {1, 0}}});
  EXPECT_FALSE(lex.pos_bearing());
  EXPECT_EQ(lex.lookup("good", PartOfSpeech::kNoun), (SentimentScore{1, 0}));
}

TEST(UnifiedLexicon, RejectsDuplicatesAndRange) {
  EXPECT_THROW(UnifiedLexicon("d", {{"a", PartOfSpeech::kAny, {1, 0}},
                                    {"A", PartOfSpeech::kAny, {0, 1}}}),
               IngestionError);
  EXPECT_THROW(UnifiedLexicon("r", {{"a", PartOfSpeech::kAny, {1.5, 0}}}),
               IngestionError);
  EXPECT_THROW(UnifiedLexicon("e", {{"  ", PartOfSpeech::kAny, {1, 0}}}),
               IngestionError);
}

TEST(UnifiedLexicon, TsvRoundTrip) {
  const UnifiedLexicon lex(
      "rt", {{"good", PartOfSpeech::kAdjective, {0.1 + 0.2, 0.0}},
             {"piece of cake", PartOfSpeech::kAny, {0.6, 0.0}},
             {"bad", PartOfSpeech::kAny, {0.0, 1.0 / 3.0}}});
  std::ostringstream out;
  lex.write_tsv(out);
  std::istringstream in(out.str());
  const UnifiedLexicon back = UnifiedLexicon::read_tsv(in, "rt");
  EXPECT_EQ(back.entries(), lex.entries());
  EXPECT_EQ(back.idioms(), lex.idioms());
  EXPECT_EQ(back.pos_bearing(), lex.pos_bearing());
}

TEST(UnifiedLexicon, TsvErrors) {
  std::istringstream fields("good\tadj\t0.5\n");
  EXPECT_THROW(UnifiedLexicon::read_tsv(fields, "x"), ParseError);
  std::istringstream pos("good\tpronoun\t0.5\t0\n");
  EXPECT_THROW(UnifiedLexicon::read_tsv(pos, "x"), ParseError);
  std::istringstream range("good\tadj\t0.5\t2\n");
  EXPECT_THROW(UnifiedLexicon::read_tsv(range, "x"), ParseError);
  EXPECT_THROW(UnifiedLexicon::load_tsv("/nonexistent/x.tsv"), UsageError);
}

TEST(LexiconFormat, NamesRoundTrip) {
  for (auto f : {LexiconFormat::kSentiWordNet, LexiconFormat::kAfinn,
                 LexiconFormat::kBingLiu, LexiconFormat::kGeneralInquirer,
                 LexiconFormat::kSubjectivityClues, LexiconFormat::kNrc}) {
    EXPECT_EQ(parse_lexicon_format(default_lexicon_name(f)), f);
  }
  EXPECT_FALSE(parse_lexicon_format("vader"));
}

TEST(BundledLexicons, AllSixParseAndShareVocabulary) {
  std::vector<UnifiedLexicon> all;
  for (auto f : {LexiconFormat::kSentiWordNet, LexiconFormat::kAfinn,
                 LexiconFormat::kBingLiu, LexiconFormat::kGeneralInquirer,
                 LexiconFormat::kSubjectivityClues, LexiconFormat::kNrc}) {
    all.push_back(load_raw_lexicon(f));
    EXPECT_EQ(all.back().name(), default_lexicon_name(f));
    EXPECT_GT(all.back().size(), 100u);
    for (const auto& [key, score] : all.back().entries()) {
      ASSERT_GE(score.positivity, 0.0);
      ASSERT_LE(score.positivity, 1.0);
      ASSERT_GE(score.negativity, 0.0);
      ASSERT_LE(score.negativity, 1.0);
    }
  }
  EXPECT_TRUE(all[0].pos_bearing());
  const auto common = common_vocabulary(all);
  EXPECT_FALSE(common.empty());
  for (const std::string& term : common) {
    for (const UnifiedLexicon& lex : all) {
      EXPECT_TRUE(lex.vocabulary().count(term)) << term << " " << lex.name();
    }
  }
}


TEST(Examples, WorkedMergeCases) {
  const std::vector<SynsetRecord> two{{"w", PartOfSpeech::kNoun, 1, 0.5, 0.0},
                                      {"w", PartOfSpeech::kNoun, 2, 0.25, 0.0}};
  EXPECT_NEAR(merge_synsets(two).positivity, 0.625 / 1.5, 1e-15);
  const std::vector<SynsetRecord> terrorize{
      {"terrorize", PartOfSpeech::kVerb, 1, 0.125, 0.250}};
  EXPECT_EQ(merge_synsets(terrorize), (SentimentScore{0.125, 0.250}));
}

TEST(Examples, TableOneRows) {
  std::istringstream afinn("helpless\t-3\nmerry\t3\nmeh\t0\n");
  const UnifiedLexicon a = parse_afinn(afinn);
  EXPECT_EQ(a.lookup("helpless", PartOfSpeech::kAny), (SentimentScore{0, 0.6}));
  EXPECT_EQ(a.lookup("merry", PartOfSpeech::kAny), (SentimentScore{0.6, 0}));
  EXPECT_EQ(a.lookup("meh", PartOfSpeech::kAny), (SentimentScore{0, 0}));
  EXPECT_EQ(a.lookup("helpless", PartOfSpeech::kNoun), (SentimentScore{0, 0.6}));
  EXPECT_FALSE(a.lookup("absent", PartOfSpeech::kAny));

  std::istringstream pos("joke\n");
  std::istringstream neg("terrorize\n");
  const UnifiedLexicon b = parse_bing_liu_lists(pos, neg);
  EXPECT_EQ(b.lookup("terrorize", PartOfSpeech::kAny), (SentimentScore{0, 1}));

  std::istringstream gi("Entry\tPositiv\tNegativ\nJOKE\tPositiv\t\n");
  EXPECT_EQ(parse_binary_list(gi, BinaryScheme::kGeneralInquirer)
                .lookup("joke", PartOfSpeech::kAny),
            (SentimentScore{1, 0}));

  std::istringstream nrc("bland\tpositive\t0\nbland\tnegative\t0\n");
  EXPECT_TRUE(parse_binary_list(nrc, BinaryScheme::kNrc).empty());

  std::istringstream clues(
      "type=strongsubj len=1 word1=terrorize pos1=verb priorpolarity=negative\n"
      "type=weaksubj len=1 word1=helpless pos1=adj priorpolarity=negative\n"
      "type=strongsubj len=1 word1=joke pos1=noun priorpolarity=positive\n");
  const UnifiedLexicon c = parse_subjectivity_clues(clues);
  EXPECT_EQ(c.lookup("terrorize", PartOfSpeech::kVerb), (SentimentScore{0, 1}));
  EXPECT_EQ(c.lookup("helpless", PartOfSpeech::kAdjective),
            (SentimentScore{0, 0.5}));
  EXPECT_EQ(c.lookup("joke", PartOfSpeech::kNoun), (SentimentScore{1, 0}));
}

TEST(Examples, SentiWordNetFixture) {
  std::istringstream in(
      "v\t1\t0\t0.5\tgive_up#1 abandon#2\tgloss\n"
      "v\t2\t0.25\t0.25\tgive_up#2\tgloss\n"
      "v\t3\t0\t0.125\tabandon#1\tgloss\n");
  const UnifiedLexicon lex = parse_sentiwordnet(in);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_TRUE(lex.idioms().count("give_up"));
  const std::vector<SynsetRecord> give_up{
      {"give_up", PartOfSpeech::kVerb, 1, 0, 0.5},
      {"give_up", PartOfSpeech::kVerb, 2, 0.25, 0.25}};
  const std::vector<SynsetRecord> abandon{
      {"abandon", PartOfSpeech::kVerb, 2, 0, 0.5},
      {"abandon", PartOfSpeech::kVerb, 1, 0, 0.125}};
  for (const auto& [term, group] :
       {std::pair{"give_up", give_up}, std::pair{"abandon", abandon}}) {
    const SentimentScore got = *lex.lookup(term, PartOfSpeech::kVerb);
    const SentimentScore want = brute_force_merge(group);
    EXPECT_NEAR(got.positivity, want.positivity, 1e-12);
    EXPECT_NEAR(got.negativity, want.negativity, 1e-12);
  }
  std::istringstream empty("");
  const UnifiedLexicon none = parse_sentiwordnet(empty);
  EXPECT_TRUE(none.empty());
  EXPECT_TRUE(none.idioms().empty());
}

TEST(Examples, MeanAcrossPos) {
  const UnifiedLexicon lex(
      "x", {{"run", PartOfSpeech::kNoun, {0.2, 0}},
            {"run", PartOfSpeech::kVerb, {0.4, 0}}});
  const SentimentScore s = *lex.lookup("run", PartOfSpeech::kAdjective);
  EXPECT_DOUBLE_EQ(s.positivity, 0.3);
  EXPECT_EQ(s.negativity, 0.0);
}

}  // namespace
}  // namespace sentox
