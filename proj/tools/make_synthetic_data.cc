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

// Generates the bundled synthetic corpus and the raw fixture lexicons.
//
//   make_synthetic_data <data-dir> [--seed N] [--toxic N] [--clean N]
//
// Writes <data-dir>/corpus/synthetic.jsonl and one source file per lexicon
// format under <data-dir>/lexicons/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "random.h"
#include "sentox/corpus.h"
#include "sentox/strings.h"
#include "sentox/subversion.h"

namespace {

namespace fs = std::filesystem;
using sentox::LabeledMessage;
using sentox::SentimentLabel;

struct Knobs {
  double zipf = 1.0;            // insult frequency skew
  double repeat_insult = 0.5;   // chance of a second insult
  double everyday_clean = 0.3;  // substitution targets in benign text
  double everyday_toxic = 0.0;
  double critical = 0.3;        // share of civil but negative messages
};

const std::vector<std::string> kExtraToxic = {
    "imbecile", "cretin",   "dimwit",     "scumbag",  "nitwit",
    "buffoon",  "lowlife",  "halfwit",    "numbskull", "dirtbag",
    "bonehead", "prick",    "twat",       "wanker",   "degenerate",
    "parasite", "vermin",   "sleazebag",  "douche",   "dickhead"};

const std::vector<std::string> kNegative = {
    "awful",       "horrible",    "terrible",    "dreadful",    "miserable",
    "hideous",     "vile",        "repulsive",   "revolting",   "atrocious",
    "appalling",   "abysmal",     "lousy",       "rotten",      "wretched",
    "shameful",    "disgraceful", "despicable",  "contemptible", "loathsome",
    "hateful",     "spiteful",    "malicious",   "vicious",     "cruel",
    "nasty",       "foul",        "gross",       "sickening",   "nauseating",
    "obnoxious",   "offensive",   "insulting",   "rude",        "arrogant",
    "ignorant",    "clueless",    "incompetent", "useless",     "hopeless",
    "pointless",   "senseless",   "mindless",    "brainless",   "witless",
    "shallow",     "petty",       "bitter",      "jealous",     "greedy",
    "selfish",     "dishonest",   "deceitful",   "corrupt",     "crooked",
    "sleazy",      "slimy",       "creepy",      "sinister",    "toxic",
    "poisonous",   "harmful",     "dangerous",   "hostile",     "violent",
    "brutal",      "savage",      "barbaric",    "ruthless",    "heartless",
    "callous",     "coldblooded", "wicked",      "vindictive",  "nefarious",
    "inferior",    "mediocre",    "shoddy",      "pitiful",     "lame",
    "feeble",      "weak",        "spineless",   "gutless",     "cowardly",
    "lazy",        "sloppy",      "filthy",      "grimy",       "smelly",
    "stinking",    "putrid",      "rancid",      "decrepit",    "broken",
    "ruined",      "doomed",      "cursed",      "damned",      "godawful",
    "insufferable", "intolerable", "unbearable", "annoying",    "irritating",
    "infuriating", "maddening",   "aggravating", "tiresome",    "tedious",
    "boring",      "dull",        "bland",       "stale",       "crude",
    "vulgar",      "obscene",     "lewd",        "depraved",    "perverted",
    "twisted",     "deranged",    "insane",      "crazy",       "psycho",
    "unhinged",    "delusional",  "paranoid",    "hysterical",  "whiny",
    "pompous",     "smug",        "condescending", "patronizing", "snide",
    "sneaky",      "shady",       "fraudulent",  "phony",       "fake",
    "bogus",       "absurd",      "ridiculous",  "ludicrous",   "laughable",
    "idiotic",     "moronic",     "asinine",     "foolish",     "silly",
    "pathological", "sick",       "diseased",    "infected",    "contaminated",
    "wasteful",    "worthless",   "failed",      "failure",     "disaster",
    "catastrophe", "nightmare",   "mess",        "chaos",       "misery",
    "agony",       "torment",     "suffering",   "cruelty",     "hatred",
    "contempt",    "disgust",     "shame",       "disgrace",    "humiliation",
    "insult",      "threat",      "menace",      "curse",       "plague",
    "despise",     "detest",      "loathe",      "abhor",       "resent",
    "ruin",        "destroy",     "wreck",       "crush",       "smash",
    "torture",     "punish",      "humiliate",   "mock",        "ridicule"};

const std::vector<std::string> kPositive = {
    "good",       "great",      "excellent",  "wonderful",  "fantastic",
    "amazing",    "awesome",    "brilliant",  "superb",     "outstanding",
    "lovely",     "beautiful",  "pretty",     "charming",   "delightful",
    "pleasant",   "nice",       "kind",       "friendly",   "helpful",
    "generous",   "thoughtful", "caring",     "gentle",     "warm",
    "happy",      "glad",       "cheerful",   "joyful",     "grateful",
    "thankful",   "pleased",    "excited",    "thrilled",   "proud",
    "smart",      "clever",     "wise",       "talented",   "skilled",
    "useful",     "valuable",   "impressive", "remarkable", "inspiring",
    "fun",        "funny",      "enjoyable",  "interesting", "fascinating",
    "clear",      "clean",      "fresh",      "bright",     "calm",
    "peaceful",   "relaxing",   "comfortable", "cozy",      "safe",
    "fair",       "honest",     "reliable",   "trustworthy", "loyal",
    "brave",      "strong",     "healthy",    "perfect",    "ideal",
    "love",       "like",       "enjoy",      "appreciate", "admire",
    "respect",    "support",    "welcome",    "thanks",     "congrats",
    "success",    "win",        "progress",   "improvement", "benefit",
    "hope",       "joy",        "pleasure",   "comfort",    "praise",
    "neat",       "cool",       "solid",      "sweet",      "elegant",
    "graceful",   "polite",     "patient",    "supportive", "encouraging",
    "promising",  "favorable",  "positive",   "terrific",   "marvelous",
    "splendid",   "glorious",   "magnificent", "stellar",   "flawless"};

// Neutral content words.
const std::vector<std::string> kNouns = {
    "article",  "page",     "edit",     "source",   "reference", "section",
    "paragraph", "citation", "link",    "image",    "template",  "category",
    "discussion", "thread", "comment",  "post",     "topic",     "question",
    "answer",   "version",  "draft",    "summary",  "list",      "table",
    "chart",    "map",      "date",     "year",     "town",      "river",
    "school",   "team",     "game",     "season",   "album",     "song",
    "film",     "book",     "author",   "chapter",  "museum",    "station",
    "bridge",   "road",     "village",  "island",   "mountain",  "lake",
    "harbor",   "market",   "garden",   "tower",    "castle",    "church",
    "library",  "festival", "election", "council",  "railway",   "airport",
    "stadium",  "province", "county",   "parish",   "valley",    "forest",
    "painting", "novel",    "poem",     "band",     "league",    "match",
    "player",   "coach",    "editor",   "reader",   "website",   "archive",
    "infobox",  "footnote", "header",   "caption",  "photo",     "timeline"};

const std::vector<std::string> kVerbs = {
    "added",    "removed",  "changed",  "fixed",    "moved",   "merged",
    "checked",  "updated",  "wrote",    "read",     "cited",   "linked",
    "expanded", "reverted", "renamed",  "tagged",   "listed",  "noted",
    "reviewed", "posted"};

const std::vector<std::string> kPlainAdjectives = {
    "new",     "old",     "long",     "short",   "recent",  "local",
    "final",   "main",    "early",    "late",    "large",   "small",
    "open",    "public",  "general",  "current", "common",  "full",
    "simple",  "original", "regional", "annual", "formal",  "modern",
    "northern", "southern", "urban",  "rural",   "weekly",  "daily"};

const std::vector<std::string> kFunction = {
    "the", "this", "that", "my", "your", "our", "their", "a", "some", "every"};

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(sentox::detail::make_engine(seed, 0)) {}
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(sentox::detail::uniform_index(engine, n));
  }
  double unit() {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool chance(double p) { return unit() < p; }
  const std::string& pick(const std::vector<std::string>& v) {
    return v[index(v.size())];
  }
  // Rank r is drawn with weight 1 / r^s.
  const std::string& pick_zipf(const std::vector<std::string>& v, double s) {
    double total = 0.0;
    for (std::size_t r = 1; r <= v.size(); ++r) total += std::pow(r, -s);
    double u = unit() * total;
    for (std::size_t r = 1; r <= v.size(); ++r) {
      u -= std::pow(r, -s);
      if (u <= 0.0) return v[r - 1];
    }
    return v.back();
  }
};

std::string round2(double v) { return sentox::format_fixed(v, 3); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    const bool punct = p == "," || p == "." || p == "!" || p == "?";
    if (!out.empty() && !punct) out += ' ';
    out += p;
  }
  return out;
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

// Invented words built from one syllable inventory. They stand in for the
// long tail of rare sentiment words and proper names.
std::vector<std::string> coined_words(Rng& rng, std::size_t n,
                                      std::set<std::string>& taken) {
  static const std::vector<std::string> kOnsets = {
      "b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z",
      "br", "dr", "gr", "kr", "pl", "sk", "st", "tr", "sn", "gl"};
  static const std::vector<std::string> kVowels = {"a", "e", "i", "o", "u",
                                                   "ai", "ou", "ee"};
  static const std::vector<std::string> kCodas = {"", "", "n", "r", "sh",
                                                  "k", "l", "m", "x", "th"};
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string w;
    const std::size_t syllables = 2 + rng.index(2);
    for (std::size_t i = 0; i < syllables; ++i) {
      w += rng.pick(kOnsets) + rng.pick(kVowels);
    }
    w += rng.pick(kCodas);
    if (taken.insert(w).second) out.push_back(w);
  }
  return out;
}

struct Vocabulary {
  std::vector<std::string> negative;
  std::vector<std::string> positive;
  std::vector<std::string> names;
  // Substitution targets; ordinary words in benign text.
  std::vector<std::string> everyday;
};

class Generator {
 public:
  Generator(std::uint64_t seed, std::vector<std::string> keywords,
            const Vocabulary& vocab, const Knobs& knobs)
      : rng_(seed), keywords_(std::move(keywords)), vocab_(vocab), knobs_(knobs) {}

  LabeledMessage toxic(const std::string& id) {
    everyday_ = knobs_.everyday_toxic;
    const bool mapped = rng_.chance(0.75);
    std::vector<std::vector<std::string>> clauses;
    const auto& insults = mapped ? keywords_ : kExtraToxic;
    clauses.push_back(address(rng_.pick_zipf(insults, knobs_.zipf)));
    if (rng_.chance(knobs_.repeat_insult)) {
      clauses.push_back(describe(rng_.pick_zipf(insults, knobs_.zipf)));
    }
    const double u = rng_.unit();
    const std::size_t negs = u < 0.3 ? 1 : u < 0.7 ? 2 : 3;
    std::vector<std::string> slots;
    for (std::size_t i = 0; i < negs; ++i) {
      slots.push_back(rng_.pick(vocab_.negative));
    }
    while (slots.size() < 3) slots.push_back(rng_.pick(kPlainAdjectives));
    for (const std::string& w : slots) clauses.push_back(describe(w));
    clauses.push_back(neutral_clause());

    LabeledMessage m;
    m.id = id;
    m.text = render(clauses);
    m.toxicity = rng_.uniform(0.6, 1.0);
    m.toxic_flag = true;
    m.sentiment_label = negs >= 2 ? SentimentLabel::kClearNeg
                                  : SentimentLabel::kSlightNeg;
    return m;
  }

  LabeledMessage clean(const std::string& id) {
    everyday_ = knobs_.everyday_clean;
    std::vector<std::vector<std::string>> clauses;
    LabeledMessage m;
    m.id = id;
    m.toxic_flag = false;
    clauses.push_back(address(rng_.pick(kNouns)));
    std::vector<std::string> slots;
    const double kind = rng_.unit();
    if (kind < knobs_.critical) {
      // Critical but civil.
      const std::size_t negs = rng_.chance(0.6) ? 1 : 2;
      for (std::size_t i = 0; i < negs; ++i) {
        slots.push_back(rng_.pick(vocab_.negative));
      }
      m.sentiment_label = negs == 2 ? SentimentLabel::kClearNeg
                                    : SentimentLabel::kSlightNeg;
      m.toxicity = rng_.uniform(0.1, 0.4);
    } else if (kind < knobs_.critical + 0.2) {
      m.sentiment_label = SentimentLabel::kNeutral;
      m.toxicity = rng_.uniform(0.0, 0.2);
    } else {
      const std::size_t pos = 1 + rng_.index(2);
      for (std::size_t i = 0; i < pos; ++i) {
        slots.push_back(rng_.pick(vocab_.positive));
      }
      m.sentiment_label = pos == 2 ? SentimentLabel::kClearPos
                                   : SentimentLabel::kSlightPos;
      m.toxicity = rng_.uniform(0.0, 0.15);
    }
    const std::size_t described = 3 + rng_.index(2);
    while (slots.size() < described) slots.push_back(rng_.pick(kPlainAdjectives));
    for (const std::string& w : slots) clauses.push_back(describe(w));
    if (m.sentiment_label >= SentimentLabel::kNeutral && rng_.chance(0.1)) {
      clauses.push_back({"not", rng_.pick(vocab_.negative), "at all"});
    }
    if (rng_.chance(0.04)) clauses.push_back({"a piece of cake"});
    clauses.push_back(neutral_clause());
    m.text = render(clauses);
    return m;
  }

  Rng& rng() { return rng_; }

 private:
  const std::string& noun() {
    return rng_.chance(everyday_) ? rng_.pick(vocab_.everyday)
                                  : rng_.pick(kNouns);
  }

  std::vector<std::string> neutral_clause() {
    switch (rng_.index(4)) {
      case 0:
        return {"I", rng_.pick(kVerbs), rng_.pick(kFunction), noun(), "on",
                capitalize(rng_.pick(vocab_.names))};
      case 1:
        return {rng_.pick(kFunction), noun(), "about the", noun(), "was",
                rng_.pick(kVerbs)};
      case 2:
        return {"see the", capitalize(rng_.pick(vocab_.names)), noun(), "in",
                rng_.pick(kFunction), noun()};
      default:
        return {capitalize(rng_.pick(vocab_.names)), rng_.pick(kVerbs), "the",
                noun(), "and the", noun()};
    }
  }

  // Every message shares these frames; only the slot word differs.
  std::vector<std::string> describe(const std::string& w) {
    switch (rng_.index(5)) {
      case 0:
        return {"this", noun(), "is", w};
      case 1:
        return {"so", w};
      case 2:
        return {"what a", w, noun()};
      case 3:
        return {"your", noun(), "is", w};
      default:
        return {"really", w};
    }
  }

  std::vector<std::string> address(const std::string& w) {
    switch (rng_.index(4)) {
      case 0:
        return {"you", w};
      case 1:
        return {"such a", w};
      case 2:
        return {w, "you"};
      default:
        return {"what a", w, "you are"};
    }
  }

  std::string render(std::vector<std::vector<std::string>> clauses) {
    sentox::detail::shuffle(std::span(clauses), rng_.engine);
    std::vector<std::string> words;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      std::vector<std::string> c = clauses[i];
      if (i == 0 || words.back() == ".") c[0] = capitalize(c[0]);
      words.insert(words.end(), c.begin(), c.end());
      if (i + 1 < clauses.size()) {
        words.push_back(rng_.chance(0.5) ? "," : ".");
      }
    }
    words.push_back(rng_.chance(0.8) ? "." : "!");
    return join(words);
  }

  Rng rng_;
  std::vector<std::string> keywords_;
  const Vocabulary& vocab_;
  Knobs knobs_;
  double everyday_ = 0.0;
};

// Every sentiment-bearing word gets an intrinsic polarity strength. Each
// lexicon sees a noisy, partial view of it.
struct Prior {
  std::string term;
  double positivity = 0.0;
  double negativity = 0.0;
  char pos = 'a';
  double coverage = 1.0;  // scales each lexicon's inclusion chance
};

std::vector<Prior> priors(Rng& rng, const std::vector<std::string>& keywords,
                          const Vocabulary& vocab, double insult_coverage) {
  std::vector<Prior> out;
  const char kPosTags[] = {'a', 'a', 'n', 'v'};
  for (const std::string& w : vocab.negative) {
    out.push_back({w, 0.0, rng.uniform(0.35, 0.9), kPosTags[rng.index(4)]});
  }
  for (const std::string& w : vocab.positive) {
    out.push_back({w, rng.uniform(0.35, 0.9), 0.0, kPosTags[rng.index(4)]});
  }
  // Sentiment lexicons cover profanity and slurs only sparsely.
  for (const std::string& w : keywords) {
    out.push_back({w, 0.0, rng.uniform(0.6, 1.0), kPosTags[rng.index(4)],
                   insult_coverage});
  }
  for (const std::string& w : kExtraToxic) {
    out.push_back({w, 0.0, rng.uniform(0.6, 1.0), 'n', insult_coverage});
  }
  out.push_back({"piece_of_cake", 0.6, 0.0, 'n'});
  out.push_back({"pain_in_the_neck", 0.0, 0.7, 'n'});
  std::sort(out.begin(), out.end(),
            [](const Prior& a, const Prior& b) { return a.term < b.term; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Prior& a, const Prior& b) {
                          return a.term == b.term;
                        }),
            out.end());
  return out;
}

std::string spaced(std::string term) {
  std::replace(term.begin(), term.end(), '_', ' ');
  return term;
}

void write_sentiwordnet(std::ostream& f, const std::vector<Prior>& pr, Rng& rng) {
  f << "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n";
  std::uint64_t id = 1000000;
  for (const Prior& p : pr) {
    if (!rng.chance(0.95 * p.coverage)) continue;
    const std::size_t senses = 1 + rng.index(3);
    for (std::size_t s = 1; s <= senses; ++s) {
      // Later senses are weaker.
      const double fade = s == 1 ? 1.0 : rng.uniform(0.2, 0.7);
      double pos = std::min(1.0, p.positivity * fade * rng.uniform(0.8, 1.1));
      double neg = std::min(1.0, p.negativity * fade * rng.uniform(0.8, 1.1));
      pos = std::round(pos * 8.0) / 8.0;
      neg = std::round(neg * 8.0) / 8.0;
      if (pos + neg > 1.0) neg = 1.0 - pos;
      f << p.pos << '\t' << id++ << '\t' << round2(pos) << '\t' << round2(neg)
        << '\t' << p.term << '#' << s << "\tsynthetic sense\n";
    }
  }
}

void write_afinn(std::ostream& f, const std::vector<Prior>& pr, Rng& rng) {
  for (const Prior& p : pr) {
    if (!rng.chance(0.7 * p.coverage)) continue;
    const double net = p.positivity - p.negativity;
    int v = static_cast<int>(std::lround(net * 5.0 * rng.uniform(0.8, 1.2)));
    v = std::clamp(v, -5, 5);
    if (v == 0) v = net > 0 ? 1 : -1;
    f << spaced(p.term) << '\t' << v << '\n';
  }
}

void write_bing_liu(std::ostream& f, const std::vector<Prior>& pr, Rng& rng) {
  f << ";; Opinion lexicon, one term per line with its polarity\n";
  for (const Prior& p : pr) {
    if (p.term.find('_') != std::string::npos || !rng.chance(0.8 * p.coverage)) continue;
    f << p.term << '\t' << (p.positivity > p.negativity ? "positive" : "negative")
      << '\n';
  }
}

void write_general_inquirer(std::ostream& f, const std::vector<Prior>& pr,
                            Rng& rng) {
  f << "Entry\tSource\tPositiv\tNegativ\tHostile\tOthtags\n";
  for (const Prior& p : pr) {
    if (p.term.find('_') != std::string::npos || !rng.chance(0.6 * p.coverage)) continue;
    std::string entry = p.term;
    for (char& c : entry) c = static_cast<char>(std::toupper(c));
    const bool positive = p.positivity > p.negativity;
    const std::size_t senses = rng.chance(0.2) ? 2 : 1;
    for (std::size_t s = 1; s <= senses; ++s) {
      f << entry << (senses > 1 ? "#" + std::to_string(s) : "") << "\tH4Lvd\t"
        << (positive ? "Positiv" : "") << '\t' << (positive ? "" : "Negativ")
        << '\t' << (!positive && p.negativity > 0.7 ? "Hostile" : "")
        << "\tModif\n";
    }
  }
}

void write_subjectivity_clues(std::ostream& f, const std::vector<Prior>& pr,
                              Rng& rng) {
  static const char* kClue[] = {"adj", "noun", "verb", "anypos"};
  for (const Prior& p : pr) {
    if (p.term.find('_') != std::string::npos || !rng.chance(0.75 * p.coverage)) continue;
    const double strength = std::max(p.positivity, p.negativity);
    const char* pos1 = kClue[p.pos == 'a' ? 0 : p.pos == 'n' ? 1 : p.pos == 'v' ? 2 : 3];
    f << "type=" << (strength > 0.6 ? "strongsubj" : "weaksubj")
      << " len=1 word1=" << p.term << " pos1=" << pos1
      << " stemmed1=n priorpolarity="
      << (p.positivity > p.negativity ? "positive" : "negative") << '\n';
  }
}

void write_nrc(std::ostream& f, const std::vector<Prior>& pr, Rng& rng) {
  static const char* kCategories[] = {"anger",    "anticipation", "disgust",
                                      "fear",     "joy",          "negative",
                                      "positive", "sadness",      "surprise",
                                      "trust"};
  for (const Prior& p : pr) {
    if (p.term.find('_') != std::string::npos || !rng.chance(0.65 * p.coverage)) continue;
    const bool positive = p.positivity > p.negativity;
    for (const char* c : kCategories) {
      const std::string cat = c;
      int flag = 0;
      if (cat == "positive") flag = positive;
      else if (cat == "negative") flag = !positive;
      else if (cat == "joy" || cat == "trust") flag = positive && rng.chance(0.4);
      else if (cat == "anger" || cat == "disgust") flag = !positive && rng.chance(0.4);
      f << p.term << '\t' << cat << '\t' << flag << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Generate the synthetic corpus and fixture lexicons");
  std::string dir;
  std::uint64_t seed = 20240611;
  std::size_t toxic = 2000;
  std::size_t clean = 4000;
  app.add_option("data-dir", dir, "Output data directory")->required();
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--toxic", toxic, "Toxic messages");
  app.add_option("--clean", clean, "Non-toxic messages");
  std::size_t coined_negative = 1200;
  std::size_t coined_positive = 800;
  std::size_t coined_names = 600;
  app.add_option("--coined-negative", coined_negative,
                 "Invented negative words");
  app.add_option("--coined-positive", coined_positive,
                 "Invented positive words");
  app.add_option("--coined-names", coined_names, "Invented proper names");
  Knobs knobs;
  double insult_coverage = 0.4;
  app.add_option("--insult-coverage", insult_coverage,
                 "Lexicon inclusion rate of insults relative to other words");
  app.add_option("--zipf", knobs.zipf, "Insult frequency skew");
  app.add_option("--repeat-insult", knobs.repeat_insult,
                 "Chance of a second insult in a toxic message");
  app.add_option("--everyday-clean", knobs.everyday_clean,
                 "Chance of a substitution target in a benign message");
  app.add_option("--critical", knobs.critical,
                 "Share of benign messages that are critical");
  app.add_option("--everyday-toxic", knobs.everyday_toxic,
                 "Chance of a substitution target in a toxic message");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> keywords;
  for (const auto& [from, to] : sentox::SubstitutionMap::defaults().pairs()) {
    keywords.push_back(from);
  }

  Vocabulary vocab;
  std::set<std::string> taken;
  for (const auto& [from, to] : sentox::SubstitutionMap::defaults().pairs()) {
    taken.insert(from);
    taken.insert(to);
    vocab.everyday.push_back(to);
  }
  for (const auto* list : {&kExtraToxic, &kNegative, &kPositive, &kNouns,
                           &kVerbs, &kFunction, &kPlainAdjectives}) {
    taken.insert(list->begin(), list->end());
  }

  // Context words must survive subversion untouched.
  for (const std::string& w : kNegative) {
    if (std::find(keywords.begin(), keywords.end(), w) == keywords.end()) {
      vocab.negative.push_back(w);
    }
  }
  vocab.positive = kPositive;
  Rng coin_rng(seed + 2);
  for (const std::string& w : coined_words(coin_rng, coined_negative, taken)) {
    vocab.negative.push_back(w);
  }
  for (const std::string& w : coined_words(coin_rng, coined_positive, taken)) {
    vocab.positive.push_back(w);
  }
  vocab.names = coined_words(coin_rng, coined_names, taken);

  // Frequency ranks follow a shuffled order.
  std::vector<std::string> ranked = keywords;
  sentox::detail::shuffle(std::span(ranked), coin_rng.engine);
  Generator gen(seed, ranked, vocab, knobs);
  std::vector<LabeledMessage> corpus;
  for (std::size_t i = 0; i < toxic; ++i) {
    corpus.push_back(gen.toxic("t" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < clean; ++i) {
    corpus.push_back(gen.clean("c" + std::to_string(i)));
  }
  sentox::detail::shuffle(std::span(corpus), gen.rng().engine);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    corpus[i].id = "syn-" + std::to_string(i + 1);
    corpus[i].toxicity = std::round(*corpus[i].toxicity * 1000.0) / 1000.0;
  }

  fs::create_directories(fs::path(dir) / "corpus");
  fs::create_directories(fs::path(dir) / "lexicons");
  {
    std::ofstream f(fs::path(dir) / "corpus" / "synthetic.jsonl", std::ios::binary);
    sentox::write_corpus(f, corpus);
  }

  Rng lex_rng(seed + 1);
  const std::vector<Prior> pr = priors(lex_rng, keywords, vocab, insult_coverage);
  const fs::path lex = fs::path(dir) / "lexicons";
  std::ofstream swn(lex / "sentiwordnet.txt", std::ios::binary);
  write_sentiwordnet(swn, pr, lex_rng);
  std::ofstream afinn(lex / "afinn.txt", std::ios::binary);
  write_afinn(afinn, pr, lex_rng);
  std::ofstream bing(lex / "bing_liu.txt", std::ios::binary);
  write_bing_liu(bing, pr, lex_rng);
  std::ofstream gi(lex / "general_inquirer.tsv", std::ios::binary);
  write_general_inquirer(gi, pr, lex_rng);
  std::ofstream mpqa(lex / "subjectivity_clues.tff", std::ios::binary);
  write_subjectivity_clues(mpqa, pr, lex_rng);
  std::ofstream nrc(lex / "nrc.txt", std::ios::binary);
  write_nrc(nrc, pr, lex_rng);

  std::cout << "wrote " << corpus.size() << " messages and 6 lexicons to "
            << dir << '\n';
  return 0;
}
