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

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {
namespace {

constexpr double kSentiWordNetSumSlack = 1e-9;

std::string source_name(std::string_view source) {
  return source.empty() ? std::string("<input>") : std::string(source);
}

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

// Accumulates binary tags so a term tagged both ways ends up as (1, 1).
struct BinaryTags {
  bool positive = false;
  bool negative = false;
};

UnifiedLexicon from_binary_tags(std::string name,
                                const std::map<std::string, BinaryTags>& tags) {
  std::vector<LexiconEntry> entries;
  entries.reserve(tags.size());
  for (const auto& [term, t] : tags) {
    if (!t.positive && !t.negative) continue;
    if (t.positive && t.negative) {
      warn("term '" + term + "' in " + name +
           " is tagged both positive and negative; keeping (1, 1)");
    }
    entries.push_back({term, PartOfSpeech::kAny,
                       {t.positive ? 1.0 : 0.0, t.negative ? 1.0 : 0.0}});
  }
  return UnifiedLexicon(std::move(name), std::move(entries));
}

std::optional<PartOfSpeech> sentiwordnet_pos(std::string_view letter) {
  if (letter == "n") return PartOfSpeech::kNoun;
  if (letter == "v") return PartOfSpeech::kVerb;
  if (letter == "a" || letter == "s") return PartOfSpeech::kAdjective;
  if (letter == "r") return PartOfSpeech::kAdverb;
  return std::nullopt;
}

PartOfSpeech clue_pos(std::string_view tag) {
  if (tag == "noun") return PartOfSpeech::kNoun;
  if (tag == "verb") return PartOfSpeech::kVerb;
  if (tag == "adj") return PartOfSpeech::kAdjective;
  if (tag == "adverb") return PartOfSpeech::kAdverb;
  return PartOfSpeech::kAny;
}

}  // namespace

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun:
      return "noun";
    case PartOfSpeech::kVerb:
      return "verb";
    case PartOfSpeech::kAdjective:
      return "adj";
    case PartOfSpeech::kAdverb:
      return "adv";
    case PartOfSpeech::kAny:
      return "any";
  }
  return "any";
}

std::optional<PartOfSpeech> parse_part_of_speech(std::string_view name) {
  for (auto pos : {PartOfSpeech::kNoun, PartOfSpeech::kVerb,
                   PartOfSpeech::kAdjective, PartOfSpeech::kAdverb,
                   PartOfSpeech::kAny}) {
    if (name == to_string(pos)) return pos;
  }
  return std::nullopt;
}

SentimentScore merge_synsets(std::span<const SynsetRecord> records) {
  if (records.empty()) throw UsageError("merge_synsets: no synset records");
  const SynsetRecord& first = records.front();
  std::set<int> seen_ranks;
  double weight_sum = 0.0;
  double pos_sum = 0.0;
  double neg_sum = 0.0;
  for (const SynsetRecord& r : records) {
    if (r.term != first.term || r.pos != first.pos) {
      throw UsageError("merge_synsets: records for '" + first.term +
                       "' mix terms or parts of speech");
    }
    if (r.rank < 1) {
      throw IngestionError("synset rank must be >= 1 for '" + r.term + "'");
    }
    if (!seen_ranks.insert(r.rank).second) {
      throw IngestionError("duplicate synset rank " + std::to_string(r.rank) +
                           " for '" + r.term + "' (" +
                           std::string(to_string(r.pos)) + ")");
    }
    const double w = 1.0 / r.rank;
    weight_sum += w;
    pos_sum += r.positivity * w;
    neg_sum += r.negativity * w;
  }
  return {pos_sum / weight_sum, neg_sum / weight_sum};
}

std::string normalize_term(std::string_view term) {
  std::string folded = ascii_lower(trim(term));
  std::string out;
  out.reserve(folded.size());
  bool in_space = false;
  for (char c : folded) {
    if (c == ' ' || c == '\t') {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back('_');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

UnifiedLexicon::UnifiedLexicon(std::string name,
                               std::vector<LexiconEntry> entries)
    : name_(std::move(name)) {
  for (LexiconEntry& e : entries) {
    std::string term = normalize_term(e.term);
    if (term.empty()) throw IngestionError(name_ + ": empty term");
    if (!in_unit_interval(e.score.positivity) ||
        !in_unit_interval(e.score.negativity)) {
      throw IngestionError(name_ + ": score for '" + term +
                           "' outside [0, 1]");
    }
    if (term.find('_') != std::string::npos) idioms_.insert(term);
    if (e.pos != PartOfSpeech::kAny) pos_bearing_ = true;
    auto [it, inserted] = entries_.emplace(Key{term, e.pos}, e.score);
    if (!inserted) {
      throw IngestionError(name_ + ": duplicate entry for '" + term + "' (" +
                           std::string(to_string(e.pos)) + ")");
    }
  }
}

std::set<std::string> UnifiedLexicon::vocabulary() const {
  std::set<std::string> out;
  for (const auto& [key, score] : entries_) out.insert(key.first);
  return out;
}

std::optional<SentimentScore> UnifiedLexicon::lookup(std::string_view term,
                                                     PartOfSpeech pos) const {
  const std::string folded = ascii_lower(term);
  if (auto it = entries_.find({folded, pos}); it != entries_.end()) {
    return it->second;
  }
  if (auto it = entries_.find({folded, PartOfSpeech::kAny});
      it != entries_.end()) {
    return it->second;
  }
  if (!pos_bearing_) return std::nullopt;

  // Keys sort by term first, so all POS variants of a term are contiguous.
  SentimentScore sum;
  int count = 0;
  for (auto it = entries_.lower_bound({folded, PartOfSpeech::kNoun});
       it != entries_.end() && it->first.first == folded; ++it) {
    sum.positivity += it->second.positivity;
    sum.negativity += it->second.negativity;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return SentimentScore{sum.positivity / count, sum.negativity / count};
}

void UnifiedLexicon::write_tsv(std::ostream& out) const {
  for (const auto& [key, score] : entries_) {
    out << key.first << '\t' << to_string(key.second) << '\t'
        << format_double(score.positivity) << '\t'
        << format_double(score.negativity) << '\n';
  }
}

UnifiedLexicon UnifiedLexicon::read_tsv(std::istream& in, std::string name,
                                        std::string_view source) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty() || text.front() == '#') continue;
    const auto fields = split(text, '\t');
    if (fields.size() != 4) {
      throw ParseError(source_name(source), line_no,
                       "expected 4 tab-separated fields");
    }
    const auto pos = parse_part_of_speech(fields[1]);
    const auto p = parse_double(fields[2]);
    const auto n = parse_double(fields[3]);
    if (!pos) {
      throw ParseError(source_name(source), line_no,
                       "unknown part of speech '" + std::string(fields[1]) +
                           "'");
    }
    if (!p || !n || !in_unit_interval(*p) || !in_unit_interval(*n)) {
      throw ParseError(source_name(source), line_no,
                       "scores must be reals in [0, 1]");
    }
    entries.push_back({std::string(fields[0]), *pos, {*p, *n}});
  }
  try {
    return UnifiedLexicon(std::move(name), std::move(entries));
  } catch (const IngestionError& e) {
    throw ParseError(source_name(source), 0, e.what());
  }
}

UnifiedLexicon UnifiedLexicon::load_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open lexicon " + path);
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) {
    stem = stem.substr(slash + 1);
  }
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) {
    stem = stem.substr(0, dot);
  }
  return read_tsv(in, stem, path);
}

UnifiedLexicon parse_afinn(std::istream& in, std::string_view source) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty()) continue;
    const std::size_t tab = text.rfind('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(source_name(source), line_no,
                       "expected term<TAB>value");
    }
    const auto value = parse_int(text.substr(tab + 1));
    if (!value) {
      throw ParseError(source_name(source), line_no,
                       "value '" + std::string(trim(text.substr(tab + 1))) +
                           "' is not an integer");
    }
    if (*value < -5 || *value > 5) {
      throw ParseError(source_name(source), line_no,
                       "value " + std::to_string(*value) +
                           " outside [-5, 5]");
    }
    const double v = static_cast<double>(*value);
    SentimentScore score;
    if (v > 0) score.positivity = v / 5.0;
    if (v < 0) score.negativity = -v / 5.0;
    entries.push_back({std::string(text.substr(0, tab)), PartOfSpeech::kAny,
                       score});
  }
  try {
    return UnifiedLexicon("afinn", std::move(entries));
  } catch (const IngestionError& e) {
    throw ParseError(source_name(source), 0, e.what());
  }
}

UnifiedLexicon parse_binary_list(std::istream& in, BinaryScheme scheme,
                                 std::string_view source) {
  std::map<std::string, BinaryTags> tags;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> gi_pos_col;
  std::optional<std::size_t> gi_neg_col;
  bool gi_header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty()) continue;

    switch (scheme) {
      case BinaryScheme::kBingLiu: {
        if (text.front() == ';') continue;
        const auto fields = split(text, '\t');
        if (fields.size() != 2) {
          throw ParseError(source_name(source), line_no,
                           "expected term<TAB>positive|negative");
        }
        const std::string label = ascii_lower(trim(fields[1]));
        BinaryTags& t = tags[normalize_term(fields[0])];
        if (label == "positive") {
          t.positive = true;
        } else if (label == "negative") {
          t.negative = true;
        } else {
          throw ParseError(source_name(source), line_no,
                           "unknown polarity '" + label + "'");
        }
        break;
      }
      case BinaryScheme::kGeneralInquirer: {
        const auto fields = split(text, '\t');
        if (!gi_header_seen) {
          gi_header_seen = true;
          for (std::size_t i = 0; i < fields.size(); ++i) {
            const std::string col = ascii_lower(trim(fields[i]));
            if (col == "positiv") gi_pos_col = i;
            if (col == "negativ") gi_neg_col = i;
          }
          if (fields.empty() || ascii_lower(trim(fields[0])) != "entry" ||
              !gi_pos_col || !gi_neg_col) {
            throw ParseError(source_name(source), line_no,
                             "header must contain Entry, Positiv and Negativ");
          }
          continue;
        }
        // Sense-numbered entries (ABOUT#1) collapse onto the bare word.
        std::string_view entry = trim(fields[0]);
        if (auto hash = entry.find('#'); hash != std::string_view::npos) {
          entry = entry.substr(0, hash);
        }
        if (entry.empty()) {
          throw ParseError(source_name(source), line_no, "empty entry");
        }
        const auto cell = [&](std::size_t col) {
          return col < fields.size() && !trim(fields[col]).empty();
        };
        const bool pos = cell(*gi_pos_col);
        const bool neg = cell(*gi_neg_col);
        if (!pos && !neg) continue;
        BinaryTags& t = tags[normalize_term(entry)];
        t.positive |= pos;
        t.negative |= neg;
        break;
      }
      case BinaryScheme::kNrc: {
        const auto fields = split(text, '\t');
        if (fields.size() != 3) {
          throw ParseError(source_name(source), line_no,
                           "expected term<TAB>category<TAB>0|1");
        }
        const auto flag = parse_int(fields[2]);
        if (!flag || (*flag != 0 && *flag != 1)) {
          throw ParseError(source_name(source), line_no,
                           "association flag must be 0 or 1");
        }
        const std::string category = ascii_lower(trim(fields[1]));
        if (*flag == 0) continue;
        if (category != "positive" && category != "negative") continue;
        BinaryTags& t = tags[normalize_term(fields[0])];
        (category == "positive" ? t.positive : t.negative) = true;
        break;
      }
    }
  }

  std::string name;
  switch (scheme) {
    case BinaryScheme::kBingLiu:
      name = "bing_liu";
      break;
    case BinaryScheme::kGeneralInquirer:
      name = "general_inquirer";
      break;
    case BinaryScheme::kNrc:
      name = "nrc";
      break;
  }
  return from_binary_tags(std::move(name), tags);
}

UnifiedLexicon parse_bing_liu_lists(std::istream& positive,
                                    std::istream& negative) {
  std::map<std::string, BinaryTags> tags;
  const auto read = [&tags](std::istream& in, bool is_positive) {
    std::string line;
    while (std::getline(in, line)) {
      const std::string_view text = trim(chomp(line));
      if (text.empty() || text.front() == ';') continue;
      BinaryTags& t = tags[normalize_term(text)];
      (is_positive ? t.positive : t.negative) = true;
    }
  };
  read(positive, true);
  read(negative, false);
  return from_binary_tags("bing_liu", tags);
}

UnifiedLexicon parse_subjectivity_clues(std::istream& in,
                                        std::string_view source) {
  std::map<UnifiedLexicon::Key, SentimentScore> merged;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty() || text.front() == '#') continue;

    std::map<std::string, std::string, std::less<>> kv;
    for (std::string_view field : split_whitespace(text)) {
      const std::size_t eq = field.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError(source_name(source), line_no,
                         "field '" + std::string(field) + "' is not key=value");
      }
      kv[ascii_lower(field.substr(0, eq))] =
          ascii_lower(field.substr(eq + 1));
    }
    const auto word = kv.find("word1");
    const auto polarity = kv.find("priorpolarity");
    if (word == kv.end() || word->second.empty() || polarity == kv.end()) {
      throw ParseError(source_name(source), line_no,
                       "record needs word1 and priorpolarity");
    }

    double strength = 0.5;
    if (auto type = kv.find("type"); type == kv.end()) {
      warn(source_name(source) + ":" + std::to_string(line_no) +
           ": missing strength for '" + word->second + "', treating as weak");
    } else if (type->second == "strongsubj") {
      strength = 1.0;
    } else if (type->second != "weaksubj") {
      throw ParseError(source_name(source), line_no,
                       "unknown clue type '" + type->second + "'");
    }

    SentimentScore score;
    if (polarity->second == "positive") {
      score.positivity = strength;
    } else if (polarity->second == "negative") {
      score.negativity = strength;
    } else if (polarity->second == "both") {
      score = {strength, strength};
    } else if (polarity->second == "weakneg") {
      // Stray annotation in the MPQA release.
      score.negativity = 0.5;
    } else if (polarity->second == "weakpos") {
      score.positivity = 0.5;
    } else if (polarity->second == "neutral") {
      continue;
    } else {
      throw ParseError(source_name(source), line_no,
                       "unknown polarity '" + polarity->second + "'");
    }

    PartOfSpeech pos = PartOfSpeech::kAny;
    if (auto p = kv.find("pos1"); p != kv.end()) pos = clue_pos(p->second);
    const UnifiedLexicon::Key key{normalize_term(word->second), pos};
    auto [it, inserted] = merged.emplace(key, score);
    if (!inserted && !(it->second == score)) {
      it->second.positivity = std::max(it->second.positivity, score.positivity);
      it->second.negativity = std::max(it->second.negativity, score.negativity);
    }
  }

  std::vector<LexiconEntry> entries;
  entries.reserve(merged.size());
  for (const auto& [key, score] : merged) {
    entries.push_back({key.first, key.second, score});
  }
  return UnifiedLexicon("subjectivity_clues", std::move(entries));
}

UnifiedLexicon parse_sentiwordnet(std::istream& in, std::string_view source) {
  std::map<UnifiedLexicon::Key, std::vector<SynsetRecord>> groups;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty() || text.front() == '#') continue;
    const auto fields = split(text, '\t');
    if (fields.size() < 5) {
      throw ParseError(source_name(source), line_no,
                       "expected POS, ID, PosScore, NegScore, SynsetTerms");
    }
    const auto pos = sentiwordnet_pos(trim(fields[0]));
    if (!pos) {
      throw ParseError(source_name(source), line_no,
                       "unknown part of speech '" + std::string(fields[0]) +
                           "'");
    }
    const auto p = parse_double(fields[2]);
    const auto n = parse_double(fields[3]);
    if (!p || !n || !in_unit_interval(*p) || !in_unit_interval(*n)) {
      throw ParseError(source_name(source), line_no,
                       "scores must be reals in [0, 1]");
    }
    if (*p + *n > 1.0 + kSentiWordNetSumSlack) {
      throw ParseError(source_name(source), line_no,
                       "positivity + negativity exceeds 1");
    }
    const auto terms = split_whitespace(fields[4]);
    if (terms.empty()) {
      throw ParseError(source_name(source), line_no, "no synset terms");
    }
    for (std::string_view item : terms) {
      const std::size_t hash = item.rfind('#');
      const auto rank = hash == std::string_view::npos
                            ? std::nullopt
                            : parse_int(item.substr(hash + 1));
      if (!rank || *rank < 1 || hash == 0) {
        throw ParseError(source_name(source), line_no,
                         "malformed synset term '" + std::string(item) + "'");
      }
      std::string term = normalize_term(item.substr(0, hash));
      groups[{term, *pos}].push_back(
          {term, *pos, static_cast<int>(*rank), *p, *n});
    }
  }

  std::vector<LexiconEntry> entries;
  entries.reserve(groups.size());
  for (const auto& [key, records] : groups) {
    entries.push_back({key.first, key.second, merge_synsets(records)});
  }
  return UnifiedLexicon("sentiwordnet", std::move(entries));
}

std::string_view default_lexicon_name(LexiconFormat format) {
  switch (format) {
    case LexiconFormat::kSentiWordNet:
      return "sentiwordnet";
    case LexiconFormat::kAfinn:
      return "afinn";
    case LexiconFormat::kBingLiu:
      return "bing_liu";
    case LexiconFormat::kGeneralInquirer:
      return "general_inquirer";
    case LexiconFormat::kSubjectivityClues:
      return "subjectivity_clues";
    case LexiconFormat::kNrc:
      return "nrc";
  }
  return "";
}

std::optional<LexiconFormat> parse_lexicon_format(std::string_view name) {
  for (auto f : {LexiconFormat::kSentiWordNet, LexiconFormat::kAfinn,
                 LexiconFormat::kBingLiu, LexiconFormat::kGeneralInquirer,
                 LexiconFormat::kSubjectivityClues, LexiconFormat::kNrc}) {
    if (name == default_lexicon_name(f)) return f;
  }
  return std::nullopt;
}

UnifiedLexicon parse_lexicon(std::istream& in, LexiconFormat format,
                             std::string_view source) {
  switch (format) {
    case LexiconFormat::kSentiWordNet:
      return parse_sentiwordnet(in, source);
    case LexiconFormat::kAfinn:
      return parse_afinn(in, source);
    case LexiconFormat::kBingLiu:
      return parse_binary_list(in, BinaryScheme::kBingLiu, source);
    case LexiconFormat::kGeneralInquirer:
      return parse_binary_list(in, BinaryScheme::kGeneralInquirer, source);
    case LexiconFormat::kSubjectivityClues:
      return parse_subjectivity_clues(in, source);
    case LexiconFormat::kNrc:
      return parse_binary_list(in, BinaryScheme::kNrc, source);
  }
  throw UsageError("unknown lexicon format");
}

std::set<std::string> common_vocabulary(
    std::span<const UnifiedLexicon> lexicons) {
  if (lexicons.empty()) return {};
  std::set<std::string> common = lexicons.front().vocabulary();
  for (const UnifiedLexicon& lex : lexicons.subspan(1)) {
    const std::set<std::string> vocab = lex.vocabulary();
    std::set<std::string> next;
    std::set_intersection(common.begin(), common.end(), vocab.begin(),
                          vocab.end(), std::inserter(next, next.begin()));
    common = std::move(next);
  }
  return common;
}

}  // namespace sentox
