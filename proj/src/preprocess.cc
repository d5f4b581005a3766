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

#include "sentox/preprocess.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "default_data.h"
#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {
namespace {

bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

bool Token::is_word() const {
  return !surface.empty() &&
         is_word_byte(static_cast<unsigned char>(surface.front()));
}

bool Token::ends_sentence() const {
  return !is_word() && surface.find_first_of(".!?") != std::string::npos;
}

NegationCueList::NegationCueList(std::set<std::string, std::less<>> cues)
    : cues_(std::move(cues)) {
  if (cues_.empty()) throw UsageError("negation cue list is empty");
  for (const std::string& cue : cues_) {
    if (cue.empty() || cue.find_first_of(" \t\r\n") != std::string::npos) {
      throw UsageError("negation cue '" + cue + "' contains whitespace");
    }
  }
}

NegationCueList NegationCueList::load(std::istream& in) {
  std::set<std::string, std::less<>> cues;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    cues.insert(normalize_term(text));
  }
  return NegationCueList(std::move(cues));
}

NegationCueList NegationCueList::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open cue list " + path);
  return load(in);
}

const NegationCueList& NegationCueList::defaults() {
  static const NegationCueList list = [] {
    std::istringstream in{std::string(detail::default_negation_cues())};
    return load(in);
  }();
  return list;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  while (i < n) {
    if (is_space_byte(byte(i))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_word_byte(byte(i))) {
      while (i < n) {
        if (is_word_byte(byte(i))) {
          ++i;
        } else if (text[i] == '\'' && i + 1 < n && is_word_byte(byte(i + 1))) {
          i += 2;
        } else {
          break;
        }
      }
    } else {
      while (i < n && !is_space_byte(byte(i)) && !is_word_byte(byte(i))) ++i;
    }
    Token t;
    t.surface = ascii_lower(text.substr(start, i - start));
    t.begin = start;
    t.end = i;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<Token> merge_idioms(std::vector<Token> tokens,
                                const IdiomSet& idioms) {
  if (idioms.empty()) return tokens;
  std::size_t max_words = 0;
  for (const std::string& idiom : idioms) {
    max_words = std::max<std::size_t>(
        max_words, std::count(idiom.begin(), idiom.end(), '_') + 1);
  }

  std::vector<Token> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best_end = 0;  // exclusive; 0 means no match
    if (tokens[i].is_word()) {
      std::string joined = tokens[i].surface;
      for (std::size_t j = i + 1;
           j < tokens.size() && j - i < max_words && tokens[j].is_word();
           ++j) {
        joined += '_';
        joined += tokens[j].surface;
        if (idioms.find(joined) != idioms.end()) best_end = j + 1;
      }
    }
    if (best_end == 0) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    Token merged;
    merged.is_idiom = true;
    merged.begin = tokens[i].begin;
    merged.end = tokens[best_end - 1].end;
    merged.pos = tokens[i].pos;
    merged.surface = tokens[i].surface;
    for (std::size_t k = i + 1; k < best_end; ++k) {
      merged.surface += '_';
      merged.surface += tokens[k].surface;
    }
    out.push_back(std::move(merged));
    i = best_end;
  }
  return out;
}

std::vector<Token> detect_negation(std::vector<Token> tokens,
                                   const NegationCueList& cues, int window) {
  if (window < 1) throw UsageError("negation window must be >= 1");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!cues.contains(tokens[i].surface)) continue;
    int remaining = window;
    for (std::size_t j = i + 1; j < tokens.size() && remaining > 0; ++j) {
      Token& t = tokens[j];
      if (t.ends_sentence()) break;
      if (!t.is_word()) continue;
      if (!cues.contains(t.surface)) t.negated = true;
      --remaining;
    }
  }
  return tokens;
}

PosTagMap::PosTagMap(std::map<std::string, PartOfSpeech> prefixes)
    : prefixes_(std::move(prefixes)) {}

PosTagMap PosTagMap::load(std::istream& in) {
  std::map<std::string, PartOfSpeech> prefixes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split(text, '\t');
    const auto pos = fields.size() == 2 ? parse_part_of_speech(trim(fields[1]))
                                        : std::nullopt;
    if (!pos) throw ParseError("pos tag map", line_no, "expected prefix<TAB>pos");
    prefixes[std::string(trim(fields[0]))] = *pos;
  }
  return PosTagMap(std::move(prefixes));
}

const PosTagMap& PosTagMap::defaults() {
  static const PosTagMap map = [] {
    std::istringstream in{std::string(detail::default_pos_tags())};
    return load(in);
  }();
  return map;
}

PartOfSpeech PosTagMap::map(std::string_view tag) const {
  const std::string upper = [&] {
    std::string s(trim(tag));
    for (char& c : s) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return s;
  }();
  PartOfSpeech best = PartOfSpeech::kAny;
  std::size_t best_len = 0;
  for (const auto& [prefix, pos] : prefixes_) {
    if (prefix.size() > best_len && upper.starts_with(prefix)) {
      best = pos;
      best_len = prefix.size();
    }
  }
  return best;
}

PartOfSpeech map_pos(std::string_view tag) {
  return PosTagMap::defaults().map(tag);
}

namespace {

ProcessedMessage finish(ProcessedMessage msg, std::vector<Token> tokens,
                        const PreprocessOptions& options) {
  if (options.idioms != nullptr) {
    tokens = merge_idioms(std::move(tokens), *options.idioms);
  }
  const NegationCueList& cues =
      options.cues != nullptr ? *options.cues : NegationCueList::defaults();
  msg.tokens = detect_negation(std::move(tokens), cues, options.window);
  return msg;
}

}  // namespace

ProcessedMessage preprocess(std::string_view text,
                            const PreprocessOptions& options) {
  ProcessedMessage msg;
  msg.source = std::string(text);
  return finish(std::move(msg), tokenize(text), options);
}

ProcessedMessage preprocess_tagged(std::span<const TaggedWord> words,
                                   const PreprocessOptions& options) {
  ProcessedMessage msg;
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (const TaggedWord& w : words) {
    if (w.word.empty()) continue;
    if (!msg.source.empty()) msg.source += ' ';
    Token t;
    t.surface = ascii_lower(w.word);
    t.pos = map_pos(w.tag);
    t.begin = msg.source.size();
    msg.source += w.word;
    t.end = msg.source.size();
    tokens.push_back(std::move(t));
  }
  return finish(std::move(msg), std::move(tokens), options);
}

std::vector<TaggedWord> read_tagged(std::istream& in) {
  std::vector<TaggedWord> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view text = chomp(line);
    if (trim(text).empty()) continue;
    const std::size_t tab = text.find('\t');
    if (tab == std::string_view::npos) {
      out.push_back({std::string(trim(text)), ""});
    } else {
      out.push_back({std::string(trim(text.substr(0, tab))),
                     std::string(trim(text.substr(tab + 1)))});
    }
  }
  return out;
}

std::vector<GoldScope> read_gold_scopes(std::istream& in,
                                        std::string_view source) {
  const std::string name = source.empty() ? "<gold>" : std::string(source);
  std::vector<GoldScope> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      GoldScope g;
      g.tokens = j.at("tokens").get<std::vector<std::string>>();
      for (std::size_t idx : j.at("cue_indices").get<std::vector<std::size_t>>()) {
        g.cue_indices.insert(idx);
      }
      for (std::size_t idx :
           j.at("scope_indices").get<std::vector<std::size_t>>()) {
        g.scope_indices.insert(idx);
      }
      for (const auto& set : {g.cue_indices, g.scope_indices}) {
        if (!set.empty() && *set.rbegin() >= g.tokens.size()) {
          throw ParseError(name, line_no, "index past end of tokens");
        }
      }
      out.push_back(std::move(g));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(name, line_no, e.what());
    }
  }
  return out;
}

ScopeMetrics evaluate_scope(std::span<const ProcessedMessage> predicted,
                            std::span<const GoldScope> gold) {
  if (predicted.size() != gold.size()) {
    throw UsageError("evaluate_scope: " + std::to_string(predicted.size()) +
                     " predicted sentences vs " + std::to_string(gold.size()) +
                     " gold sentences");
  }
  std::size_t tp = 0;
  std::size_t pred_total = 0;
  std::size_t gold_total = 0;
  std::size_t tokens_total = 0;
  std::size_t tokens_agree = 0;
  std::size_t exact = 0;
  std::vector<double> size_diffs;

  ScopeMetrics m;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const GoldScope& g = gold[s];
    const ProcessedMessage& p = predicted[s];
    if (p.tokens.size() != g.tokens.size()) {
      throw UsageError("evaluate_scope: sentence " + std::to_string(s) +
                       " has " + std::to_string(p.tokens.size()) +
                       " predicted tokens vs " +
                       std::to_string(g.tokens.size()) + " gold tokens");
    }
    if (g.cue_indices.empty()) continue;
    ++m.sentences;

    std::size_t pred_size = 0;
    bool same = true;
    for (std::size_t i = 0; i < g.tokens.size(); ++i) {
      const bool in_pred = p.tokens[i].negated;
      const bool in_gold = g.scope_indices.count(i) > 0;
      pred_size += in_pred;
      tp += in_pred && in_gold;
      tokens_agree += in_pred == in_gold;
      same &= in_pred == in_gold;
    }
    tokens_total += g.tokens.size();
    pred_total += pred_size;
    gold_total += g.scope_indices.size();
    exact += same;
    size_diffs.push_back(static_cast<double>(pred_size) -
                         static_cast<double>(g.scope_indices.size()));
  }

  if (m.sentences == 0) return m;

  m.accuracy = tokens_total == 0 ? 1.0
                                 : static_cast<double>(tokens_agree) /
                                       static_cast<double>(tokens_total);
  m.exact_match =
      static_cast<double>(exact) / static_cast<double>(m.sentences);
  if (pred_total == 0) {
    m.precision_undefined = true;
  } else {
    m.precision = static_cast<double>(tp) / static_cast<double>(pred_total);
  }
  if (gold_total == 0) {
    m.recall_undefined = true;
  } else {
    m.recall = static_cast<double>(tp) / static_cast<double>(gold_total);
  }

  double mean = 0.0;
  for (double d : size_diffs) mean += d;
  mean /= static_cast<double>(size_diffs.size());
  double ss = 0.0;
  for (double d : size_diffs) ss += (d - mean) * (d - mean);
  m.scope_std_dev = std::sqrt(ss / static_cast<double>(size_diffs.size()));
  return m;
}

ScopeMetrics run_scope_evaluation(std::span<const GoldScope> gold,
                                  const NegationCueList& cues, int window) {
  std::vector<ProcessedMessage> predicted;
  predicted.reserve(gold.size());
  const auto start = std::chrono::steady_clock::now();
  for (const GoldScope& g : gold) {
    ProcessedMessage msg;
    std::vector<Token> tokens;
    tokens.reserve(g.tokens.size());
    for (const std::string& word : g.tokens) {
      if (!msg.source.empty()) msg.source += ' ';
      Token t;
      t.surface = ascii_lower(word);
      t.begin = msg.source.size();
      msg.source += word;
      t.end = msg.source.size();
      tokens.push_back(std::move(t));
    }
    msg.tokens = detect_negation(std::move(tokens), cues, window);
    predicted.push_back(std::move(msg));
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  ScopeMetrics m = evaluate_scope(predicted, gold);
  if (!gold.empty()) {
    m.ms_per_sentence =
        std::chrono::duration<double, std::milli>(elapsed).count() /
        static_cast<double>(gold.size());
  }
  return m;
}

}  // namespace sentox
