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

#ifndef SENTOX_PREPROCESS_H_
#define SENTOX_PREPROCESS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentox/lexicon.h"

namespace sentox {

struct Token {
  std::string surface;  // case-folded; idioms are underscore-joined
  PartOfSpeech pos = PartOfSpeech::kAny;
  bool negated = false;
  bool is_idiom = false;
  // Byte offsets into the source text, half-open.
  std::size_t begin = 0;
  std::size_t end = 0;

  // Word tokens start with an alphanumeric or non-ASCII byte. Everything
  // else is punctuation.
  bool is_word() const;
  // Contains one of . ! ?
  bool ends_sentence() const;
};

struct ProcessedMessage {
  std::string source;
  std::vector<Token> tokens;
};

class NegationCueList {
 public:
  // Throws UsageError if empty or if a cue contains whitespace.
  explicit NegationCueList(std::set<std::string, std::less<>> cues);

  // One cue per line; '#' starts a comment.
  static NegationCueList load(std::istream& in);
  static NegationCueList load_file(const std::string& path);
  // The list bundled in data/negation_cues.txt.
  static const NegationCueList& defaults();

  bool contains(std::string_view surface) const {
    return cues_.find(surface) != cues_.end();
  }
  std::size_t size() const { return cues_.size(); }
  const std::set<std::string, std::less<>>& cues() const { return cues_; }

 private:
  std::set<std::string, std::less<>> cues_;
};

// Word-punct tokenization. Runs of alphanumerics (and non-ASCII bytes)
// form words, runs of other non-space characters form punctuation tokens.
// An apostrophe between two word characters stays inside the word so that
// contractions like "don't" survive as single tokens.
std::vector<Token> tokenize(std::string_view text);

// Greedy longest match, left to right, over consecutive word tokens.
std::vector<Token> merge_idioms(std::vector<Token> tokens,
                                const IdiomSet& idioms);

// Marks up to `window` word tokens after each cue. Punctuation does not
// use up the window; sentence-final punctuation ends the scope. Cue tokens
// are never marked themselves.
std::vector<Token> detect_negation(std::vector<Token> tokens,
                                   const NegationCueList& cues,
                                   int window = 5);

// Penn Treebank tag prefix -> part of speech, loaded from a TSV of
// prefix<TAB>pos lines. The longest matching prefix wins.
class PosTagMap {
 public:
  explicit PosTagMap(std::map<std::string, PartOfSpeech> prefixes);

  static PosTagMap load(std::istream& in);
  static const PosTagMap& defaults();

  PartOfSpeech map(std::string_view tag) const;

 private:
  std::map<std::string, PartOfSpeech> prefixes_;
};

PartOfSpeech map_pos(std::string_view tag);

struct PreprocessOptions {
  const IdiomSet* idioms = nullptr;
  const NegationCueList* cues = nullptr;  // defaults() when null
  int window = 5;
};

// tokenize -> merge_idioms -> detect_negation.
ProcessedMessage preprocess(std::string_view text,
                            const PreprocessOptions& options = {});

// Pre-tagged input, one "token<TAB>tag" pair per element. Tokens are joined
// with single spaces to form the source text.
struct TaggedWord {
  std::string word;
  std::string tag;
};
ProcessedMessage preprocess_tagged(std::span<const TaggedWord> words,
                                   const PreprocessOptions& options = {});
std::vector<TaggedWord> read_tagged(std::istream& in);

// ---------------------------------------------------------------------------
// Negation scope evaluation against gold annotations.

struct GoldScope {
  std::vector<std::string> tokens;
  std::set<std::size_t> cue_indices;
  std::set<std::size_t> scope_indices;
};

// JSONL, one {"tokens": [...], "cue_indices": [...], "scope_indices": [...]}
// object per line.
std::vector<GoldScope> read_gold_scopes(std::istream& in,
                                        std::string_view source = {});

struct ScopeMetrics {
  double accuracy = 0.0;
  double recall = 0.0;
  double precision = 0.0;
  double exact_match = 0.0;
  double scope_std_dev = 0.0;  // words
  double ms_per_sentence = 0.0;
  std::size_t sentences = 0;  // sentences with at least one gold cue
  // Set when no token was predicted in scope; precision is then reported 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

// Token-level metrics over sentences whose gold annotation has a cue.
// Throws UsageError when sentence or token counts disagree.
ScopeMetrics evaluate_scope(std::span<const ProcessedMessage> predicted,
                            std::span<const GoldScope> gold);

// Runs the fixed-window scoper over the gold tokens, times it, and scores
// the result.
ScopeMetrics run_scope_evaluation(std::span<const GoldScope> gold,
                                  const NegationCueList& cues, int window);

}  // namespace sentox

#endif  // SENTOX_PREPROCESS_H_
