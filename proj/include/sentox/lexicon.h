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

#ifndef SENTOX_LEXICON_H_
#define SENTOX_LEXICON_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sentox {

// Underscore-joined multiword terms.
using IdiomSet = std::set<std::string, std::less<>>;

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb, kAny };

std::string_view to_string(PartOfSpeech pos);
// Accepts the names produced by to_string(). Returns nullopt otherwise.
std::optional<PartOfSpeech> parse_part_of_speech(std::string_view name);

// Positivity and negativity, each in [0, 1]. Objectivity is not tracked.
struct SentimentScore {
  double positivity = 0.0;
  double negativity = 0.0;

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

struct LexiconEntry {
  std::string term;  // case-folded; idioms are underscore-joined
  PartOfSpeech pos = PartOfSpeech::kAny;
  SentimentScore score;
};

// One word sense of a SentiWordNet term. Only used during ingestion.
struct SynsetRecord {
  std::string term;
  PartOfSpeech pos = PartOfSpeech::kAny;
  int rank = 1;
  double positivity = 0.0;
  double negativity = 0.0;
};

// Collapses all senses of one (term, pos) into a single score, weighting
// each sense by the reciprocal of its rank.
SentimentScore merge_synsets(std::span<const SynsetRecord> records);

// Lowercases ASCII, trims, and joins internal whitespace runs with '_'.
std::string normalize_term(std::string_view term);

// Immutable (term, pos) -> score map for a single source lexicon.
class UnifiedLexicon {
 public:
  using Key = std::pair<std::string, PartOfSpeech>;

  UnifiedLexicon() = default;
  // Throws IngestionError on duplicate keys, out-of-range scores or empty
  // terms. Terms are normalized.
  UnifiedLexicon(std::string name, std::vector<LexiconEntry> entries);

  const std::string& name() const { return name_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Key, SentimentScore>& entries() const { return entries_; }
  const IdiomSet& idioms() const { return idioms_; }
  // Distinct terms regardless of part of speech.
  std::set<std::string> vocabulary() const;
  // True when at least one entry carries a specific part of speech.
  bool pos_bearing() const { return pos_bearing_; }

  // Exact (term, pos) first, then (term, Any), then for POS-bearing
  // lexicons the unweighted mean over the term's POS entries.
  std::optional<SentimentScore> lookup(std::string_view term,
                                       PartOfSpeech pos) const;

  // Unified TSV: term<TAB>pos<TAB>positivity<TAB>negativity.
  void write_tsv(std::ostream& out) const;
  static UnifiedLexicon read_tsv(std::istream& in, std::string name,
                                 std::string_view source = {});
  static UnifiedLexicon load_tsv(const std::string& path);

 private:
  std::string name_;
  std::map<Key, SentimentScore> entries_;
  IdiomSet idioms_;
  bool pos_bearing_ = false;
};

// term<TAB>integer in [-5, 5]. Positive values map to (v/5, 0), negative
// ones to (0, -v/5).
UnifiedLexicon parse_afinn(std::istream& in, std::string_view source = {});

enum class BinaryScheme {
  kBingLiu,          // term<TAB>positive|negative; ';' starts a comment
  kGeneralInquirer,  // tab-separated with Entry/Positiv/Negativ header
  kNrc,              // term<TAB>category<TAB>0|1 association triples
};

// Positive terms become (1, 0), negative ones (0, 1). A term tagged both
// ways keeps both dimensions and triggers a warning. Untagged terms are
// dropped.
UnifiedLexicon parse_binary_list(std::istream& in, BinaryScheme scheme,
                                 std::string_view source = {});

// The Bing Liu distribution ships as two plain word lists.
UnifiedLexicon parse_bing_liu_lists(std::istream& positive,
                                    std::istream& negative);

// MPQA key=value records (type=strongsubj word1=... priorpolarity=...).
// Strong clues score 1, weak ones 0.5.
UnifiedLexicon parse_subjectivity_clues(std::istream& in,
                                        std::string_view source = {});

// SentiWordNet 3.0 table: POS, ID, PosScore, NegScore, SynsetTerms[, Gloss].
// SynsetTerms holds space-separated term#rank items.
UnifiedLexicon parse_sentiwordnet(std::istream& in,
                                  std::string_view source = {});

enum class LexiconFormat {
  kSentiWordNet,
  kAfinn,
  kBingLiu,
  kGeneralInquirer,
  kSubjectivityClues,
  kNrc,
};

std::string_view default_lexicon_name(LexiconFormat format);
std::optional<LexiconFormat> parse_lexicon_format(std::string_view name);
UnifiedLexicon parse_lexicon(std::istream& in, LexiconFormat format,
                             std::string_view source = {});

// Terms present in every lexicon.
std::set<std::string> common_vocabulary(
    std::span<const UnifiedLexicon> lexicons);

}  // namespace sentox

#endif  // SENTOX_LEXICON_H_
