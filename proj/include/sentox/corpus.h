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

#ifndef SENTOX_CORPUS_H_
#define SENTOX_CORPUS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentox {

enum class SentimentLabel { kClearNeg, kSlightNeg, kNeutral, kSlightPos, kClearPos };

std::string_view to_string(SentimentLabel label);
std::optional<SentimentLabel> parse_sentiment_label(std::string_view name);
bool is_negative(SentimentLabel label);
bool is_positive(SentimentLabel label);

struct LabeledMessage {
  std::string id;
  std::string text;
  std::optional<SentimentLabel> sentiment_label;
  std::optional<double> toxicity;  // in [0, 1]
  std::optional<bool> toxic_flag;
};

// JSONL with fields id, text, sentiment_label, toxicity, toxic_flag. Every
// record needs at least one label field. Throws ParseError with the line.
std::vector<LabeledMessage> read_corpus(std::istream& in,
                                        std::string_view source = {});
std::vector<LabeledMessage> load_corpus(const std::string& path);
void write_corpus(std::ostream& out, const std::vector<LabeledMessage>& corpus);
std::string to_json_line(const LabeledMessage& msg);

}  // namespace sentox

#endif  // SENTOX_CORPUS_H_
