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

#include "sentox/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::kClearNeg:
      return "clear_negative";
    case SentimentLabel::kSlightNeg:
      return "slight_negative";
    case SentimentLabel::kNeutral:
      return "neutral";
    case SentimentLabel::kSlightPos:
      return "slight_positive";
    case SentimentLabel::kClearPos:
      return "clear_positive";
  }
  return "";
}

std::optional<SentimentLabel> parse_sentiment_label(std::string_view name) {
  for (auto l : {SentimentLabel::kClearNeg, SentimentLabel::kSlightNeg,
                 SentimentLabel::kNeutral, SentimentLabel::kSlightPos,
                 SentimentLabel::kClearPos}) {
    if (name == to_string(l)) return l;
  }
  return std::nullopt;
}

bool is_negative(SentimentLabel label) {
  return label == SentimentLabel::kClearNeg ||
         label == SentimentLabel::kSlightNeg;
}

bool is_positive(SentimentLabel label) {
  return label == SentimentLabel::kClearPos ||
         label == SentimentLabel::kSlightPos;
}

std::vector<LabeledMessage> read_corpus(std::istream& in,
                                        std::string_view source) {
  const std::string name = source.empty() ? "<corpus>" : std::string(source);
  std::vector<LabeledMessage> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    LabeledMessage m;
    try {
      const auto j = nlohmann::json::parse(line);
      m.id = j.at("id").get<std::string>();
      m.text = j.at("text").get<std::string>();
      if (auto it = j.find("sentiment_label"); it != j.end() && !it->is_null()) {
        m.sentiment_label = parse_sentiment_label(it->get<std::string>());
        if (!m.sentiment_label) {
          throw ParseError(name, line_no,
                           "unknown sentiment_label '" +
                               it->get<std::string>() + "'");
        }
      }
      if (auto it = j.find("toxicity"); it != j.end() && !it->is_null()) {
        m.toxicity = it->get<double>();
        if (!(*m.toxicity >= 0.0 && *m.toxicity <= 1.0)) {
          throw ParseError(name, line_no, "toxicity outside [0, 1]");
        }
      }
      if (auto it = j.find("toxic_flag"); it != j.end() && !it->is_null()) {
        m.toxic_flag = it->get<bool>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(name, line_no, e.what());
    }
    if (!m.sentiment_label && !m.toxicity && !m.toxic_flag) {
      throw ParseError(name, line_no, "message '" + m.id + "' has no label");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<LabeledMessage> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open corpus " + path);
  return read_corpus(in, path);
}

std::string to_json_line(const LabeledMessage& msg) {
  nlohmann::ordered_json j;
  j["id"] = msg.id;
  j["text"] = msg.text;
  if (msg.sentiment_label) {
    j["sentiment_label"] = std::string(to_string(*msg.sentiment_label));
  }
  if (msg.toxicity) j["toxicity"] = *msg.toxicity;
  if (msg.toxic_flag) j["toxic_flag"] = *msg.toxic_flag;
  return j.dump();
}

void write_corpus(std::ostream& out,
                  const std::vector<LabeledMessage>& corpus) {
  for (const LabeledMessage& m : corpus) out << to_json_line(m) << '\n';
}

}  // namespace sentox
