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

#include "sentox/subversion.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "default_data.h"
#include "sentox/error.h"
#include "sentox/strings.h"

namespace sentox {
namespace {

bool is_word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_single_word(std::string_view s) {
  for (unsigned char c : s) {
    if (!is_word_byte(c) && c != '\'') return false;
  }
  return !s.empty();
}

}  // namespace

SubstitutionMap::SubstitutionMap(std::map<std::string, std::string> pairs) {
  for (auto& [key, value] : pairs) {
    std::string k = ascii_lower(trim(key));
    std::string v = ascii_lower(trim(value));
    if (!is_single_word(k)) {
      throw UsageError("substitution key '" + key + "' is not a single word");
    }
    if (v.empty()) {
      throw UsageError("substitution for '" + k + "' is empty");
    }
    if (k == v) {
      throw UsageError("substitution key '" + k + "' maps to itself");
    }
    if (!pairs_.emplace(k, v).second) {
      throw UsageError("duplicate substitution key '" + k + "'");
    }
  }
  for (const auto& [key, value] : pairs_) {
    if (pairs_.count(value) > 0) {
      throw UsageError("replacement '" + value + "' for '" + key +
                       "' is itself a substitution key");
    }
  }
}

SubstitutionMap SubstitutionMap::load(std::istream& in,
                                      std::string_view source) {
  const std::string name =
      source.empty() ? "<substitutions>" : std::string(source);
  std::map<std::string, std::string> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = chomp(line);
    if (trim(text).empty() || trim(text).front() == '#') continue;
    const auto fields = split(text, '\t');
    if (fields.size() != 2) {
      throw ParseError(name, line_no, "expected toxic_term<TAB>replacement");
    }
    const std::string key = ascii_lower(trim(fields[0]));
    if (!pairs.emplace(key, std::string(trim(fields[1]))).second) {
      throw ParseError(name, line_no, "duplicate key '" + key + "'");
    }
  }
  try {
    return SubstitutionMap(std::move(pairs));
  } catch (const UsageError& e) {
    throw ParseError(name, 0, e.what());
  }
}

SubstitutionMap SubstitutionMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open substitution map " + path);
  return load(in, path);
}

const SubstitutionMap& SubstitutionMap::defaults() {
  static const SubstitutionMap map = [] {
    std::istringstream in{std::string(detail::default_substitutions())};
    return load(in, "default substitutions");
  }();
  return map;
}

std::optional<std::string_view> SubstitutionMap::find(
    std::string_view word) const {
  const auto it = pairs_.find(ascii_lower(word));
  if (it == pairs_.end()) return std::nullopt;
  return std::string_view(it->second);
}

Perturbation perturb(std::string_view text, const SubstitutionMap& map) {
  Perturbation out;
  out.text.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  while (i < n) {
    if (!is_word_byte(byte(i))) {
      out.text.push_back(text[i++]);
      continue;
    }
    const std::size_t start = i;
    while (i < n && (is_word_byte(byte(i)) ||
                     (text[i] == '\'' && i + 1 < n && is_word_byte(byte(i + 1))))) {
      ++i;
    }
    const std::string_view word = text.substr(start, i - start);
    const auto replacement = map.find(word);
    if (!replacement) {
      out.text.append(word);
      continue;
    }
    std::string r(*replacement);
    if (word.front() >= 'A' && word.front() <= 'Z' && !r.empty() &&
        r.front() >= 'a' && r.front() <= 'z') {
      r.front() = static_cast<char>(r.front() - 'a' + 'A');
    }
    out.text += r;
    out.altered = true;
  }
  return out;
}

double coverage(std::span<const LabeledMessage> corpus,
                const SubstitutionMap& map) {
  std::size_t toxic = 0;
  std::size_t altered = 0;
  for (const LabeledMessage& m : corpus) {
    if (!m.toxic_flag.value_or(false)) continue;
    ++toxic;
    if (perturb(m.text, map).altered) ++altered;
  }
  if (toxic == 0) throw UsageError("coverage: corpus has no toxic messages");
  return static_cast<double>(altered) / static_cast<double>(toxic);
}

}  // namespace sentox
