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

#ifndef SENTOX_SUBVERSION_H_
#define SENTOX_SUBVERSION_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sentox/corpus.h"

namespace sentox {

// Toxic keyword -> harmless-looking replacement.
class SubstitutionMap {
 public:
  SubstitutionMap() = default;
  // Keys and values are case-folded. Throws UsageError when a key is empty
  // or not a single word, maps to itself, or when a value is also a key
  // (which would make perturb non-idempotent).
  explicit SubstitutionMap(std::map<std::string, std::string> pairs);

  // toxic_term<TAB>replacement lines; '#' starts a comment.
  static SubstitutionMap load(std::istream& in, std::string_view source = {});
  static SubstitutionMap load_file(const std::string& path);
  // The list bundled in data/substitutions.tsv.
  static const SubstitutionMap& defaults();

  std::optional<std::string_view> find(std::string_view word) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::map<std::string, std::string, std::less<>>& pairs() const {
    return pairs_;
  }

 private:
  std::map<std::string, std::string, std::less<>> pairs_;
};

struct Perturbation {
  std::string text;
  bool altered = false;
};

// Replaces whole words (case-insensitive). A capitalized original gets a
// capitalized replacement; everything else is copied byte for byte.
Perturbation perturb(std::string_view text, const SubstitutionMap& map);

// Fraction of toxic messages that perturb() alters. Throws UsageError when
// the corpus has no toxic messages.
double coverage(std::span<const LabeledMessage> corpus,
                const SubstitutionMap& map);

}  // namespace sentox

#endif  // SENTOX_SUBVERSION_H_
