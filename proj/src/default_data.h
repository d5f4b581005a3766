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

#ifndef SENTOX_SRC_DEFAULT_DATA_H_
#define SENTOX_SRC_DEFAULT_DATA_H_

#include <string_view>

// Contents of the bundled data files, compiled into the library so the
// defaults work without a data directory at run time.
namespace sentox::detail {

std::string_view default_negation_cues();
std::string_view default_pos_tags();
std::string_view default_substitutions();

}  // namespace sentox::detail

#endif  // SENTOX_SRC_DEFAULT_DATA_H_
