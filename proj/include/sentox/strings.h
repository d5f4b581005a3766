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

#ifndef SENTOX_STRINGS_H_
#define SENTOX_STRINGS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentox {

std::string ascii_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
// Splits on runs of spaces and tabs, dropping empty fields.
std::vector<std::string_view> split_whitespace(std::string_view s);

std::optional<long long> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);
// Shortest representation that round-trips.
std::string format_double(double value);
// Fixed notation with the given number of decimals.
std::string format_fixed(double value, int decimals);

// Strips a trailing '\r' left by CRLF files.
std::string_view chomp(std::string_view line);

std::string read_file(const std::string& path);

}  // namespace sentox

#endif  // SENTOX_STRINGS_H_
