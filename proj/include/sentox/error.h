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

#ifndef SENTOX_ERROR_H_
#define SENTOX_ERROR_H_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sentox {

// Caller violated a precondition (bad arguments, degenerate input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. Line numbers are 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Input parsed but is semantically inconsistent (e.g. duplicate synset rank).
class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Statistic is undefined for the given sample (zero variance and the like).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using WarningHandler = std::function<void(std::string_view)>;

// Installs a sink for non-fatal diagnostics and returns the previous one.
// The default writes to stderr.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace sentox

#endif  // SENTOX_ERROR_H_
