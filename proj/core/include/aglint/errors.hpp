// Copyright 2026 The aglint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGLINT_ERRORS_HPP_
#define AGLINT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace aglint {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Span or region outside the document bounds.
struct RangeError : Error {
  using Error::Error;
};

/// Malformed argument (empty annotation type, wrong POS class, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Analyser invoked out of order (e.g. tagging before tokenization).
struct StateError : Error {
  using Error::Error;
};

/// File could not be read.
struct IoError : Error {
  using Error::Error;
};

/// Requested operation has no defined result (e.g. encoding an
/// Other-class tag).
struct UnsupportedError : Error {
  using Error::Error;
};

/// Pipeline construction failed; wraps the underlying diagnostic.
struct ConfigError : Error {
  using Error::Error;
};

/// Parse failure in a lexicon, vertical file or grammar. Carries the
/// 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  ParseError(const std::string& source, int line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace aglint

#endif  // AGLINT_ERRORS_HPP_
