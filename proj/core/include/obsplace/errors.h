// Copyright 2026 The obsplace Authors
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

#ifndef OBSPLACE_ERRORS_H_
#define OBSPLACE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace obsplace {

// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Well-formed input that violates a structural invariant (duplicate entries,
// dangling references, mismatched dimensions).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run past its configured size cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, int size, int cap);

  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

}  // namespace obsplace

#endif  // OBSPLACE_ERRORS_H_
