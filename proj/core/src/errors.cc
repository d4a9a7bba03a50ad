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

#include "obsplace/errors.h"

#include <string>

namespace obsplace {

namespace {
std::string Located(const std::string& source, int line,
                    const std::string& what) {
  if (line <= 0) return source + ": " + what;
  return source + ":" + std::to_string(line) + ": " + what;
}
}  // namespace

ParseError::ParseError(const std::string& source, int line,
                       const std::string& what)
    : std::runtime_error(Located(source, line, what)),
      source_(source),
      line_(line) {}

CapExceededError::CapExceededError(const std::string& what, int size, int cap)
    : std::runtime_error(what + ": size " + std::to_string(size) +
                         " exceeds cap " + std::to_string(cap)),
      size_(size),
      cap_(cap) {}

}  // namespace obsplace
