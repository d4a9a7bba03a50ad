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

#ifndef OBSPLACE_SYSTEM_IO_H_
#define OBSPLACE_SYSTEM_IO_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "obsplace/sparsity.h"

namespace obsplace {

// Text formats. All indices on disk are 1-based.
//
// Pattern block:
//   rows cols nnz
//   row col        (nnz lines)
// A system file holds two blocks, introduced by header lines `[A]` and `[C]`.
// Lines whose first non-blank character is `#` are comments; blank lines are
// ignored. Duplicate entries are rejected.

SparsityPattern ParsePattern(std::istream& in, const std::string& source);
StructuredSystem ParseSystem(std::istream& in, const std::string& source);
StructuredSystem ReadSystemFile(const std::string& path);

void WritePattern(std::ostream& out, const SparsityPattern& pattern);
void WriteSystem(std::ostream& out, const StructuredSystem& system);

// One 1-based output index per line. Returns 0-based indices in file order;
// duplicates and indices outside [1, num_outputs] are rejected.
std::vector<int> ParseOutputList(std::istream& in, const std::string& source,
                                 int num_outputs);
std::vector<int> ReadOutputListFile(const std::string& path, int num_outputs);

}  // namespace obsplace

#endif  // OBSPLACE_SYSTEM_IO_H_
