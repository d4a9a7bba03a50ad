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

#include "obsplace/sparsity.h"

#include <algorithm>
#include <string>
#include <utility>

#include "obsplace/errors.h"

namespace obsplace {

namespace {
std::string Describe(const Entry& e) {
  return "(" + std::to_string(e.row + 1) + ", " + std::to_string(e.col + 1) +
         ")";
}
}  // namespace

SparsityPattern::SparsityPattern(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) {
    throw ValidationError("pattern dimensions must be non-negative");
  }
  for (const Entry& e : entries_) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw ValidationError("entry " + Describe(e) + " outside " +
                            std::to_string(rows) + "x" + std::to_string(cols) +
                            " pattern");
    }
  }
  std::sort(entries_.begin(), entries_.end());
  auto dup = std::adjacent_find(entries_.begin(), entries_.end());
  if (dup != entries_.end()) {
    throw ValidationError("duplicate entry " + Describe(*dup));
  }
}

SparsityPattern SparsityPattern::Identity(int n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) entries.push_back({i, i});
  return SparsityPattern(n, n, std::move(entries));
}

SparsityPattern SparsityPattern::Empty(int rows, int cols) {
  return SparsityPattern(rows, cols, {});
}

bool SparsityPattern::Contains(int row, int col) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{row, col});
}

SparsityPattern SparsityPattern::SelectRows(std::span<const int> rows) const {
  std::vector<Entry> entries;
  for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
    const int r = rows[k];
    if (r < 0 || r >= rows_) {
      throw ValidationError("row " + std::to_string(r + 1) + " out of range");
    }
    auto lo = std::lower_bound(entries_.begin(), entries_.end(), Entry{r, 0});
    for (auto it = lo; it != entries_.end() && it->row == r; ++it) {
      entries.push_back({k, it->col});
    }
  }
  return SparsityPattern(static_cast<int>(rows.size()), cols_,
                         std::move(entries));
}

StructuredSystem::StructuredSystem(SparsityPattern a, SparsityPattern c)
    : a_(std::move(a)), c_(std::move(c)) {
  if (a_.rows() != a_.cols()) {
    throw ValidationError("A must be square, got " + std::to_string(a_.rows()) +
                          "x" + std::to_string(a_.cols()));
  }
  if (c_.cols() != a_.cols()) {
    throw ValidationError("C has " + std::to_string(c_.cols()) +
                          " columns but A has " + std::to_string(a_.cols()));
  }
  if (c_.rows() < 1) throw ValidationError("C must have at least one row");
}

StructuredSystem StructuredSystem::SelectOutputs(
    std::span<const int> outputs) const {
  return StructuredSystem(a_, c_.SelectRows(outputs));
}

}  // namespace obsplace
