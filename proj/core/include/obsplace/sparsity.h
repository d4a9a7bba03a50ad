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

#ifndef OBSPLACE_SPARSITY_H_
#define OBSPLACE_SPARSITY_H_

#include <compare>
#include <span>
#include <vector>

namespace obsplace {

// Position of a structurally nonzero entry. Indices are 0-based.
struct Entry {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Zero/star structure of a matrix. Entries are kept sorted row-major and are
// duplicate-free; the constructor rejects duplicates and out-of-range
// positions with ValidationError.
class SparsityPattern {
 public:
  SparsityPattern() = default;
  SparsityPattern(int rows, int cols, std::vector<Entry> entries);

  static SparsityPattern Identity(int n);
  static SparsityPattern Empty(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  bool Contains(int row, int col) const;

  // Keeps the listed rows, in the listed order.
  SparsityPattern SelectRows(std::span<const int> rows) const;

  friend bool operator==(const SparsityPattern&,
                         const SparsityPattern&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

// The pattern pair (A, C): A is d x d, C is p x d with p >= 1.
class StructuredSystem {
 public:
  StructuredSystem(SparsityPattern a, SparsityPattern c);

  const SparsityPattern& a() const { return a_; }
  const SparsityPattern& c() const { return c_; }
  int num_states() const { return a_.rows(); }
  int num_outputs() const { return c_.rows(); }

  // The system seen through the output rows in `outputs` only. Output k of
  // the result is output outputs[k] of this system.
  StructuredSystem SelectOutputs(std::span<const int> outputs) const;

  friend bool operator==(const StructuredSystem&,
                         const StructuredSystem&) = default;

 private:
  SparsityPattern a_;
  SparsityPattern c_;
};

}  // namespace obsplace

#endif  // OBSPLACE_SPARSITY_H_
