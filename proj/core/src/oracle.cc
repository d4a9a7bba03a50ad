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

#include "obsplace/oracle.h"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "obsplace/errors.h"

namespace obsplace::oracle {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 MulMod(u64 a, u64 b, u64 q) {
  return static_cast<u64>(static_cast<u128>(a) * b % q);
}
u64 AddMod(u64 a, u64 b, u64 q) {
  const u64 s = a + b;
  return (s >= q || s < a) ? s - q : s;
}
u64 SubMod(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }
u64 PowMod(u64 base, u64 exp, u64 q) {
  u64 result = 1 % q;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1) result = MulMod(result, base, q);
    base = MulMod(base, base, q);
  }
  return result;
}
u64 InvMod(u64 a, u64 q) { return PowMod(a, q - 2, q); }

// Row-echelon basis that absorbs rows one at a time.
class EchelonBasis {
 public:
  EchelonBasis(int num_cols, u64 q) : num_cols_(num_cols), q_(q) {}

  // Returns whether `row` was independent of the basis.
  bool Insert(std::vector<u64> row) {
    for (size_t b = 0; b < rows_.size(); ++b) {
      const int pc = pivots_[b];
      if (row[pc] == 0) continue;
      const u64 factor = row[pc];  // basis rows are normalised to pivot 1
      for (int j = pc; j < num_cols_; ++j) {
        row[j] = SubMod(row[j], MulMod(factor, rows_[b][j], q_), q_);
      }
    }
    int pc = 0;
    while (pc < num_cols_ && row[pc] == 0) ++pc;
    if (pc == num_cols_) return false;
    const u64 inv = InvMod(row[pc], q_);
    for (int j = pc; j < num_cols_; ++j) row[j] = MulMod(row[j], inv, q_);
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int num_cols_;
  u64 q_;
  std::vector<std::vector<u64>> rows_;
  std::vector<int> pivots_;
};

std::vector<u64> TimesA(const NumericRealization& r, const std::vector<u64>& v) {
  const int d = r.num_states;
  std::vector<u64> out(d, 0);
  for (int i = 0; i < d; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      const u64 a = r.a(i, j);
      if (a != 0) out[j] = AddMod(out[j], MulMod(v[i], a, r.modulus), r.modulus);
    }
  }
  return out;
}

std::vector<u64> CRow(const NumericRealization& r, int row) {
  const int d = r.num_states;
  auto first = r.c_values.begin() + static_cast<std::ptrdiff_t>(row) * d;
  return std::vector<u64>(first, first + d);
}

// Boolean d x d relation, row-major.
using Relation = std::vector<char>;

// walk[v * d + u] after m compositions: a walk of length m from v to u.
Relation StepRelation(const StructuredSystem& system) {
  const int d = system.num_states();
  Relation r(static_cast<size_t>(d) * d, 0);
  for (const Entry& e : system.a().entries()) r[e.col * d + e.row] = 1;
  return r;
}

Relation Compose(const Relation& lhs, const Relation& rhs, int d) {
  Relation out(static_cast<size_t>(d) * d, 0);
  for (int v = 0; v < d; ++v) {
    for (int w = 0; w < d; ++w) {
      if (!lhs[v * d + w]) continue;
      for (int u = 0; u < d; ++u) {
        if (rhs[w * d + u]) out[v * d + u] = 1;
      }
    }
  }
  return out;
}

// table[o][k - 1] = Y_o(k).
using SetTable = std::vector<std::vector<std::vector<int>>>;

SetTable AllReferenceSets(const StructuredSystem& system, int horizon) {
  const int d = system.num_states();
  std::vector<std::vector<int>> sources(system.num_outputs());
  for (const Entry& e : system.c().entries()) sources[e.row].push_back(e.col);
  SetTable table(system.num_outputs());
  const Relation step = StepRelation(system);
  Relation walk(static_cast<size_t>(d) * d, 0);  // length 0: identity
  for (int v = 0; v < d; ++v) walk[v * d + v] = 1;
  for (int k = 1; k <= horizon; ++k) {
    for (int o = 0; o < system.num_outputs(); ++o) {
      std::vector<int> set;
      for (int v = 0; v < d; ++v) {
        for (int u : sources[o]) {
          if (walk[v * d + u]) {
            set.push_back(v);
            break;
          }
        }
      }
      table[o].push_back(std::move(set));
    }
    walk = Compose(walk, step, d);
  }
  return table;
}

int XiFromTable(const SetTable& table, std::span<const int> outputs,
                int horizon, int d) {
  std::vector<std::pair<int, int>> edges;
  int right = 0;
  for (int o : outputs) {
    for (int k = 0; k < horizon; ++k, ++right) {
      for (int v : table[o][k]) edges.emplace_back(v, right);
    }
  }
  return KuhnMatchingSize(BipartiteGraph(d, right, std::move(edges)));
}

// Calls visit(subset) for every k-subset of `pool` in lexicographic order
// until it returns true. Returns whether some call returned true.
template <typename Visit>
bool ForEachSubset(const std::vector<int>& pool, int k, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void CheckOutputCap(int p, int cap) {
  if (p > cap) throw CapExceededError("output enumeration refused", p, cap);
}

}  // namespace

NumericRealization RandomRealization(const StructuredSystem& system,
                                     std::uint64_t seed,
                                     std::uint64_t modulus) {
  if (modulus < 3) throw std::invalid_argument("modulus must be an odd prime");
  NumericRealization r;
  r.num_states = system.num_states();
  r.num_outputs = system.num_outputs();
  r.modulus = modulus;
  r.seed = seed;
  const int d = r.num_states;
  r.a_values.assign(static_cast<size_t>(d) * d, 0);
  r.c_values.assign(static_cast<size_t>(r.num_outputs) * d, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> draw(1, modulus - 1);
  for (const Entry& e : system.a().entries()) {
    r.a_values[static_cast<size_t>(e.row) * d + e.col] = draw(rng);
  }
  for (const Entry& e : system.c().entries()) {
    r.c_values[static_cast<size_t>(e.row) * d + e.col] = draw(rng);
  }
  return r;
}

ObservabilityMatrixView BuildObservabilityMatrix(
    const NumericRealization& realization, int horizon) {
  ObservabilityMatrixView view;
  view.horizon = horizon;
  view.num_states = realization.num_states;
  std::vector<std::vector<u64>> block;
  for (int i = 0; i < realization.num_outputs; ++i) {
    block.push_back(CRow(realization, i));
  }
  for (int b = 0; b < horizon; ++b) {
    if (b > 0) {
      for (auto& row : block) row = TimesA(realization, row);
    }
    view.rows.insert(view.rows.end(), block.begin(), block.end());
  }
  return view;
}

int FieldRank(std::vector<std::vector<std::uint64_t>> rows, int num_cols,
              std::uint64_t modulus) {
  EchelonBasis basis(num_cols, modulus);
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != num_cols) {
      throw std::invalid_argument("row length does not match column count");
    }
    for (auto& x : row) x %= modulus;
    basis.Insert(std::move(row));
    if (basis.rank() == num_cols) break;
  }
  return basis.rank();
}

std::vector<int> ObservabilityRankProfile(
    const NumericRealization& realization, int horizon) {
  const int d = realization.num_states;
  EchelonBasis basis(d, realization.modulus);
  std::vector<std::vector<u64>> block;
  for (int i = 0; i < realization.num_outputs; ++i) {
    block.push_back(CRow(realization, i));
  }
  std::vector<int> profile;
  for (int k = 1; k <= horizon; ++k) {
    if (k > 1) {
      for (auto& row : block) row = TimesA(realization, row);
    }
    for (const auto& row : block) {
      if (basis.rank() == d) break;
      basis.Insert(row);
    }
    profile.push_back(basis.rank());
  }
  return profile;
}

std::optional<int> NumericObservabilityIndex(
    const NumericRealization& realization) {
  const int d = realization.num_states;
  const std::vector<int> profile = ObservabilityRankProfile(realization, d);
  for (int k = 1; k <= d; ++k) {
    if (profile[k - 1] == d) return k;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> ReferenceOutputSets(
    const StructuredSystem& system, int output, int horizon) {
  if (output < 0 || output >= system.num_outputs()) {
    throw std::out_of_range("output out of range");
  }
  if (horizon < 1 || horizon > system.num_states()) {
    throw std::out_of_range("horizon out of range");
  }
  return AllReferenceSets(system, horizon)[output];
}

int KuhnMatchingSize(const BipartiteGraph& graph) {
  std::vector<int> mate_of_right(graph.num_right(), -1);
  std::vector<char> seen;
  auto try_left = [&](auto&& self, int u) -> bool {
    for (int r : graph.Neighbors(u)) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (mate_of_right[r] < 0 || self(self, mate_of_right[r])) {
        mate_of_right[r] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int u = 0; u < graph.num_left(); ++u) {
    seen.assign(graph.num_right(), 0);
    if (try_left(try_left, u)) ++size;
  }
  return size;
}

int ReferenceXi(const StructuredSystem& system, std::span<const int> outputs,
                int horizon) {
  if (outputs.empty()) return 0;
  if (horizon < 1 || horizon > system.num_states()) {
    throw std::out_of_range("horizon out of range");
  }
  return XiFromTable(AllReferenceSets(system, horizon), outputs, horizon,
                     system.num_states());
}

bool ReferenceContractionFree(const StructuredSystem& system,
                              std::span<const int> outputs) {
  const int d = system.num_states();
  std::vector<std::pair<int, int>> edges;
  for (const Entry& e : system.a().entries()) edges.emplace_back(e.col, e.row);
  for (int k = 0; k < static_cast<int>(outputs.size()); ++k) {
    for (const Entry& e : system.c().entries()) {
      if (e.row == outputs[k]) edges.emplace_back(e.col, d + k);
    }
  }
  const int right = d + static_cast<int>(outputs.size());
  return KuhnMatchingSize(BipartiteGraph(d, right, std::move(edges))) == d;
}

bool ReferenceIndexBoundedBy(const StructuredSystem& system,
                             std::span<const int> outputs, int horizon) {
  if (outputs.empty()) return system.num_states() == 0;
  return ReferenceXi(system, outputs, horizon) == system.num_states() &&
         ReferenceContractionFree(system, outputs);
}

int BruteForceMaximumMatchingSize(const BipartiteGraph& graph) {
  // Enumerate the subsets of the smaller side that some prefix of the larger
  // side can cover exactly.
  const bool right_small = graph.num_right() <= graph.num_left();
  const int small = right_small ? graph.num_right() : graph.num_left();
  const int large = right_small ? graph.num_left() : graph.num_right();
  if (small > kMatchingCap) {
    throw CapExceededError("exhaustive matching refused", small, kMatchingCap);
  }
  std::vector<std::vector<int>> adj(large);
  for (const auto& [l, r] : graph.edges()) {
    if (right_small) {
      adj[l].push_back(r);
    } else {
      adj[r].push_back(l);
    }
  }
  const size_t masks = size_t{1} << small;
  std::vector<char> reachable(masks, 0);
  reachable[0] = 1;
  for (int v = 0; v < large; ++v) {
    // Descending mask order keeps each large-side vertex used at most once.
    for (size_t mask = masks; mask-- > 0;) {
      if (!reachable[mask]) continue;
      for (int s : adj[v]) {
        const size_t bit = size_t{1} << s;
        if (!(mask & bit)) reachable[mask | bit] = 1;
      }
    }
  }
  int best = 0;
  for (size_t mask = 0; mask < masks; ++mask) {
    if (reachable[mask]) best = std::max(best, std::popcount(mask));
  }
  return best;
}

bool HasAugmentingPath(const BipartiteGraph& graph, const Matching& matching) {
  std::vector<char> left_seen(graph.num_left(), 0);
  std::vector<char> right_seen(graph.num_right(), 0);
  std::vector<int> queue;
  for (int u = 0; u < graph.num_left(); ++u) {
    if (matching.MateOfLeft(u) == kUnmatched) {
      left_seen[u] = 1;
      queue.push_back(u);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int r : graph.Neighbors(u)) {
      if (matching.MateOfLeft(u) == r || right_seen[r]) continue;
      right_seen[r] = 1;
      const int w = matching.MateOfRight(r);
      if (w == kUnmatched) return true;
      if (!left_seen[w]) {
        left_seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

bool ExhaustiveContractionCheck(const SystemDigraph& digraph, int cap) {
  const int d = digraph.num_states();
  if (d > cap || d > 30) {
    throw CapExceededError("exhaustive contraction check refused", d, cap);
  }
  const int width = d + digraph.num_outputs();
  const int words = (width + 63) / 64;
  std::vector<std::vector<u64>> out(d, std::vector<u64>(words, 0));
  for (const auto& [from, to] : digraph.state_edges()) {
    out[from][to >> 6] |= u64{1} << (to & 63);
  }
  for (const auto& [state, output] : digraph.output_edges()) {
    const int bit = d + output;
    out[state][bit >> 6] |= u64{1} << (bit & 63);
  }
  std::vector<u64> reach(words);
  for (u64 mask = 1; mask < (u64{1} << d); ++mask) {
    std::fill(reach.begin(), reach.end(), 0);
    for (int v = 0; v < d; ++v) {
      if (!((mask >> v) & 1)) continue;
      for (int w = 0; w < words; ++w) reach[w] |= out[v][w];
    }
    int size = 0;
    for (u64 w : reach) size += std::popcount(w);
    if (size < std::popcount(mask)) return false;
  }
  return true;
}

std::optional<std::vector<int>> BruteForceMinSensors(
    const StructuredSystem& system, int horizon,
    std::span<const int> forbidden, int cap) {
  const int d = system.num_states();
  const int p = system.num_outputs();
  CheckOutputCap(p, cap);
  if (horizon < 1 || horizon > d) {
    throw std::out_of_range("horizon out of range");
  }
  std::vector<char> banned(p, 0);
  for (int f : forbidden) {
    if (f < 0 || f >= p) throw std::out_of_range("forbidden output out of range");
    banned[f] = 1;
  }
  std::vector<int> pool;
  for (int o = 0; o < p; ++o) {
    if (!banned[o]) pool.push_back(o);
  }
  const SetTable table = AllReferenceSets(system, horizon);
  std::optional<std::vector<int>> found;
  for (int k = 1; k <= static_cast<int>(pool.size()) && !found; ++k) {
    ForEachSubset(pool, k, [&](const std::vector<int>& subset) {
      if (XiFromTable(table, subset, horizon, d) == d &&
          ReferenceContractionFree(system, subset)) {
        found = subset;
        return true;
      }
      return false;
    });
  }
  return found;
}

CoverageOptimum BruteForceMaxCoverage(const StructuredSystem& system,
                                      int budget, int cap) {
  const int d = system.num_states();
  const int p = system.num_outputs();
  if (budget < 1 || budget > p) throw std::out_of_range("budget out of range");
  CheckOutputCap(p, cap);
  if (d == 0) return {};
  std::vector<int> pool(p);
  for (int o = 0; o < p; ++o) pool[o] = o;
  const SetTable table = AllReferenceSets(system, d);
  CoverageOptimum best{{}, -1};
  for (int k = 1; k <= budget && best.xi < d; ++k) {
    ForEachSubset(pool, k, [&](const std::vector<int>& subset) {
      const int xi = XiFromTable(table, subset, d, d);
      if (xi > best.xi) best = {subset, xi};
      return best.xi == d;
    });
  }
  return best;
}

}  // namespace obsplace::oracle
