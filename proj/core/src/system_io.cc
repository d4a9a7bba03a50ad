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

#include "obsplace/system_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "obsplace/errors.h"

namespace obsplace {

namespace {

// Yields non-blank, non-comment lines split into tokens.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  bool Next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().starts_with('#')) continue;
      return true;
    }
    return false;
  }

  int line() const { return line_no_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(source_, line_no_, what);
  }

  int ParseInt(const std::string& token, const char* what) const {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Fail(std::string("expected integer ") + what + ", got '" + token + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

SparsityPattern ReadPatternBlock(LineReader& reader,
                                 const std::vector<std::string>& header) {
  if (header.size() != 3) reader.Fail("expected header 'rows cols nnz'");
  const int rows = reader.ParseInt(header[0], "rows");
  const int cols = reader.ParseInt(header[1], "cols");
  const int nnz = reader.ParseInt(header[2], "nnz");
  if (rows < 0 || cols < 0 || nnz < 0) {
    reader.Fail("dimensions must be non-negative");
  }
  std::vector<Entry> entries;
  entries.reserve(nnz);
  std::set<std::pair<int, int>> seen;
  std::vector<std::string> tokens;
  for (int k = 0; k < nnz; ++k) {
    if (!reader.Next(tokens)) {
      reader.Fail("expected " + std::to_string(nnz) + " entries, found " +
                  std::to_string(k));
    }
    if (tokens.size() != 2) reader.Fail("expected 'row col'");
    const int r = reader.ParseInt(tokens[0], "row");
    const int c = reader.ParseInt(tokens[1], "col");
    if (r < 1 || r > rows || c < 1 || c > cols) {
      reader.Fail("entry (" + tokens[0] + ", " + tokens[1] + ") outside " +
                  std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!seen.emplace(r, c).second) {
      reader.Fail("duplicate entry (" + tokens[0] + ", " + tokens[1] + ")");
    }
    entries.push_back({r - 1, c - 1});
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

SparsityPattern ParsePattern(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::string> tokens;
  if (!reader.Next(tokens)) reader.Fail("empty pattern");
  SparsityPattern pattern = ReadPatternBlock(reader, tokens);
  if (reader.Next(tokens)) reader.Fail("trailing content after pattern");
  return pattern;
}

StructuredSystem ParseSystem(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::optional<SparsityPattern> a;
  std::optional<SparsityPattern> c;
  std::vector<std::string> tokens;
  while (reader.Next(tokens)) {
    if (tokens.size() != 1 || (tokens[0] != "[A]" && tokens[0] != "[C]")) {
      reader.Fail("expected block header [A] or [C]");
    }
    const bool is_a = tokens[0] == "[A]";
    if ((is_a && a) || (!is_a && c)) reader.Fail("repeated " + tokens[0]);
    if (!reader.Next(tokens)) reader.Fail("missing pattern header");
    SparsityPattern block = ReadPatternBlock(reader, tokens);
    (is_a ? a : c) = std::move(block);
  }
  if (!a) reader.Fail("missing [A] block");
  if (!c) reader.Fail("missing [C] block");
  try {
    return StructuredSystem(std::move(*a), std::move(*c));
  } catch (const ValidationError& e) {
    throw ParseError(source, 0, e.what());
  }
}

StructuredSystem ReadSystemFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSystem(in, path);
}

void WritePattern(std::ostream& out, const SparsityPattern& pattern) {
  out << pattern.rows() << ' ' << pattern.cols() << ' ' << pattern.nnz()
      << '\n';
  for (const Entry& e : pattern.entries()) {
    out << e.row + 1 << ' ' << e.col + 1 << '\n';
  }
}

void WriteSystem(std::ostream& out, const StructuredSystem& system) {
  out << "[A]\n";
  WritePattern(out, system.a());
  out << "[C]\n";
  WritePattern(out, system.c());
}

std::vector<int> ParseOutputList(std::istream& in, const std::string& source,
                                 int num_outputs) {
  LineReader reader(in, source);
  std::vector<int> outputs;
  std::set<int> seen;
  std::vector<std::string> tokens;
  while (reader.Next(tokens)) {
    if (tokens.size() != 1) reader.Fail("expected one output index per line");
    const int id = reader.ParseInt(tokens[0], "output index");
    if (id < 1 || id > num_outputs) {
      reader.Fail("output " + tokens[0] + " outside [1, " +
                  std::to_string(num_outputs) + "]");
    }
    if (!seen.insert(id).second) reader.Fail("duplicate output " + tokens[0]);
    outputs.push_back(id - 1);
  }
  return outputs;
}

std::vector<int> ReadOutputListFile(const std::string& path, int num_outputs) {
  std::ifstream in = OpenOrThrow(path);
  return ParseOutputList(in, path, num_outputs);
}

}  // namespace obsplace
