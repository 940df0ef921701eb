// Copyright 2026 The mcflow Authors.
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

#include "graph/graph6.h"

#include <cstdint>
#include <sstream>
#include <utility>

#include "common/error.h"

namespace mcflow {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void ParseFail(size_t offset, const std::string& what) {
  Fail(ErrorCode::kParse,
       "graph6: " + what + " at byte offset " + std::to_string(offset));
}

int SixBits(std::string_view line, size_t offset) {
  if (offset >= line.size()) ParseFail(offset, "truncated input");
  const int c = static_cast<unsigned char>(line[offset]);
  if (c < 63 || c > 126) ParseFail(offset, "character out of range");
  return c - 63;
}

void AppendSize(uint64_t n, std::string* out) {
  if (n <= 62) {
    out->push_back(static_cast<char>(n + 63));
    return;
  }
  int groups = 3;
  out->push_back('~');
  if (n > 258047) {
    out->push_back('~');
    groups = 6;
  }
  for (int g = groups - 1; g >= 0; --g) {
    out->push_back(static_cast<char>(((n >> (6 * g)) & 63) + 63));
  }
}

}  // namespace

MultiGraph ParseGraph6(std::string_view line) {
  size_t offset = 0;
  if (line.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  size_t end = line.size();
  while (end > offset && (line[end - 1] == '\n' || line[end - 1] == '\r' ||
                          line[end - 1] == ' ' || line[end - 1] == '\t')) {
    --end;
  }
  line = line.substr(0, end);
  if (offset >= line.size()) ParseFail(offset, "empty graph6 line");

  uint64_t n = 0;
  const int first = SixBits(line, offset);
  if (first < 63) {
    n = first;
    offset += 1;
  } else {
    int groups = 3;
    offset += 1;
    if (offset < line.size() && line[offset] == '~') {
      groups = 6;
      offset += 1;
    }
    for (int g = 0; g < groups; ++g) n = (n << 6) | SixBits(line, offset + g);
    offset += groups;
  }
  if (n > (1u << 20)) ParseFail(0, "vertex count too large");
  const uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const size_t bytes = (bits + 5) / 6;
  if (line.size() - offset < bytes) ParseFail(line.size(), "truncated bit-vector");
  if (line.size() - offset > bytes) ParseFail(offset + bytes, "trailing bytes");

  std::vector<std::pair<int, int>> edges;
  uint64_t k = 0;
  for (uint64_t j = 1; j < n; ++j) {
    for (uint64_t i = 0; i < j; ++i, ++k) {
      const int group = SixBits(line, offset + k / 6);
      if ((group >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  // Padding bits must be zero.
  if (bytes > 0 && bits % 6 != 0) {
    const int last = SixBits(line, offset + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      ParseFail(offset + bytes - 1, "nonzero padding bits");
    }
  }
  return MultiGraph(static_cast<int>(n), edges);
}

std::string WriteGraph6(const MultiGraph& graph) {
  Require(graph.IsSimple(), "graph6 encodes simple graphs only");
  const uint64_t n = graph.vertex_count();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const Edge& e : graph.edges()) adjacent[e.tail][e.head] = true;
  std::string out;
  AppendSize(n, &out);
  int value = 0, used = 0;
  for (uint64_t j = 1; j < n; ++j) {
    for (uint64_t i = 0; i < j; ++i) {
      value = (value << 1) | (adjacent[i][j] ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((value << (6 - used)) + 63));
  return out;
}

std::vector<MultiGraph> ParseGraph6File(std::string_view text) {
  std::vector<MultiGraph> graphs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs.push_back(ParseGraph6(line));
    } catch (const Error& e) {
      Fail(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace mcflow
