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

#include "graph/multigraph.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "common/error.h"

namespace mcflow {

MultiGraph::MultiGraph(int vertex_count,
                       const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
  Require(vertex_count >= 0, "negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      Fail(ErrorCode::kContract, "edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) +
                                     ") has an endpoint out of range");
    }
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  degree_.assign(vertex_count, 0);
  std::vector<int> count(vertex_count, 0);
  for (const Edge& e : edges_) {
    degree_[e.tail] += 1;
    degree_[e.head] += 1;
    count[e.tail] += 1;
    if (!e.IsLoop()) count[e.head] += 1;
  }
  offsets_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + count[v];
  incidence_.assign(offsets_[vertex_count], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    incidence_[fill[e.tail]++] = id;
    if (!e.IsLoop()) incidence_[fill[e.head]++] = id;
  }
}

bool MultiGraph::IsCubic() const {
  return std::all_of(degree_.begin(), degree_.end(),
                     [](int d) { return d == 3; });
}

bool MultiGraph::IsLoopless() const {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const Edge& e) { return e.IsLoop(); });
}

bool MultiGraph::HasParallelEdges() const {
  std::vector<std::pair<int, int>> sorted;
  for (const Edge& e : edges_) sorted.emplace_back(e.tail, e.head);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::string MultiGraph::CanonicalText() const {
  std::vector<std::pair<int, int>> sorted;
  for (const Edge& e : edges_) sorted.emplace_back(e.tail, e.head);
  std::sort(sorted.begin(), sorted.end());
  std::string text = std::to_string(vertex_count_);
  for (const auto& [u, v] : sorted) {
    text += ';';
    text += std::to_string(u);
    text += ' ';
    text += std::to_string(v);
  }
  return text;
}

std::string MultiGraph::Key() const {
  uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : CanonicalText()) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

MultiGraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  bool have_header = false;
  long n = 0, m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long a, b;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) {
      Fail(ErrorCode::kParse, "edge list line " + std::to_string(line_number) +
                                  ": expected two integers");
    }
    if (!have_header) {
      if (a < 0 || b < 0) {
        Fail(ErrorCode::kParse, "edge list header must be non-negative");
      }
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      Fail(ErrorCode::kParse, "edge list line " + std::to_string(line_number) +
                                  ": vertex out of range");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!have_header) Fail(ErrorCode::kParse, "edge list is missing its header");
  if (static_cast<long>(edges.size()) != m) {
    Fail(ErrorCode::kParse, "edge list header announces " + std::to_string(m) +
                                " edges, found " +
                                std::to_string(edges.size()));
  }
  return MultiGraph(static_cast<int>(n), edges);
}

std::string WriteEdgeList(const MultiGraph& graph) {
  std::string out = std::to_string(graph.vertex_count()) + " " +
                    std::to_string(graph.edge_count()) + "\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
  }
  return out;
}

}  // namespace mcflow
