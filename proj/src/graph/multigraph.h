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

#ifndef MCFLOW_GRAPH_MULTIGRAPH_H_
#define MCFLOW_GRAPH_MULTIGRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcflow {

// An edge under the canonical reference orientation: tail <= head.
struct Edge {
  int tail = 0;
  int head = 0;

  bool IsLoop() const { return tail == head; }
  int Other(int v) const { return v == tail ? head : tail; }
  bool operator==(const Edge&) const = default;
};

// Undirected multigraph with stable vertex/edge ids. Edge identity is the
// position in the edge list. Parallel edges and loops are allowed. Every
// non-loop edge is oriented from the smaller to the larger vertex index.
// Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v in increasing order. A loop is listed once.
  std::span<const int> incident(int v) const {
    return {incidence_.data() + offsets_[v],
            incidence_.data() + offsets_[v + 1]};
  }
  // Loops count twice.
  int degree(int v) const { return degree_[v]; }

  bool IsCubic() const;
  bool IsLoopless() const;
  bool HasParallelEdges() const;
  bool IsSimple() const { return IsLoopless() && !HasParallelEdges(); }

  // Vertex count followed by the lexicographically sorted edge list.
  // No isomorphism canonization.
  std::string CanonicalText() const;
  // 16 hex digits of FNV-1a-64 over CanonicalText().
  std::string Key() const;

  bool operator==(const MultiGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<int> incidence_;
  std::vector<int> degree_;
};

// Plain edge-list format: first line "n m", then m lines "u v", 0-based.
// Blank lines and lines starting with '#' are ignored.
MultiGraph ParseEdgeList(std::string_view text);
std::string WriteEdgeList(const MultiGraph& graph);

}  // namespace mcflow

#endif  // MCFLOW_GRAPH_MULTIGRAPH_H_
