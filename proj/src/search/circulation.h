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

#ifndef MCFLOW_SEARCH_CIRCULATION_H_
#define MCFLOW_SEARCH_CIRCULATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "graph/multigraph.h"

namespace mcflow {

// Feasibility of an integer circulation with per-edge bounds
// lo[e] <= f[e] <= hi[e] along the canonical orientation (Hoffman's
// condition, decided with Dinic's max-flow after shifting by the lower
// bounds). Integral bounds give integral witnesses. Loops carry no
// conservation constraint; they get the bound of larger magnitude.
// Reuses its buffers, so one solver per thread.
class CirculationSolver {
 public:
  explicit CirculationSolver(const MultiGraph& graph);

  bool Solve(std::span<const int64_t> lo, std::span<const int64_t> hi,
             std::vector<int64_t>* flow);

  int64_t calls() const { return calls_; }

 private:
  struct Arc {
    int to;
    int64_t cap;
  };

  void AddArc(int from, int to, int64_t cap);
  bool Bfs();
  int64_t Dfs(int v, int64_t limit);

  const MultiGraph& graph_;
  int source_, sink_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<size_t> next_;
  std::vector<int> edge_arc_;
  int64_t calls_ = 0;
};

}  // namespace mcflow

#endif  // MCFLOW_SEARCH_CIRCULATION_H_
