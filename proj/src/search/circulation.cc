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

#include "search/circulation.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace mcflow {

CirculationSolver::CirculationSolver(const MultiGraph& graph)
    : graph_(graph),
      source_(graph.vertex_count()),
      sink_(graph.vertex_count() + 1),
      out_(graph.vertex_count() + 2),
      level_(graph.vertex_count() + 2),
      next_(graph.vertex_count() + 2),
      edge_arc_(graph.edge_count(), -1) {}

void CirculationSolver::AddArc(int from, int to, int64_t cap) {
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0});
}

bool CirculationSolver::Bfs() {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<int> queue = {source_};
  level_[source_] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int a : out_[v]) {
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[v] + 1;
        queue.push_back(arcs_[a].to);
      }
    }
  }
  return level_[sink_] >= 0;
}

int64_t CirculationSolver::Dfs(int v, int64_t limit) {
  if (v == sink_) return limit;
  for (size_t& i = next_[v]; i < out_[v].size(); ++i) {
    const int a = out_[v][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
    const int64_t pushed = Dfs(arc.to, std::min(limit, arc.cap));
    if (pushed > 0) {
      arc.cap -= pushed;
      arcs_[a ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

bool CirculationSolver::Solve(std::span<const int64_t> lo,
                              std::span<const int64_t> hi,
                              std::vector<int64_t>* flow) {
  ++calls_;
  const int n = graph_.vertex_count();
  const int m = graph_.edge_count();
  arcs_.clear();
  for (auto& list : out_) list.clear();
  std::vector<int64_t> excess(n, 0);
  for (int id = 0; id < m; ++id) {
    if (lo[id] > hi[id]) return false;
    const Edge& e = graph_.edge(id);
    if (e.IsLoop()) continue;
    // f = lo + g with 0 <= g <= hi - lo.
    excess[e.head] += lo[id];
    excess[e.tail] -= lo[id];
    edge_arc_[id] = static_cast<int>(arcs_.size());
    AddArc(e.tail, e.head, hi[id] - lo[id]);
  }
  int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      AddArc(source_, v, excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      AddArc(v, sink_, -excess[v]);
    }
  }
  int64_t total = 0;
  while (total < demand && Bfs()) {
    std::fill(next_.begin(), next_.end(), 0);
    while (int64_t pushed =
               Dfs(source_, std::numeric_limits<int64_t>::max())) {
      total += pushed;
    }
  }
  if (total < demand) return false;
  if (flow != nullptr) {
    flow->assign(m, 0);
    for (int id = 0; id < m; ++id) {
      if (graph_.edge(id).IsLoop()) {
        (*flow)[id] = std::llabs(hi[id]) >= std::llabs(lo[id]) ? hi[id] : lo[id];
        continue;
      }
      // Residual capacity of the reverse arc is the flow pushed.
      (*flow)[id] = lo[id] + arcs_[edge_arc_[id] + 1].cap;
    }
  }
  return true;
}

}  // namespace mcflow
