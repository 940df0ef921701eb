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

#include "graph/structure.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "common/error.h"

namespace mcflow {
namespace {

// Iterative DFS low-link over the whole graph. Skips the tree edge by id,
// so parallel edges and loops behave correctly.
struct LowLink {
  std::vector<int> order, low, parent_edge;
  std::vector<int> bridges;
  std::vector<bool> articulation;
};

LowLink ComputeLowLink(const MultiGraph& graph) {
  const int n = graph.vertex_count();
  LowLink ll;
  ll.order.assign(n, -1);
  ll.low.assign(n, 0);
  ll.parent_edge.assign(n, -1);
  ll.articulation.assign(n, false);
  int counter = 0;
  struct Frame {
    int vertex;
    size_t next;
    int children;
  };
  for (int root = 0; root < n; ++root) {
    if (ll.order[root] != -1) continue;
    std::vector<Frame> stack = {{root, 0, 0}};
    ll.order[root] = ll.low[root] = counter++;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const int v = frame.vertex;
      auto incident = graph.incident(v);
      if (frame.next < incident.size()) {
        const int id = incident[frame.next++];
        const Edge& e = graph.edge(id);
        if (e.IsLoop() || id == ll.parent_edge[v]) continue;
        const int w = e.Other(v);
        if (ll.order[w] == -1) {
          ll.parent_edge[w] = id;
          ll.order[w] = ll.low[w] = counter++;
          frame.children += 1;
          stack.push_back({w, 0, 0});
        } else {
          ll.low[v] = std::min(ll.low[v], ll.order[w]);
        }
        continue;
      }
      const int children = frame.children;
      stack.pop_back();
      if (stack.empty()) {
        ll.articulation[v] = children >= 2;
        continue;
      }
      const int u = stack.back().vertex;
      ll.low[u] = std::min(ll.low[u], ll.low[v]);
      if (ll.low[v] > ll.order[u]) ll.bridges.push_back(ll.parent_edge[v]);
      if (stack.size() >= 2 && ll.low[v] >= ll.order[u]) {
        ll.articulation[u] = true;
      }
    }
  }
  std::sort(ll.bridges.begin(), ll.bridges.end());
  return ll;
}

}  // namespace

std::vector<int> FindBridges(const MultiGraph& graph) {
  return ComputeLowLink(graph).bridges;
}

std::vector<int> ArticulationPoints(const MultiGraph& graph) {
  const LowLink ll = ComputeLowLink(graph);
  std::vector<int> points;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (ll.articulation[v]) points.push_back(v);
  }
  return points;
}

int ConnectedComponentCount(const MultiGraph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : graph.edges()) {
    const int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool IsConnected(const MultiGraph& graph) {
  return ConnectedComponentCount(graph) <= 1;
}

bool IsTwoConnected(const MultiGraph& graph) {
  return graph.vertex_count() >= 3 && IsConnected(graph) &&
         ArticulationPoints(graph).empty();
}

int Girth(const MultiGraph& graph) {
  int best = 0;
  auto improve = [&best](int length) {
    if (best == 0 || length < best) best = length;
  };
  std::vector<std::pair<int, int>> seen;
  for (const Edge& e : graph.edges()) {
    if (e.IsLoop()) improve(1);
    seen.emplace_back(e.tail, e.head);
  }
  std::sort(seen.begin(), seen.end());
  for (size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] == seen[i - 1] && seen[i].first != seen[i].second) improve(2);
  }
  const int n = graph.vertex_count();
  for (int source = 0; source < n; ++source) {
    std::vector<int> dist(n, -1), via(n, -1);
    std::deque<int> queue = {source};
    dist[source] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int id : graph.incident(v)) {
        const Edge& e = graph.edge(id);
        if (e.IsLoop() || id == via[v]) continue;
        const int w = e.Other(v);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          via[w] = id;
          queue.push_back(w);
        } else {
          improve(dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::optional<std::vector<int>> ThreeEdgeColouring(const MultiGraph& graph) {
  Require(graph.IsCubic() && graph.IsLoopless(),
          "three_edge_colouring requires a loopless cubic graph");
  const int m = graph.edge_count();
  // Colour edges in BFS discovery order so constraints bite early.
  std::vector<int> order;
  std::vector<bool> queued(m, false), visited(graph.vertex_count(), false);
  for (int root = 0; root < graph.vertex_count(); ++root) {
    if (visited[root]) continue;
    std::deque<int> queue = {root};
    visited[root] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int id : graph.incident(v)) {
        if (!queued[id]) {
          queued[id] = true;
          order.push_back(id);
        }
        const int w = graph.edge(id).Other(v);
        if (!visited[w]) {
          visited[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> colour(m, 0);
  auto allowed = [&](int id, int c) {
    const Edge& e = graph.edge(id);
    for (int endpoint : {e.tail, e.head}) {
      for (int other : graph.incident(endpoint)) {
        if (other != id && colour[other] == c) return false;
      }
    }
    return true;
  };
  std::function<bool(size_t)> extend = [&](size_t i) {
    if (i == order.size()) return true;
    const int id = order[i];
    for (int c = 1; c <= 3; ++c) {
      if (!allowed(id, c)) continue;
      colour[id] = c;
      if (extend(i + 1)) return true;
    }
    colour[id] = 0;
    return false;
  };
  // The first edge may take colour 1 without loss of generality.
  if (m == 0) return colour;
  colour[order[0]] = 1;
  if (!extend(1)) return std::nullopt;
  return colour;
}

void ForEachPerfectMatching(
    const MultiGraph& graph,
    const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = graph.vertex_count();
  if (n % 2 != 0) return;
  std::vector<bool> matched(n, false);
  std::vector<int> matching;
  std::function<bool(int)> extend = [&](int from) {
    int v = from;
    while (v < n && matched[v]) ++v;
    if (v == n) return visit(matching);
    matched[v] = true;
    for (int id : graph.incident(v)) {
      const Edge& e = graph.edge(id);
      if (e.IsLoop()) continue;
      const int w = e.Other(v);
      if (matched[w]) continue;
      matched[w] = true;
      matching.push_back(id);
      const bool go_on = extend(v + 1);
      matching.pop_back();
      matched[w] = false;
      if (!go_on) {
        matched[v] = false;
        return false;
      }
    }
    matched[v] = false;
    return true;
  };
  extend(0);
}

std::vector<std::vector<int>> PerfectMatchings(const MultiGraph& graph) {
  std::vector<std::vector<int>> all;
  ForEachPerfectMatching(graph, [&all](const std::vector<int>& matching) {
    std::vector<int> sorted = matching;
    std::sort(sorted.begin(), sorted.end());
    all.push_back(std::move(sorted));
    return true;
  });
  return all;
}

std::vector<SignedEdgeMap> CycleBasis(const MultiGraph& graph) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  std::vector<int> parent_edge(n, -1), depth(n, -1);
  std::vector<bool> tree(m, false);
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int id : graph.incident(v)) {
        const int w = graph.edge(id).Other(v);
        if (depth[w] != -1) continue;
        depth[w] = depth[v] + 1;
        parent_edge[w] = id;
        tree[id] = true;
        queue.push_back(w);
      }
    }
  }
  std::vector<SignedEdgeMap> basis;
  for (int id = 0; id < m; ++id) {
    if (tree[id]) continue;
    SignedEdgeMap cycle(m, 0);
    cycle[id] = 1;
    const Edge& e = graph.edge(id);
    // Walk tail->head along the cotree edge, then head back to tail in the
    // tree: climb both endpoints to their common ancestor.
    auto step_sign = [&graph](int edge_id, int from) {
      return static_cast<int8_t>(graph.edge(edge_id).tail == from ? 1 : -1);
    };
    int a = e.head, b = e.tail;
    std::vector<std::pair<int, int8_t>> from_b;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const int pe = parent_edge[a];
        cycle[pe] = step_sign(pe, a);
        a = graph.edge(pe).Other(a);
      } else {
        const int pe = parent_edge[b];
        const int up = graph.edge(pe).Other(b);
        // Traversed up -> b on the way back to the tail.
        cycle[pe] = step_sign(pe, up);
        b = up;
      }
    }
    basis.push_back(std::move(cycle));
  }
  return basis;
}

int64_t Boundary(const MultiGraph& graph, const std::vector<int64_t>& values,
                 int v) {
  int64_t sum = 0;
  for (int id : graph.incident(v)) {
    const Edge& e = graph.edge(id);
    if (e.IsLoop()) continue;
    sum += e.tail == v ? values[id] : -values[id];
  }
  return sum;
}

std::vector<EdgeBitset> CycleSpaceElements(const MultiGraph& graph,
                                           int max_rank) {
  if (graph.edge_count() > kMaxBitsetEdges) {
    Fail(ErrorCode::kUnsupported, "too many edges for cycle-space enumeration");
  }
  const std::vector<SignedEdgeMap> basis = CycleBasis(graph);
  const int rank = static_cast<int>(basis.size());
  if (rank > max_rank) {
    Fail(ErrorCode::kUnsupported,
         "cycle rank " + std::to_string(rank) + " exceeds enumeration limit " +
             std::to_string(max_rank));
  }
  std::vector<EdgeBitset> generators(rank);
  for (int i = 0; i < rank; ++i) {
    for (int id = 0; id < graph.edge_count(); ++id) {
      if (basis[i][id] != 0) generators[i].set(id);
    }
  }
  // Ordered by the binary value of the coefficient vector.
  std::vector<EdgeBitset> elements(size_t{1} << rank);
  for (size_t mask = 1; mask < elements.size(); ++mask) {
    const int low = __builtin_ctzll(mask);
    elements[mask] = elements[mask & (mask - 1)] ^ generators[low];
  }
  return elements;
}

SignedEdgeMap EulerOrientation(const MultiGraph& graph,
                               const std::vector<bool>& support) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  Require(static_cast<int>(support.size()) == m, "support size mismatch");
  std::vector<int> degree(n, 0);
  for (int id = 0; id < m; ++id) {
    if (!support[id]) continue;
    degree[graph.edge(id).tail] += 1;
    degree[graph.edge(id).head] += 1;
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] % 2 != 0) {
      Fail(ErrorCode::kContract,
           "subgraph has odd degree at vertex " + std::to_string(v));
    }
  }
  SignedEdgeMap signs(m, 0);
  std::vector<bool> used(m, false);
  std::vector<size_t> cursor(n, 0);
  auto next_edge = [&](int v) -> int {
    auto incident = graph.incident(v);
    while (cursor[v] < incident.size()) {
      const int id = incident[cursor[v]];
      if (support[id] && !used[id]) return id;
      ++cursor[v];
    }
    return -1;
  };
  for (int start = 0; start < n; ++start) {
    while (next_edge(start) != -1) {
      // Trace one closed trail; every vertex has even remaining degree, so
      // the walk can only get stuck back at its start.
      int v = start;
      do {
        const int id = next_edge(v);
        if (id == -1) {
          Fail(ErrorCode::kInternal, "Euler trail got stuck");
        }
        used[id] = true;
        const Edge& e = graph.edge(id);
        signs[id] = e.tail == v ? 1 : -1;
        v = e.Other(v);
      } while (v != start);
    }
  }
  return signs;
}

}  // namespace mcflow
