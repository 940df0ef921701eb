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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace oracle {
namespace {

int Components(int n, const std::vector<std::pair<int, int>>& edges,
               int skip_edge, int skip_vertex) {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i == skip_edge) continue;
    auto [u, v] = edges[i];
    if (u == skip_vertex || v == skip_vertex) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (s == skip_vertex || seen[s]) continue;
    ++count;
    std::queue<int> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push(w);
        }
      }
    }
  }
  return count;
}

bool Cubic(const PlainGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
}

bool SimpleGraph(const PlainGraph& g) {
  std::vector<std::pair<int, int>> sorted;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    sorted.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool Colourable(const PlainGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> colour(m, -1);
  std::function<bool(int)> go = [&](int i) {
    if (i == m) return true;
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (colour[j] != c) continue;
        auto [a, b] = g.edges[i];
        auto [x, y] = g.edges[j];
        if (a == x || a == y || b == x || b == y) ok = false;
      }
      if (g.edges[i].first == g.edges[i].second) ok = false;
      if (!ok) continue;
      colour[i] = c;
      if (go(i + 1)) return true;
      colour[i] = -1;
    }
    return false;
  };
  return go(0);
}

int64_t CountPerfectMatchings(const PlainGraph& g) {
  if (g.n % 2 != 0) return 0;
  const int m = static_cast<int>(g.edges.size());
  int64_t count = 0;
  std::vector<int> chosen;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(chosen.size()) == g.n / 2) {
      std::vector<int> hit(g.n, 0);
      for (int e : chosen) {
        ++hit[g.edges[e].first];
        ++hit[g.edges[e].second];
      }
      if (std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) {
        ++count;
      }
      return;
    }
    for (int e = start; e < m; ++e) {
      chosen.push_back(e);
      go(e + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return count;
}

std::vector<int> Bridges(const PlainGraph& g) {
  const int base = Components(g.n, g.edges, -1, -1);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (Components(g.n, g.edges, i, -1) > base) out.push_back(i);
  }
  return out;
}

bool TwoConnected(const PlainGraph& g) {
  if (g.n < 3 || Components(g.n, g.edges, -1, -1) != 1) return false;
  for (int v = 0; v < g.n; ++v) {
    if (Components(g.n, g.edges, -1, v) != 1) return false;
  }
  return true;
}

bool Snark(const PlainGraph& g) {
  return SimpleGraph(g) && Cubic(g) && TwoConnected(g) && !Colourable(g);
}

std::vector<uint32_t> EvenSubgraphs(const PlainGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 24) throw std::invalid_argument("too many edges for the oracle");
  std::vector<uint32_t> out;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.n, 0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u) {
        ++deg[g.edges[e].first];
        ++deg[g.edges[e].second];
      }
    }
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; })) {
      out.push_back(mask);
    }
  }
  return out;
}

bool IntegerWindowFeasible(const PlainGraph& g, int64_t p, int64_t q, int d) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 24) throw std::invalid_argument("too many edges for the oracle");
  if (d != 1 && d != 2) throw std::invalid_argument("oracle handles d <= 2");
  const int64_t hi = p - q;
  if (hi < q) return m == 0;
  // BFS spanning forest.
  std::vector<std::vector<int>> inc(g.n);
  for (int e = 0; e < m; ++e) {
    inc[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first) inc[g.edges[e].second].push_back(e);
  }
  std::vector<int> parent_edge(g.n, -1), order;
  std::vector<bool> seen(g.n, false), tree(m, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      order.push_back(u);
      for (int e : inc[u]) {
        int w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
        if (!seen[w]) {
          seen[w] = true;
          parent_edge[w] = e;
          tree[e] = true;
          todo.push(w);
        }
      }
    }
  }
  std::vector<int> cotree;
  for (int e = 0; e < m; ++e) {
    if (!tree[e]) cotree.push_back(e);
  }
  // Every edge must be big in the 1-D case, so cotree values skip (-q, q).
  std::vector<int64_t> values;
  for (int64_t x = -hi; x <= hi; ++x) {
    if (d == 2 || x <= -q || x >= q) values.push_back(x);
  }
  const uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
  std::vector<char> big_masks(size_t{1} << m, 0);
  std::vector<size_t> digit(cotree.size(), 0);
  std::vector<int64_t> f(m, 0);
  while (true) {
    for (size_t i = 0; i < cotree.size(); ++i) f[cotree[i]] = values[digit[i]];
    bool ok = true;
    for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
      const int v = *it;
      const int pe = parent_edge[v];
      if (pe < 0) continue;
      int64_t rest = 0;
      for (int e : inc[v]) {
        if (e == pe || g.edges[e].first == g.edges[e].second) continue;
        rest += g.edges[e].first == v ? f[e] : -f[e];
      }
      const int64_t sign = g.edges[pe].first == v ? 1 : -1;
      f[pe] = -rest * sign;
      if (f[pe] > hi || f[pe] < -hi) ok = false;
    }
    if (ok) {
      uint32_t mask = 0;
      for (int e = 0; e < m; ++e) {
        if (f[e] >= q || f[e] <= -q) mask |= 1u << e;
      }
      if (d == 1 && mask == full) return true;
      big_masks[mask] = 1;
    }
    size_t i = 0;
    while (i < digit.size() && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  if (d == 1) return false;
  // superset[x]: some big mask contains x.
  std::vector<char> superset = big_masks;
  for (int b = 0; b < m; ++b) {
    for (uint32_t x = 0; x <= full; ++x) {
      if (!(x >> b & 1u) && superset[x | (1u << b)]) superset[x] = 1;
      if (x == full) break;
    }
  }
  for (uint32_t a = 0; a <= full; ++a) {
    if (big_masks[a] && superset[full & ~a]) return true;
    if (a == full) break;
  }
  return false;
}

std::optional<std::vector<uint32_t>> CycleCover(const PlainGraph& g, int m,
                                                int k) {
  const std::vector<uint32_t> even = EvenSubgraphs(g);
  const int edges = static_cast<int>(g.edges.size());
  std::vector<int> pick(m, 0);
  const int count = static_cast<int>(even.size());
  std::function<bool(int, int)> go = [&](int slot, int start) {
    if (slot == m) {
      for (int e = 0; e < edges; ++e) {
        int c = 0;
        for (int i = 0; i < m; ++i) c += even[pick[i]] >> e & 1u;
        if (c != k) return false;
      }
      return true;
    }
    for (int i = start; i < count; ++i) {
      pick[slot] = i;
      if (go(slot + 1, i)) return true;
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  std::vector<uint32_t> out;
  for (int i : pick) out.push_back(even[i]);
  return out;
}

}  // namespace oracle
