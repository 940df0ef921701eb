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

#include "covers/cover_search.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "common/error.h"
#include "graph/structure.h"
#include "search/flow_search.h"

namespace mcflow {
namespace {

// Above this many edges the superset table gets too large.
constexpr int kMaxTableEdges = 20;

void RequireBridgeless(const MultiGraph& graph) {
  const std::vector<int> bridges = FindBridges(graph);
  if (!bridges.empty()) {
    const Edge& e = graph.edge(bridges.front());
    Fail(ErrorCode::kNoFlowPossible,
         "graph has a bridge (edge " + std::to_string(bridges.front()) + ": " +
             std::to_string(e.tail) + "-" + std::to_string(e.head) + ")");
  }
}

SignedEdgeMap OrientSupport(const MultiGraph& graph, const EdgeBitset& set) {
  std::vector<bool> support(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) support[e] = set.test(e);
  return EulerOrientation(graph, support);
}

std::optional<CycleCover> Z2CubeByEnumeration(const MultiGraph& graph) {
  const int m = graph.edge_count();
  std::vector<EdgeBitset> elements = CycleSpaceElements(graph);
  std::stable_sort(elements.begin(), elements.end(),
                   [](const EdgeBitset& a, const EdgeBitset& b) {
                     return a.count() > b.count();
                   });
  const uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
  std::vector<uint32_t> masks(elements.size());
  for (size_t i = 0; i < elements.size(); ++i) {
    masks[i] = static_cast<uint32_t>(elements[i].to_ulong());
  }
  // superset[x] = index + 1 of some element containing x, or 0.
  std::vector<uint32_t> superset(size_t{1} << m, 0);
  for (size_t i = 0; i < masks.size(); ++i) {
    if (superset[masks[i]] == 0) superset[masks[i]] = static_cast<uint32_t>(i + 1);
  }
  for (int bit = 0; bit < m; ++bit) {
    for (uint32_t x = 0; x <= full; ++x) {
      if ((x >> bit & 1u) == 0 && superset[x] == 0) {
        superset[x] = superset[x | (1u << bit)];
      }
      if (x == full) break;
    }
  }
  for (size_t i = 0; i < masks.size(); ++i) {
    for (size_t j = i; j < masks.size(); ++j) {
      const uint32_t rest = full & ~(masks[i] | masks[j]);
      if (superset[rest] == 0) continue;
      CycleCover cover;
      for (const EdgeBitset& c :
           {elements[i], elements[j], elements[superset[rest] - 1]}) {
        cover.cycles.push_back(OrientSupport(graph, c));
      }
      return cover;
    }
  }
  return std::nullopt;
}

std::optional<CycleCover> Z2CubeByLabels(const MultiGraph& graph) {
  // A (2,3)-ChNZF scaled by 1 is three {-1,0,1} flows covering E.
  Decision decision = DecideChnzf(graph, 2, 1, 3);
  if (!decision.found()) return std::nullopt;
  CycleCover cover;
  for (int c = 0; c < 3; ++c) {
    SignedEdgeMap cycle(graph.edge_count(), 0);
    for (int e = 0; e < graph.edge_count(); ++e) {
      cycle[e] = static_cast<int8_t>(sgn(decision.witness->value(e)[c]));
    }
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

// Depth-first search over per-edge choices, most constrained edge first.
// Each choice touches some cycles at the two endpoints; cycle indices are
// introduced in increasing order.
class OcdcSearcher {
 public:
  OcdcSearcher(const MultiGraph& graph, int k, int64_t budget)
      : graph_(graph),
        k_(k),
        budget_(budget),
        balance_(static_cast<size_t>(k) * graph.vertex_count(), 0),
        open_(graph.vertex_count(), 0),
        choice_(graph.edge_count(), {-1, -1}) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
      for (int e : graph.incident(v)) open_[v] += graph.edge(e).IsLoop() ? 0 : 1;
    }
  }

  CoverSearchResult Run() {
    CoverSearchResult result;
    const bool found = Dfs(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = SearchOutcome::kFound;
      CycleCover cover;
      cover.multiplicity = 2;
      cover.oriented_double = true;
      cover.cycles.assign(k_, SignedEdgeMap(graph_.edge_count(), 0));
      for (int e = 0; e < graph_.edge_count(); ++e) {
        cover.cycles[choice_[e].first][e] = 1;
        cover.cycles[choice_[e].second][e] = -1;
      }
      result.cover = std::move(cover);
    } else {
      result.outcome = exhausted_ ? SearchOutcome::kBudgetExhausted
                                  : SearchOutcome::kInfeasible;
    }
    return result;
  }

 private:
  int& Bal(int c, int v) { return balance_[static_cast<size_t>(c) * graph_.vertex_count() + v]; }

  void Apply(int e, int f, int b, int sign) {
    const Edge& edge = graph_.edge(e);
    if (!edge.IsLoop()) {
      Bal(f, edge.tail) += sign;
      Bal(f, edge.head) -= sign;
      Bal(b, edge.head) += sign;
      Bal(b, edge.tail) -= sign;
      open_[edge.tail] -= sign;
      open_[edge.head] -= sign;
    }
    choice_[e] = sign > 0 ? std::pair{f, b} : std::pair{-1, -1};
  }

  bool VertexOk(int v) {
    int total = 0;
    for (int c = 0; c < k_; ++c) total += std::abs(Bal(c, v));
    return open_[v] == 0 ? total == 0 : total <= 2 * open_[v];
  }

  void Candidates(int e, std::vector<std::pair<int, int>>* out) {
    out->clear();
    const Edge& edge = graph_.edge(e);
    const int limit = std::min(k_, used_ + 2);
    for (int f = 0; f < limit; ++f) {
      for (int b = 0; b < limit; ++b) {
        if (f == b) continue;
        // Fresh indices must be the next unused ones, in order.
        const int hi = std::max(f, b), lo = std::min(f, b);
        if (hi >= used_ + 1 && lo < used_ && hi != used_) continue;
        if (lo >= used_ && (lo != used_ || hi != used_ + 1 || f != used_)) {
          continue;
        }
        if (!edge.IsLoop()) {
          Apply(e, f, b, 1);
          const bool ok = VertexOk(edge.tail) && VertexOk(edge.head);
          Apply(e, f, b, -1);
          if (!ok) continue;
        }
        out->push_back({f, b});
      }
    }
  }

  bool Dfs(int assigned) {
    if (assigned == graph_.edge_count()) return true;
    if (budget_ > 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    int best = -1;
    std::vector<std::pair<int, int>> best_list, list;
    for (int e = 0; e < graph_.edge_count(); ++e) {
      if (choice_[e].first >= 0) continue;
      Candidates(e, &list);
      if (best < 0 || list.size() < best_list.size()) {
        best = e;
        best_list = list;
        if (best_list.size() <= 1) break;
      }
    }
    for (const auto& [f, b] : best_list) {
      const int saved_used = used_;
      used_ = std::max(used_, std::max(f, b) + 1);
      Apply(best, f, b, 1);
      if (Dfs(assigned + 1)) return true;
      Apply(best, f, b, -1);
      used_ = saved_used;
      if (exhausted_) return false;
    }
    return false;
  }

  const MultiGraph& graph_;
  const int k_;
  const int64_t budget_;
  std::vector<int> balance_;
  std::vector<int> open_;
  std::vector<std::pair<int, int>> choice_;
  int used_ = 0;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Each edge picks a k-subset of the m cycles; per vertex the xor of the
// incident subsets must vanish.
class UnorientedCoverSearcher {
 public:
  UnorientedCoverSearcher(const MultiGraph& graph, int m, int k, int64_t budget)
      : graph_(graph),
        m_(m),
        k_(k),
        budget_(budget),
        parity_(graph.vertex_count(), 0),
        open_(graph.vertex_count(), 0),
        choice_(graph.edge_count(), 0) {
    for (uint32_t s = 0; s < (1u << m); ++s) {
      if (std::popcount(s) == k) subsets_.push_back(s);
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
      for (int e : graph.incident(v)) open_[v] += graph.edge(e).IsLoop() ? 0 : 1;
    }
  }

  CoverSearchResult Run() {
    CoverSearchResult result;
    const bool found = Dfs(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = SearchOutcome::kFound;
      CycleCover cover;
      cover.multiplicity = k_;
      for (int c = 0; c < m_; ++c) {
        EdgeBitset set;
        for (int e = 0; e < graph_.edge_count(); ++e) {
          if (choice_[e] >> c & 1u) set.set(e);
        }
        cover.cycles.push_back(OrientSupport(graph_, set));
      }
      result.cover = std::move(cover);
    } else {
      result.outcome = exhausted_ ? SearchOutcome::kBudgetExhausted
                                  : SearchOutcome::kInfeasible;
    }
    return result;
  }

 private:
  void Apply(int e, uint32_t s) {
    const Edge& edge = graph_.edge(e);
    if (!edge.IsLoop()) {
      parity_[edge.tail] ^= s;
      parity_[edge.head] ^= s;
    }
  }

  bool VertexOk(int v) const {
    const int open = open_[v];
    const int bits = std::popcount(parity_[v]);
    if (open == 0) return bits == 0;
    if (open == 1) return bits == k_;
    return bits <= open * k_;
  }

  void Candidates(int e, std::vector<uint32_t>* out) {
    out->clear();
    const Edge& edge = graph_.edge(e);
    const uint32_t fresh_mask = used_ >= 32 ? 0 : ~((1u << used_) - 1);
    for (uint32_t s : subsets_) {
      const uint32_t fresh = s & fresh_mask;
      if (fresh != 0) {
        // Fresh cycles must be used_, used_ + 1, ... consecutively.
        const int count = std::popcount(fresh);
        if (fresh != (((1u << count) - 1) << used_)) continue;
      }
      if (!edge.IsLoop()) {
        Apply(e, s);
        --open_[edge.tail];
        --open_[edge.head];
        const bool ok = VertexOk(edge.tail) && VertexOk(edge.head);
        ++open_[edge.tail];
        ++open_[edge.head];
        Apply(e, s);
        if (!ok) continue;
      }
      out->push_back(s);
    }
  }

  bool Dfs(int assigned) {
    if (assigned == graph_.edge_count()) return true;
    if (budget_ > 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    int best = -1;
    std::vector<uint32_t> best_list, list;
    for (int e = 0; e < graph_.edge_count(); ++e) {
      if (choice_[e] != 0) continue;
      Candidates(e, &list);
      if (best < 0 || list.size() < best_list.size()) {
        best = e;
        best_list = list;
        if (best_list.size() <= 1) break;
      }
    }
    const Edge& edge = graph_.edge(best);
    for (uint32_t s : best_list) {
      const int saved_used = used_;
      used_ = std::max(used_, 32 - std::countl_zero(s));
      Apply(best, s);
      choice_[best] = s;
      if (!edge.IsLoop()) {
        --open_[edge.tail];
        --open_[edge.head];
      }
      if (Dfs(assigned + 1)) return true;
      if (!edge.IsLoop()) {
        ++open_[edge.tail];
        ++open_[edge.head];
      }
      choice_[best] = 0;
      Apply(best, s);
      used_ = saved_used;
      if (exhausted_) return false;
    }
    return false;
  }

  const MultiGraph& graph_;
  const int m_;
  const int k_;
  const int64_t budget_;
  std::vector<uint32_t> subsets_;
  std::vector<uint32_t> parity_;
  std::vector<int> open_;
  std::vector<uint32_t> choice_;
  int used_ = 0;
  int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CycleCover FindZ2CubeFlow(const MultiGraph& graph) {
  RequireBridgeless(graph);
  std::optional<CycleCover> cover =
      graph.edge_count() <= kMaxTableEdges ? Z2CubeByEnumeration(graph)
                                           : Z2CubeByLabels(graph);
  if (!cover) {
    Fail(ErrorCode::kInternal,
         "no three cycles cover a bridgeless graph; this is a bug");
  }
  return *cover;
}

CoverSearchResult FindKOcdc(const MultiGraph& graph, int k,
                            int64_t node_budget) {
  Require(k >= 3, "k-OCDC search needs k >= 3");
  RequireBridgeless(graph);
  return OcdcSearcher(graph, k, node_budget).Run();
}

CoverSearchResult FindCycleCover(const MultiGraph& graph, int m, int k,
                                 int64_t node_budget) {
  Require(m >= 1 && m <= 16, "cycle count m must be in [1, 16]");
  Require(k >= 1 && k <= m, "multiplicity k must be in [1, m]");
  RequireBridgeless(graph);
  return UnorientedCoverSearcher(graph, m, k, node_budget).Run();
}

}  // namespace mcflow
