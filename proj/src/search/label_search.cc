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

#include "search/label_search.h"

#include <algorithm>
#include <deque>

#include "common/error.h"
#include "search/circulation.h"

namespace mcflow {

const char* SearchOutcomeName(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound:
      return "found";
    case SearchOutcome::kInfeasible:
      return "infeasible";
    case SearchOutcome::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

namespace {

constexpr int kUnlabeled = -1;
constexpr size_t kWitnessCacheSize = 6;

// Label l encodes coordinate l / 2 and sign + (l even) or - (l odd).
int LabelOf(int coordinate, bool negative) {
  return 2 * coordinate + (negative ? 1 : 0);
}

struct Node {
  std::vector<int> label;        // per edge
  std::vector<uint8_t> refuted;  // edge * labels + label
  std::vector<std::vector<int64_t>> lo, hi;
  std::vector<bool> used;        // per coordinate
};

class Searcher {
 public:
  Searcher(const MultiGraph& graph, const LabelSearchProblem& problem)
      : graph_(graph),
        problem_(problem),
        solver_(graph),
        m_(graph.edge_count()),
        d_(static_cast<int>(problem.coordinates.size())),
        labels_(2 * d_),
        witnesses_(d_) {
    needs_cover_ = problem.needs_cover;
    if (needs_cover_.empty()) needs_cover_.assign(m_, true);
    Require(static_cast<int>(needs_cover_.size()) == m_,
            "needs_cover must have one entry per edge");
    for (const CoordinateSpec& c : problem.coordinates) {
      Require(c.max_abs >= 0 && c.threshold >= 1,
              "coordinate bounds must satisfy max_abs >= 0, threshold >= 1");
    }
    ComputeStaticOrder();
  }

  LabelSearchResult Run() {
    LabelSearchResult result;
    if (d_ == 0) {
      const bool any = std::find(needs_cover_.begin(), needs_cover_.end(),
                                 true) != needs_cover_.end();
      result.outcome = any ? SearchOutcome::kInfeasible : SearchOutcome::kFound;
      return result;
    }
    Node root;
    root.label.assign(m_, kUnlabeled);
    root.refuted.assign(static_cast<size_t>(m_) * labels_, 0);
    root.used.assign(d_, false);
    root.lo.resize(d_);
    root.hi.resize(d_);
    for (int c = 0; c < d_; ++c) {
      root.lo[c].assign(m_, -problem_.coordinates[c].max_abs);
      root.hi[c].assign(m_, problem_.coordinates[c].max_abs);
    }
    std::vector<bool> dirty(d_, true);
    const Outcome outcome = Search(root, dirty);
    result.nodes = nodes_;
    result.circulations = solver_.calls();
    if (outcome == Outcome::kFound) {
      result.outcome = SearchOutcome::kFound;
      result.values = solution_;
    } else if (outcome == Outcome::kAbort) {
      result.outcome = SearchOutcome::kBudgetExhausted;
    } else {
      result.outcome = SearchOutcome::kInfeasible;
    }
    return result;
  }

 private:
  enum class Outcome { kFound, kFailed, kAbort };

  void ComputeStaticOrder() {
    rank_.assign(m_, m_);
    int next = 0;
    std::vector<bool> seen(graph_.vertex_count(), false);
    for (int root = 0; root < graph_.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<int> queue = {root};
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int id : graph_.incident(v)) {
          if (rank_[id] == m_) rank_[id] = next++;
          const int w = graph_.edge(id).Other(v);
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
  }

  void Tighten(Node& node, int edge, int label) const {
    const int c = label / 2;
    const CoordinateSpec& spec = problem_.coordinates[c];
    node.label[edge] = label;
    node.used[c] = true;
    if (label % 2 == 0) {
      node.lo[c][edge] = std::max(node.lo[c][edge], spec.threshold);
    } else {
      node.hi[c][edge] = std::min(node.hi[c][edge], -spec.threshold);
    }
  }

  bool WitnessFits(const std::vector<int64_t>& w, const Node& node,
                   int c) const {
    for (int e = 0; e < m_; ++e) {
      if (w[e] < node.lo[c][e] || w[e] > node.hi[c][e]) return false;
    }
    return true;
  }

  void PruneWitnesses(const Node& node, int c) {
    auto& cache = witnesses_[c];
    cache.erase(std::remove_if(cache.begin(), cache.end(),
                               [&](const std::vector<int64_t>& w) {
                                 return !WitnessFits(w, node, c);
                               }),
                cache.end());
  }

  void RememberWitness(int c, std::vector<int64_t> w) {
    auto& cache = witnesses_[c];
    cache.insert(cache.begin(), std::move(w));
    if (cache.size() > kWitnessCacheSize) cache.pop_back();
  }

  bool Confirmed(int edge, int label) const {
    const int c = label / 2;
    const int64_t threshold = problem_.coordinates[c].threshold;
    for (const auto& w : witnesses_[c]) {
      if (label % 2 == 0 ? w[edge] >= threshold : w[edge] <= -threshold) {
        return true;
      }
    }
    return false;
  }

  // Labels worth trying at this node, modulo symmetry: both signs of used
  // coordinates, plus "+" on the lowest unused coordinate of each class.
  std::vector<int> CandidateLabels(const Node& node, int edge) const {
    std::vector<int> out;
    std::vector<int> fresh_classes;
    for (int c = 0; c < d_; ++c) {
      const int cls = problem_.coordinates[c].symmetry_class;
      if (node.used[c]) {
        out.push_back(LabelOf(c, false));
        out.push_back(LabelOf(c, true));
      } else if (std::find(fresh_classes.begin(), fresh_classes.end(), cls) ==
                 fresh_classes.end()) {
        fresh_classes.push_back(cls);
        out.push_back(LabelOf(c, false));
      }
    }
    std::erase_if(out, [&](int label) {
      return node.refuted[static_cast<size_t>(edge) * labels_ + label] != 0;
    });
    return out;
  }

  bool Probe(Node& node, int edge, int label) {
    if (Confirmed(edge, label)) return true;
    const int c = label / 2;
    const int64_t saved_lo = node.lo[c][edge];
    const int64_t saved_hi = node.hi[c][edge];
    const int64_t threshold = problem_.coordinates[c].threshold;
    if (label % 2 == 0) {
      node.lo[c][edge] = std::max(saved_lo, threshold);
    } else {
      node.hi[c][edge] = std::min(saved_hi, -threshold);
    }
    std::vector<int64_t> w;
    const bool ok = solver_.Solve(node.lo[c], node.hi[c], &w);
    node.lo[c][edge] = saved_lo;
    node.hi[c][edge] = saved_hi;
    if (ok) RememberWitness(c, std::move(w));
    return ok;
  }

  // Runs circulation tests and probing to a fixpoint. Returns false on a
  // contradiction.
  bool Propagate(Node& node, std::vector<bool>& dirty) {
    while (true) {
      for (int c = 0; c < d_; ++c) {
        if (!dirty[c]) continue;
        dirty[c] = false;
        PruneWitnesses(node, c);
        if (!witnesses_[c].empty()) continue;
        std::vector<int64_t> w;
        if (!solver_.Solve(node.lo[c], node.hi[c], &w)) return false;
        RememberWitness(c, std::move(w));
      }
      int forced_edge = -1, forced_label = -1;
      for (int e = 0; e < m_ && forced_edge < 0; ++e) {
        if (!needs_cover_[e] || node.label[e] != kUnlabeled) continue;
        int alive = 0, last = -1;
        for (int label : CandidateLabels(node, e)) {
          if (Probe(node, e, label)) {
            ++alive;
            last = label;
          } else {
            node.refuted[static_cast<size_t>(e) * labels_ + label] = 1;
          }
        }
        if (alive == 0) return false;
        if (alive == 1) {
          forced_edge = e;
          forced_label = last;
        }
      }
      if (forced_edge < 0) return true;
      Tighten(node, forced_edge, forced_label);
      dirty[forced_label / 2] = true;
    }
  }

  Outcome Search(Node& node, std::vector<bool>& dirty) {
    ++nodes_;
    if (problem_.node_budget > 0 && nodes_ > problem_.node_budget) {
      return Outcome::kAbort;
    }
    if (!Propagate(node, dirty)) return Outcome::kFailed;

    int branch_edge = -1;
    std::vector<int> branch_labels;
    for (int e = 0; e < m_; ++e) {
      if (!needs_cover_[e] || node.label[e] != kUnlabeled) continue;
      std::vector<int> labels = CandidateLabels(node, e);
      if (branch_edge < 0 || labels.size() < branch_labels.size() ||
          (labels.size() == branch_labels.size() &&
           rank_[e] < rank_[branch_edge])) {
        branch_edge = e;
        branch_labels = std::move(labels);
      }
    }
    if (branch_edge < 0) {
      // Every cover edge is labelled and every coordinate was solved after
      // its last tightening, so the newest witnesses form a solution.
      solution_.assign(d_, {});
      for (int c = 0; c < d_; ++c) {
        PruneWitnesses(node, c);
        if (witnesses_[c].empty()) {
          std::vector<int64_t> w;
          if (!solver_.Solve(node.lo[c], node.hi[c], &w)) {
            Fail(ErrorCode::kInternal, "label search lost a witness");
          }
          witnesses_[c].push_back(std::move(w));
        }
        solution_[c] = witnesses_[c].front();
      }
      return Outcome::kFound;
    }
    // Labels already backed by a witness first.
    std::stable_partition(branch_labels.begin(), branch_labels.end(),
                          [&](int label) {
                            return Confirmed(branch_edge, label);
                          });
    for (int label : branch_labels) {
      Node child = node;
      Tighten(child, branch_edge, label);
      std::vector<bool> child_dirty(d_, false);
      child_dirty[label / 2] = true;
      const Outcome outcome = Search(child, child_dirty);
      if (outcome != Outcome::kFailed) return outcome;
      node.refuted[static_cast<size_t>(branch_edge) * labels_ + label] = 1;
    }
    return Outcome::kFailed;
  }

  const MultiGraph& graph_;
  const LabelSearchProblem& problem_;
  CirculationSolver solver_;
  const int m_;
  const int d_;
  const int labels_;
  std::vector<bool> needs_cover_;
  std::vector<int> rank_;
  std::vector<std::vector<std::vector<int64_t>>> witnesses_;
  std::vector<std::vector<int64_t>> solution_;
  int64_t nodes_ = 0;
};

}  // namespace

LabelSearchResult RunLabelSearch(const MultiGraph& graph,
                                 const LabelSearchProblem& problem) {
  Searcher searcher(graph, problem);
  return searcher.Run();
}

}  // namespace mcflow
