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

#ifndef MCFLOW_PAIRS_FLOW_PAIR_H_
#define MCFLOW_PAIRS_FLOW_PAIR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flow/flow.h"
#include "graph/multigraph.h"
#include "search/label_search.h"

namespace mcflow {

// A 2-flow and a (p+q+1)-flow on the canonical orientation such that every
// edge outside the support of phi2 has |big| >= q.
struct FlowPair {
  int64_t p = 1;
  int64_t q = 1;
  std::vector<int> phi2;
  std::vector<int64_t> big;
};

enum class PairMethod { kAuto, kGeneric, kMatching };
const char* PairMethodName(PairMethod method);
PairMethod ParsePairMethod(std::string_view name);

struct PairSearchResult {
  SearchOutcome outcome = SearchOutcome::kInfeasible;
  std::optional<FlowPair> pair;
  PairMethod method = PairMethod::kGeneric;  // the one actually used
  int64_t nodes = 0;
  int64_t supports_tried = 0;
  bool exhaustive() const { return outcome != SearchOutcome::kBudgetExhausted; }
};

// p/q is reduced first and must satisfy 0 < p/q <= 1. kAuto uses the
// matching method on loopless cubic graphs when p < q, which is complete
// there, and the cycle-space method otherwise. node_budget bounds the total
// number of label-search nodes (0 = unlimited).
PairSearchResult FindTFlowPair(const MultiGraph& graph, int64_t p, int64_t q,
                               int64_t node_budget = 0,
                               PairMethod method = PairMethod::kAuto);

// Throws kContract naming the first violated vertex or edge.
void ValidatePair(const MultiGraph& graph, const FlowPair& pair);

// (phi2, big / q): Chebyshev, d = 2, r = 2 + p/q.
FlowAssignment ChnzfFromPair(const MultiGraph& graph, const FlowPair& pair);

// (2 + p/q) phi2 + big / q: d = 1, r = 4 + 2p/q.
FlowAssignment Nzf1dFromPair(const MultiGraph& graph, const FlowPair& pair);

// Support of phi2 is a spanning 2-regular subgraph.
bool CheckSupportTwoFactor(const MultiGraph& graph, const FlowPair& pair);

// "mcflow-pair 1", "graph <key>", "p <p>", "q <q>", "edges <m>", then one
// line per edge: "tail head : phi2 big".
std::string WritePair(const MultiGraph& graph, const FlowPair& pair);
FlowPair ParsePair(const MultiGraph& graph, std::string_view text);

}  // namespace mcflow

#endif  // MCFLOW_PAIRS_FLOW_PAIR_H_
