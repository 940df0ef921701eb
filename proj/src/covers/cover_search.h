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

#ifndef MCFLOW_COVERS_COVER_SEARCH_H_
#define MCFLOW_COVERS_COVER_SEARCH_H_

#include <cstdint>
#include <optional>

#include "covers/cycle_cover.h"
#include "graph/multigraph.h"
#include "search/label_search.h"

namespace mcflow {

struct CoverSearchResult {
  SearchOutcome outcome = SearchOutcome::kInfeasible;
  std::optional<CycleCover> cover;
  int64_t nodes = 0;
  // True when a negative answer is a proof of nonexistence.
  bool exhaustive() const { return outcome != SearchOutcome::kBudgetExhausted; }
};

// Three oriented cycles covering every edge (multiplicity 0). Bridges fail
// with kNoFlowPossible.
CycleCover FindZ2CubeFlow(const MultiGraph& graph);

// Oriented cycle double cover with k oriented cycles. budget 0 = unlimited.
CoverSearchResult FindKOcdc(const MultiGraph& graph, int k,
                            int64_t node_budget = 0);

// m cycles covering every edge exactly k times. Each cycle is returned with
// an Euler orientation.
CoverSearchResult FindCycleCover(const MultiGraph& graph, int m, int k,
                                 int64_t node_budget = 0);

}  // namespace mcflow

#endif  // MCFLOW_COVERS_COVER_SEARCH_H_
