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

#ifndef MCFLOW_SEARCH_LABEL_SEARCH_H_
#define MCFLOW_SEARCH_LABEL_SEARCH_H_

#include <cstdint>
#include <vector>

#include "graph/multigraph.h"

namespace mcflow {

// One coordinate of an integer vector flow: values satisfy
// |f(e)| <= max_abs, and an edge is "big" in it when |f(e)| >= threshold.
// Coordinates sharing a symmetry class are interchangeable.
struct CoordinateSpec {
  int64_t max_abs = 1;
  int64_t threshold = 1;
  int symmetry_class = 0;
};

struct LabelSearchProblem {
  std::vector<CoordinateSpec> coordinates;
  // Edges that must be big in at least one coordinate; empty means all.
  std::vector<bool> needs_cover;
  // Search nodes before giving up; 0 means unlimited.
  int64_t node_budget = 0;
};

enum class SearchOutcome { kFound, kInfeasible, kBudgetExhausted };

const char* SearchOutcomeName(SearchOutcome outcome);

struct LabelSearchResult {
  SearchOutcome outcome = SearchOutcome::kInfeasible;
  // values[coordinate][edge], set when found.
  std::vector<std::vector<int64_t>> values;
  int64_t nodes = 0;
  int64_t circulations = 0;
};

// Decides whether there are integer flows f_1..f_d, one per coordinate,
// within their bounds such that every cover edge is big in some
// coordinate. Branches on the label (coordinate, sign) that makes each
// edge big; every node runs an exact bounded-circulation test per
// coordinate and probes all open labels, forcing edges left with a
// single label. Complete and deterministic.
LabelSearchResult RunLabelSearch(const MultiGraph& graph,
                                 const LabelSearchProblem& problem);

}  // namespace mcflow

#endif  // MCFLOW_SEARCH_LABEL_SEARCH_H_
