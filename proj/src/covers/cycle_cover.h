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

#ifndef MCFLOW_COVERS_CYCLE_COVER_H_
#define MCFLOW_COVERS_CYCLE_COVER_H_

#include <string>
#include <string_view>
#include <vector>

#include "graph/multigraph.h"
#include "graph/structure.h"

namespace mcflow {

// A collection of oriented cycles (signed edge maps with zero boundary).
// multiplicity k > 0: every edge lies in exactly k cycles. multiplicity 0:
// a plain covering, every edge in at least one cycle. oriented_double
// marks a k-OCDC: each edge once with sign +1 and once with sign -1.
struct CycleCover {
  int multiplicity = 0;
  bool oriented_double = false;
  std::vector<SignedEdgeMap> cycles;

  int size() const { return static_cast<int>(cycles.size()); }
};

// Zero signed boundary at every vertex.
bool IsOrientedCycle(const MultiGraph& graph, const SignedEdgeMap& cycle);

// Throws kContract naming the first violated cycle, vertex or edge.
void ValidateCover(const MultiGraph& graph, const CycleCover& cover);

// Number of cycles containing each edge.
std::vector<int> CoverCounts(const MultiGraph& graph, const CycleCover& cover);

// Cover file: header "m k" (k = 0 for a plain covering; a third token
// "ocdc" marks an oriented double cover), then m lines of signed edge ids
// such as "+0 -3 +7". An empty line is an empty cycle.
std::string WriteCover(const CycleCover& cover);
CycleCover ParseCover(const MultiGraph& graph, std::string_view text);

}  // namespace mcflow

#endif  // MCFLOW_COVERS_CYCLE_COVER_H_
