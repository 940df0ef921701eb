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

#ifndef MCFLOW_COVERS_CONSTRUCTIONS_H_
#define MCFLOW_COVERS_CONSTRUCTIONS_H_

#include "covers/cycle_cover.h"
#include "covers/hadamard.h"
#include "flow/flow.h"
#include "graph/multigraph.h"

namespace mcflow {

// Cycles get (1/2,1/2), (1/2,-1/2), (-1/2,1/2), (-1/2,-1/2); each edge
// takes the difference of its forward and backward cycle. Chebyshev, r = 2.
FlowAssignment FlowFrom4Ocdc(const MultiGraph& graph, const CycleCover& cover);

// Cycles get +-1/2 on the three axes (five points, the last (0,0,1/2)).
// Manhattan, d = 3, r = 2.
FlowAssignment FlowFrom5Ocdc3d(const MultiGraph& graph,
                               const CycleCover& cover);

// Three cycles covering every edge carry q1, q2, q3. Manhattan, d = 3,
// r = 5/2.
FlowAssignment FlowFrom3CoverQ(const MultiGraph& graph,
                               const CycleCover& cover);

// m-cycle k-cover; cycle i < m - n carries e_i / (k - n), the rest nothing.
// Manhattan, d = m - n, r = 1 + k / (k - n).
FlowAssignment FlowFromCoverBasis(const MultiGraph& graph,
                                  const CycleCover& cover, int n);

// m-cycle double cover; cycle i < m - 1 carries row i of h scaled by
// 1 / (m - 1), the last cycle nothing. Manhattan, d = m - 1, r = 2.
FlowAssignment FlowFromCdcHadamard(const MultiGraph& graph,
                                   const CycleCover& cover,
                                   const HadamardMatrix& h);

}  // namespace mcflow

#endif  // MCFLOW_COVERS_CONSTRUCTIONS_H_
