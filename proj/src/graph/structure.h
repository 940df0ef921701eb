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

#ifndef MCFLOW_GRAPH_STRUCTURE_H_
#define MCFLOW_GRAPH_STRUCTURE_H_

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graph/multigraph.h"

namespace mcflow {

// Edge subsets for GF(2) work. Graphs larger than this go through the
// label search instead of cycle-space enumeration.
inline constexpr int kMaxBitsetEdges = 256;
using EdgeBitset = std::bitset<kMaxBitsetEdges>;

// Signed edge map relative to the canonical orientation: -1, 0 or +1.
using SignedEdgeMap = std::vector<int8_t>;

// Exactly the cut edges, sorted. Loops and parallel edges never qualify.
std::vector<int> FindBridges(const MultiGraph& graph);

std::vector<int> ArticulationPoints(const MultiGraph& graph);
int ConnectedComponentCount(const MultiGraph& graph);
bool IsConnected(const MultiGraph& graph);
// Connected, at least 3 vertices and no articulation point.
bool IsTwoConnected(const MultiGraph& graph);

// Length of a shortest cycle; 0 for forests. Loops give 1, parallel
// edges 2.
int Girth(const MultiGraph& graph);

// Proper 3-edge-colouring with colours 1..3 indexed by edge id, or nullopt.
// Exhaustive and deterministic. Requires a loopless cubic graph.
std::optional<std::vector<int>> ThreeEdgeColouring(const MultiGraph& graph);

// Calls visit(matching) for every perfect matching (sorted edge ids), each
// exactly once, in a deterministic order. Stops early when visit returns
// false.
void ForEachPerfectMatching(
    const MultiGraph& graph,
    const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> PerfectMatchings(const MultiGraph& graph);

// Fundamental cycles of a BFS spanning forest, one per cotree edge, in
// increasing cotree edge id.
std::vector<SignedEdgeMap> CycleBasis(const MultiGraph& graph);

// Signed incidence sum at vertex v for a signed edge map (out minus in).
int64_t Boundary(const MultiGraph& graph, const std::vector<int64_t>& values,
                 int v);

// All 2^beta members of the GF(2) cycle space.
// Fails with kUnsupported when beta > max_rank or |E| > kMaxBitsetEdges.
std::vector<EdgeBitset> CycleSpaceElements(const MultiGraph& graph,
                                           int max_rank = 22);

// Orients an even subgraph so every vertex has equal in- and out-degree.
// Circuits are traced from the lowest vertex along the lowest unused edge.
// Fails with kContract when some vertex has odd degree in the subgraph.
SignedEdgeMap EulerOrientation(const MultiGraph& graph,
                               const std::vector<bool>& support);

}  // namespace mcflow

#endif  // MCFLOW_GRAPH_STRUCTURE_H_
