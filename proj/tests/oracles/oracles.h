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

#ifndef MCFLOW_TESTS_ORACLES_ORACLES_H_
#define MCFLOW_TESTS_ORACLES_ORACLES_H_

// Brute-force reference answers for small graphs. Deliberately naive and
// written only against the standard library, so they share no code with
// the library under test.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Edge (u, v) is oriented u -> v when u <= v.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Tries all colourings edge by edge in input order.
bool Colourable(const PlainGraph& g);

// Edge subsets of size n/2 that touch every vertex once.
int64_t CountPerfectMatchings(const PlainGraph& g);

// Edges whose removal disconnects their endpoints.
std::vector<int> Bridges(const PlainGraph& g);

// Removing any single vertex leaves the rest connected (n >= 3).
bool TwoConnected(const PlainGraph& g);

bool Snark(const PlainGraph& g);

// Every even subgraph, as edge masks (m <= 24).
std::vector<uint32_t> EvenSubgraphs(const PlainGraph& g);

// Integer flows with |f| <= p - q on every edge, enumerated through all
// values on a cotree. d = 1: some flow has |f| >= q everywhere. d = 2: two
// flows together reach |f| >= q on every edge. p/q must be reduced.
bool IntegerWindowFeasible(const PlainGraph& g, int64_t p, int64_t q, int d);

// m even subgraphs covering every edge exactly k times, by trying all
// m-tuples (sorted) of even subgraphs. Returns edge masks.
std::optional<std::vector<uint32_t>> CycleCover(const PlainGraph& g, int m,
                                                int k);

}  // namespace oracle

#endif  // MCFLOW_TESTS_ORACLES_ORACLES_H_
