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

#ifndef MCFLOW_GRAPH_GRAPH6_H_
#define MCFLOW_GRAPH_GRAPH6_H_

#include <string>
#include <string_view>
#include <vector>

#include "graph/multigraph.h"

namespace mcflow {

// Decodes one graph6 line (simple graphs only). An optional ">>graph6<<"
// header and trailing whitespace are accepted. Edges come out in the
// format's bit order: for j = 1..n-1, for i = 0..j-1, edge (i, j).
// Errors name the byte offset of the offending character.
MultiGraph ParseGraph6(std::string_view line);

// Encodes a simple graph. Fails with kContract on loops or parallel edges.
std::string WriteGraph6(const MultiGraph& graph);

// One graph per non-empty line.
std::vector<MultiGraph> ParseGraph6File(std::string_view text);

}  // namespace mcflow

#endif  // MCFLOW_GRAPH_GRAPH6_H_
