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

#ifndef MCFLOW_GRAPH_NAMED_GRAPHS_H_
#define MCFLOW_GRAPH_NAMED_GRAPHS_H_

#include <string>
#include <string_view>
#include <vector>

#include "graph/multigraph.h"

namespace mcflow {

// Built-in graphs: "petersen", "k4", "k33", "prism", "blanusa1",
// "blanusa2", "flower_j5". Each is checked on construction against its
// known order, regularity, bridgelessness, girth and colourability class.
MultiGraph NamedGraph(std::string_view name);

bool IsNamedGraph(std::string_view name);
const std::vector<std::string>& NamedGraphNames();

}  // namespace mcflow

#endif  // MCFLOW_GRAPH_NAMED_GRAPHS_H_
