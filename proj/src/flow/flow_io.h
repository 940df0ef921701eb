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

#ifndef MCFLOW_FLOW_FLOW_IO_H_
#define MCFLOW_FLOW_FLOW_IO_H_

#include <string>
#include <string_view>

#include "flow/flow.h"

namespace mcflow {

// Flow file:
//
//   mcflow-flow 1
//   graph <key>
//   dim <d>
//   norm <manhattan|chebyshev>
//   r <p/q>
//   edges <m>
//   <tail> <head> : <c1> ... <cd>     (m lines, edge-id order)
//
// Rationals are always written "a/b". WriteFlow(ParseFlow(t)) == t for any
// file produced by WriteFlow.
std::string WriteFlow(const FlowAssignment& flow);

// The graph key and every edge endpoint pair must match `graph`.
FlowAssignment ParseFlow(const MultiGraph& graph, std::string_view text);

}  // namespace mcflow

#endif  // MCFLOW_FLOW_FLOW_IO_H_
