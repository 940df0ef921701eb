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

#ifndef MCFLOW_SEARCH_FLOW_SEARCH_H_
#define MCFLOW_SEARCH_FLOW_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/rational.h"
#include "flow/flow.h"
#include "graph/multigraph.h"
#include "search/label_search.h"

namespace mcflow {

struct SearchOptions {
  // Per decision; 0 means unlimited.
  int64_t node_budget = 0;
};

struct Decision {
  SearchOutcome outcome = SearchOutcome::kInfeasible;
  std::optional<FlowAssignment> witness;
  int64_t nodes = 0;

  bool found() const { return outcome == SearchOutcome::kFound; }
};

// Is there a (p/q, d)-ChNZF? Searches the normal form: integer vectors k(e)
// with |k_i(e)| <= p - q and max_i |k_i(e)| >= q, conserved per
// coordinate; the witness has values k(e)/q. The normal form holds at every
// rational r = p/q, not only at the optimum: shifting a non-conforming
// coordinate around a circuit only needs 1 and p/q - 1 to be multiples of
// 1/q. The fraction is reduced first.
// Fails with kNoFlowPossible on a bridge, kContract when p/q < 2.
Decision DecideChnzf(const MultiGraph& graph, int64_t p, int64_t q, int d,
                     const SearchOptions& options = {});

// (p/q, 2)-MNZF via the Chebyshev decision and the linear map
// (x, y) -> ((x - y)/2, (x + y)/2); coordinates are multiples of 1/(2q).
Decision DecideMnzf2d(const MultiGraph& graph, int64_t p, int64_t q,
                      const SearchOptions& options = {});

// All reduced p/q with lo <= p/q <= hi and q <= qmax, ascending.
std::vector<Rational> FareyCandidates(const Rational& lo, const Rational& hi,
                                      int qmax);

// Upper end of the candidate ladder: 6 for d = 1, 3 for d = 2, 2 for d >= 3
// (Chebyshev).
Rational FlowNumberCeiling(int d);

enum class FlowNumberStatus { kExact, kInterval };

struct FlowNumberResult {
  int dimension = 0;
  NormKind norm = NormKind::kChebyshev;
  FlowNumberStatus status = FlowNumberStatus::kInterval;
  // Exact value, or the upper end of the bracket.
  Rational value;
  // Bracket lo: exclusive unless lo_inclusive (then nothing below lo was
  // refuted and lo is the trivial bound 2).
  Rational lo;
  bool lo_inclusive = false;
  Rational hi;
  std::optional<FlowAssignment> witness;
  int qmax = 0;
  int64_t nodes = 0;
  int decisions = 0;
  std::string caveat;

  bool exact() const { return status == FlowNumberStatus::kExact; }
};

// Smallest feasible candidate r = p/q in [2, ceiling] with q <= qmax. The
// ladder is bisected: feasibility is monotone in r, so one refuted Farey
// predecessor and one witness pin the value. "Exact" is relative to qmax;
// a bracket is returned when some decision runs out of budget.
// Supported: any d with Chebyshev, d = 2 Manhattan, d = 1 with either norm.
FlowNumberResult FlowNumber(const MultiGraph& graph, int d, NormKind norm,
                            int qmax = 6, const SearchOptions& options = {});

const char* FlowNumberStatusName(FlowNumberStatus status);

}  // namespace mcflow

#endif  // MCFLOW_SEARCH_FLOW_SEARCH_H_
