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

#ifndef MCFLOW_BOUNDS_BOUNDS_H_
#define MCFLOW_BOUNDS_BOUNDS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "common/rational.h"
#include "graph/multigraph.h"
#include "search/flow_search.h"

namespace mcflow {

// Simple, cubic, 2-connected and not 3-edge-colourable.
bool IsSnark(const MultiGraph& graph);

// 2 + 1 / floor((n - 2) / 4), for n >= 10.
Rational SnarkLowerBound(int n);

enum class CoverAssumption { kBridgeless, k5Cdc, k5Ocdc, k4Ocdc };
const char* CoverAssumptionName(CoverAssumption assumption);
CoverAssumption ParseCoverAssumption(std::string_view name);

// Best known upper bound on the d-dimensional Manhattan flow number of a
// graph with the given cover, 2 <= d <= 7.
Rational Table1Upper(int d, CoverAssumption assumption);

struct RatioReport {
  FlowNumberResult phi1;
  FlowNumberResult phi2;
  std::optional<Rational> ratio;  // set when both values are exact
};

RatioReport ComputeRatioReport(const MultiGraph& graph, int qmax,
                               const SearchOptions& options = {});

struct BoundsRecord {
  std::string key;
  int n = 0;
  bool is_snark = false;
  std::optional<Rational> lower_2inf;
  std::map<std::pair<int, CoverAssumption>, Rational> upper;
  std::optional<RatioReport> computed;
  // Computed value confirmed optimal beyond the qmax ladder: it equals 2 or
  // the snark lower bound.
  bool certified = false;
};

// Upper bounds from the bridgeless row. With compute set, also runs the
// ratio report (bridgeless graphs only).
BoundsRecord BuildBoundsRecord(const MultiGraph& graph, bool compute, int qmax,
                               const SearchOptions& options = {});

std::string BoundsCsvHeader();
std::string BoundsCsvRow(const BoundsRecord& record);
std::string BoundsText(const BoundsRecord& record);

}  // namespace mcflow

#endif  // MCFLOW_BOUNDS_BOUNDS_H_
