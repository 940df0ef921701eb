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

#include "bounds/bounds.h"

#include <sstream>
#include <vector>

#include "common/error.h"
#include "graph/structure.h"

namespace mcflow {
namespace {

std::string ResultCell(const FlowNumberResult& r) {
  if (r.exact()) return ToDisplayString(r.value);
  return std::string(r.lo_inclusive ? "[" : "(") + ToDisplayString(r.lo) +
         "," + ToDisplayString(r.hi) + "]";
}

}  // namespace

bool IsSnark(const MultiGraph& graph) {
  if (!graph.IsSimple() || !graph.IsCubic() || !IsTwoConnected(graph)) {
    return false;
  }
  return !ThreeEdgeColouring(graph).has_value();
}

Rational SnarkLowerBound(int n) {
  Require(n >= 10, "snark lower bound needs n >= 10, got " + std::to_string(n));
  return 2 + MakeRational(1, (n - 2) / 4);
}

const char* CoverAssumptionName(CoverAssumption assumption) {
  switch (assumption) {
    case CoverAssumption::kBridgeless: return "bridgeless";
    case CoverAssumption::k5Cdc: return "5cdc";
    case CoverAssumption::k5Ocdc: return "5ocdc";
    case CoverAssumption::k4Ocdc: return "4ocdc";
  }
  return "?";
}

CoverAssumption ParseCoverAssumption(std::string_view name) {
  for (CoverAssumption a :
       {CoverAssumption::kBridgeless, CoverAssumption::k5Cdc,
        CoverAssumption::k5Ocdc, CoverAssumption::k4Ocdc}) {
    if (name == CoverAssumptionName(a)) return a;
  }
  Fail(ErrorCode::kContract, "unknown assumption '" + std::string(name) +
                                 "' (expected bridgeless, 5cdc, 5ocdc, 4ocdc)");
}

Rational Table1Upper(int d, CoverAssumption assumption) {
  Require(d >= 2 && d <= 7, "table bounds cover 2 <= d <= 7, got d = " +
                                std::to_string(d));
  // Columns d = 2..7, as {numerator, denominator}.
  static const int kCells[4][6][2] = {
      {{3, 1}, {5, 2}, {5, 2}, {5, 2}, {7, 3}, {2, 1}},  // bridgeless
      {{3, 1}, {5, 2}, {2, 1}, {2, 1}, {2, 1}, {2, 1}},  // 5-CDC
      {{3, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}},  // 5-OCDC
      {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}},  // 4-OCDC
  };
  const int* cell = kCells[static_cast<int>(assumption)][d - 2];
  return MakeRational(cell[0], cell[1]);
}

RatioReport ComputeRatioReport(const MultiGraph& graph, int qmax,
                               const SearchOptions& options) {
  RatioReport report;
  report.phi1 = FlowNumber(graph, 1, NormKind::kChebyshev, qmax, options);
  report.phi2 = FlowNumber(graph, 2, NormKind::kChebyshev, qmax, options);
  if (report.phi1.exact() && report.phi2.exact()) {
    report.ratio = report.phi1.value / report.phi2.value;
  }
  return report;
}

BoundsRecord BuildBoundsRecord(const MultiGraph& graph, bool compute, int qmax,
                               const SearchOptions& options) {
  BoundsRecord record;
  record.key = graph.Key();
  record.n = graph.vertex_count();
  record.is_snark = IsSnark(graph);
  if (record.is_snark) record.lower_2inf = SnarkLowerBound(record.n);
  for (int d = 2; d <= 7; ++d) {
    record.upper[{d, CoverAssumption::kBridgeless}] =
        Table1Upper(d, CoverAssumption::kBridgeless);
  }
  if (compute) {
    record.computed = ComputeRatioReport(graph, qmax, options);
    const FlowNumberResult& phi2 = record.computed->phi2;
    if (phi2.exact()) {
      record.certified =
          phi2.value == 2 || (record.lower_2inf && phi2.value == *record.lower_2inf);
    }
  }
  return record;
}

std::string BoundsCsvHeader() {
  return "key,n,is_snark,lower_2inf,upper_2_bridgeless,phi2inf,phi2inf_status,"
         "phi1,phi1_status,ratio,certified";
}

std::string BoundsCsvRow(const BoundsRecord& r) {
  std::ostringstream out;
  out << r.key << ',' << r.n << ',' << (r.is_snark ? "true" : "false") << ','
      << (r.lower_2inf ? ToDisplayString(*r.lower_2inf) : "") << ','
      << ToDisplayString(r.upper.at({2, CoverAssumption::kBridgeless})) << ',';
  if (r.computed) {
    out << ResultCell(r.computed->phi2) << ','
        << FlowNumberStatusName(r.computed->phi2.status) << ','
        << ResultCell(r.computed->phi1) << ','
        << FlowNumberStatusName(r.computed->phi1.status) << ','
        << (r.computed->ratio ? ToDisplayString(*r.computed->ratio) : "");
  } else {
    out << ",,,,";
  }
  out << ',' << (r.certified ? "true" : "false");
  return out.str();
}

std::string BoundsText(const BoundsRecord& r) {
  std::ostringstream out;
  out << "graph " << r.key << "\n"
      << "order " << r.n << "\n"
      << "snark " << (r.is_snark ? "yes" : "no") << "\n";
  if (r.lower_2inf) {
    out << "lower Phi_2^inf >= " << ToDisplayString(*r.lower_2inf) << "\n";
  }
  for (const auto& [cell, value] : r.upper) {
    out << "upper Phi_" << cell.first << "^1 <= " << ToDisplayString(value)
        << " (" << CoverAssumptionName(cell.second) << ")\n";
  }
  if (r.computed) {
    out << "Phi_2^inf " << FlowNumberStatusName(r.computed->phi2.status) << ' '
        << ResultCell(r.computed->phi2) << " (qmax " << r.computed->phi2.qmax
        << ")\n"
        << "Phi_1 " << FlowNumberStatusName(r.computed->phi1.status) << ' '
        << ResultCell(r.computed->phi1) << " (qmax " << r.computed->phi1.qmax
        << ")\n";
    if (r.computed->ratio) {
      out << "ratio Phi_1/Phi_2^inf " << ToDisplayString(*r.computed->ratio)
          << "\n";
    }
    out << "certified " << (r.certified ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace mcflow
