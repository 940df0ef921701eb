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

#include "covers/constructions.h"

#include <string>
#include <vector>

#include "common/error.h"

namespace mcflow {
namespace {

// Sum over cycles of sign * point[cycle].
std::vector<FlowVector> Superpose(const MultiGraph& graph,
                                  const CycleCover& cover,
                                  const std::vector<FlowVector>& points,
                                  int d) {
  std::vector<FlowVector> values(graph.edge_count(), FlowVector(d, 0));
  for (int c = 0; c < cover.size() && c < static_cast<int>(points.size());
       ++c) {
    for (int e = 0; e < graph.edge_count(); ++e) {
      const int s = cover.cycles[c][e];
      if (s == 0) continue;
      for (int i = 0; i < d; ++i) values[e][i] += s * points[c][i];
    }
  }
  return values;
}

void RequireShape(const CycleCover& cover, int cycles, int multiplicity,
                  bool oriented_double, const char* what) {
  if (cover.size() != cycles || cover.multiplicity != multiplicity ||
      cover.oriented_double != oriented_double) {
    Fail(ErrorCode::kContract,
         std::string("expected ") + what + ", got " +
             std::to_string(cover.size()) + " cycles with multiplicity " +
             std::to_string(cover.multiplicity) +
             (cover.oriented_double ? " (oriented)" : ""));
  }
}

Rational R(int64_t p, int64_t q) { return MakeRational(p, q); }

}  // namespace

FlowAssignment FlowFrom4Ocdc(const MultiGraph& graph, const CycleCover& cover) {
  RequireShape(cover, 4, 2, true, "a 4-OCDC");
  ValidateCover(graph, cover);
  const Rational h = R(1, 2);
  const std::vector<FlowVector> points = {
      {h, h}, {h, -h}, {-h, h}, {-h, -h}};
  return FlowAssignment(graph, 2, NormKind::kChebyshev, 2,
                        Superpose(graph, cover, points, 2));
}

FlowAssignment FlowFrom5Ocdc3d(const MultiGraph& graph,
                               const CycleCover& cover) {
  RequireShape(cover, 5, 2, true, "a 5-OCDC");
  ValidateCover(graph, cover);
  const Rational h = R(1, 2);
  const std::vector<FlowVector> points = {
      {h, 0, 0}, {-h, 0, 0}, {0, h, 0}, {0, -h, 0}, {0, 0, h}};
  return FlowAssignment(graph, 3, NormKind::kManhattan, 2,
                        Superpose(graph, cover, points, 3));
}

FlowAssignment FlowFrom3CoverQ(const MultiGraph& graph,
                               const CycleCover& cover) {
  if (cover.size() != 3) {
    Fail(ErrorCode::kContract, "expected 3 covering cycles, got " +
                                   std::to_string(cover.size()));
  }
  CycleCover covering = cover;
  covering.multiplicity = 0;
  covering.oriented_double = false;
  ValidateCover(graph, covering);
  const Rational a = R(3, 8), b = R(-1, 4);
  const std::vector<FlowVector> points = {{a, a, b}, {a, b, a}, {b, a, a}};
  return FlowAssignment(graph, 3, NormKind::kManhattan, R(5, 2),
                        Superpose(graph, cover, points, 3));
}

FlowAssignment FlowFromCoverBasis(const MultiGraph& graph,
                                  const CycleCover& cover, int n) {
  const int k = cover.multiplicity;
  const int m = cover.size();
  if (k <= 0) Fail(ErrorCode::kContract, "cover multiplicity must be positive");
  if (n < 0 || n >= k) {
    Fail(ErrorCode::kContract, "need 0 <= n < k, got n = " + std::to_string(n) +
                                   ", k = " + std::to_string(k));
  }
  if (m - n < 1) Fail(ErrorCode::kContract, "need m - n >= 1");
  ValidateCover(graph, cover);
  const int d = m - n;
  std::vector<FlowVector> points(d, FlowVector(d, 0));
  for (int i = 0; i < d; ++i) points[i][i] = R(1, k - n);
  return FlowAssignment(graph, d, NormKind::kManhattan, 1 + R(k, k - n),
                        Superpose(graph, cover, points, d));
}

FlowAssignment FlowFromCdcHadamard(const MultiGraph& graph,
                                   const CycleCover& cover,
                                   const HadamardMatrix& h) {
  const int m = cover.size();
  if (cover.multiplicity != 2) {
    Fail(ErrorCode::kContract, "expected a cycle double cover");
  }
  if (h.order != m - 1) {
    Fail(ErrorCode::kContract, "Hadamard order " + std::to_string(h.order) +
                                   " does not match m - 1 = " +
                                   std::to_string(m - 1));
  }
  if (!IsHadamard(h)) Fail(ErrorCode::kContract, "matrix is not Hadamard");
  ValidateCover(graph, cover);
  const int d = m - 1;
  std::vector<FlowVector> points(d, FlowVector(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) points[i][j] = R(h.rows[i][j], d);
  }
  return FlowAssignment(graph, d, NormKind::kManhattan, 2,
                        Superpose(graph, cover, points, d));
}

}  // namespace mcflow
