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

#ifndef MCFLOW_FLOW_FLOW_H_
#define MCFLOW_FLOW_FLOW_H_

#include <string>
#include <string_view>
#include <vector>

#include "common/rational.h"
#include "graph/multigraph.h"

namespace mcflow {

enum class NormKind { kManhattan, kChebyshev };

const char* NormKindName(NormKind kind);
NormKind ParseNormKind(std::string_view name);

using FlowVector = std::vector<Rational>;

// L1 sum or L-infinity max of absolute values, exactly.
Rational Norm(const FlowVector& v, NormKind kind);

// Edge -> d-dimensional vector relative to the canonical orientation, with
// the window 1 <= ||value|| <= r - 1 in the declared norm.
class FlowAssignment {
 public:
  FlowAssignment(MultiGraph graph, int dimension, NormKind norm, Rational r,
                 std::vector<FlowVector> values);

  const MultiGraph& graph() const { return graph_; }
  int dimension() const { return dimension_; }
  NormKind norm() const { return norm_; }
  const Rational& r() const { return r_; }
  Rational window_high() const { return r_ - 1; }
  const std::vector<FlowVector>& values() const { return values_; }
  const FlowVector& value(int edge) const { return values_[edge]; }

  // Same values under a different declared window.
  FlowAssignment WithWindow(const Rational& r) const;

 private:
  MultiGraph graph_;
  int dimension_;
  NormKind norm_;
  Rational r_;
  std::vector<FlowVector> values_;
};

struct ConservationViolation {
  int vertex;
  int coordinate;
  Rational imbalance;  // out minus in
};

struct WindowViolation {
  int edge;
  Rational norm;
};

struct VerificationReport {
  std::vector<ConservationViolation> conservation;
  std::vector<WindowViolation> window;

  bool valid() const { return conservation.empty() && window.empty(); }
  std::string ToText() const;
};

// Exhaustive check of conservation at every vertex/coordinate and of the
// norm window on every edge. `reversed`, when given, marks edges whose
// stored value is meant head->tail instead of tail->head.
VerificationReport Verify(const FlowAssignment& flow,
                          const std::vector<bool>* reversed = nullptr);

// lambda(x, y) = ((x - y)/2, (x + y)/2): Chebyshev ball -> Manhattan ball.
FlowVector ChebToManhVector(const FlowVector& v);
// Inverse of lambda, (x, y) -> (x + y, y - x): Manhattan ball -> Chebyshev ball.
FlowVector ManhToChebVector(const FlowVector& v);

// Both preserve the window r and require d = 2.
FlowAssignment ChebToManh2d(const FlowAssignment& flow);
FlowAssignment ManhToCheb2d(const FlowAssignment& flow);

// Multiplies every value by s > 0; the window becomes [1, s (r - 1)].
FlowAssignment Scale(const FlowAssignment& flow, const Rational& s);

// Coordinatewise sum; graphs, dimensions and norms must match. The result
// keeps the first operand's window.
FlowAssignment Add(const FlowAssignment& a, const FlowAssignment& b);

}  // namespace mcflow

#endif  // MCFLOW_FLOW_FLOW_H_
