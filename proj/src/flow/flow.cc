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

#include "flow/flow.h"

#include <algorithm>

#include "common/error.h"

namespace mcflow {

const char* NormKindName(NormKind kind) {
  return kind == NormKind::kManhattan ? "manhattan" : "chebyshev";
}

NormKind ParseNormKind(std::string_view name) {
  if (name == "manhattan" || name == "l1") return NormKind::kManhattan;
  if (name == "chebyshev" || name == "linf") return NormKind::kChebyshev;
  Fail(ErrorCode::kUnsupported,
       "unknown norm '" + std::string(name) + "' (manhattan, chebyshev)");
}

Rational Norm(const FlowVector& v, NormKind kind) {
  Rational result = 0;
  for (const Rational& x : v) {
    if (kind == NormKind::kManhattan) {
      result += Abs(x);
    } else if (Abs(x) > result) {
      result = Abs(x);
    }
  }
  return result;
}

FlowAssignment::FlowAssignment(MultiGraph graph, int dimension, NormKind norm,
                               Rational r, std::vector<FlowVector> values)
    : graph_(std::move(graph)),
      dimension_(dimension),
      norm_(norm),
      r_(std::move(r)),
      values_(std::move(values)) {
  Require(dimension_ >= 1, "flow dimension must be at least 1");
  Require(static_cast<int>(values_.size()) == graph_.edge_count(),
          "flow must define a value on every edge");
  for (size_t e = 0; e < values_.size(); ++e) {
    if (static_cast<int>(values_[e].size()) != dimension_) {
      Fail(ErrorCode::kContract, "edge " + std::to_string(e) + " has a " +
                                     std::to_string(values_[e].size()) +
                                     "-vector in a " +
                                     std::to_string(dimension_) +
                                     "-dimensional flow");
    }
  }
}

FlowAssignment FlowAssignment::WithWindow(const Rational& r) const {
  return FlowAssignment(graph_, dimension_, norm_, r, values_);
}

std::string VerificationReport::ToText() const {
  std::string out = valid() ? "valid\n" : "invalid\n";
  for (const auto& c : conservation) {
    out += "conservation vertex " + std::to_string(c.vertex) + " coordinate " +
           std::to_string(c.coordinate) + " imbalance " +
           ToDisplayString(c.imbalance) + "\n";
  }
  for (const auto& w : window) {
    out += "window edge " + std::to_string(w.edge) + " norm " +
           ToDisplayString(w.norm) + "\n";
  }
  return out;
}

VerificationReport Verify(const FlowAssignment& flow,
                          const std::vector<bool>* reversed) {
  const MultiGraph& g = flow.graph();
  const int d = flow.dimension();
  VerificationReport report;
  std::vector<std::vector<Rational>> balance(g.vertex_count(),
                                             std::vector<Rational>(d, 0));
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.IsLoop()) continue;
    int from = e.tail, to = e.head;
    if (reversed != nullptr && (*reversed)[id]) std::swap(from, to);
    for (int i = 0; i < d; ++i) {
      balance[from][i] += flow.value(id)[i];
      balance[to][i] -= flow.value(id)[i];
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < d; ++i) {
      if (balance[v][i] != 0) report.conservation.push_back({v, i, balance[v][i]});
    }
  }
  const Rational high = flow.window_high();
  for (int id = 0; id < g.edge_count(); ++id) {
    const Rational n = Norm(flow.value(id), flow.norm());
    if (n < 1 || n > high) report.window.push_back({id, n});
  }
  return report;
}

FlowVector ChebToManhVector(const FlowVector& v) {
  Require(v.size() == 2, "Chebyshev/Manhattan transform needs d = 2");
  const Rational half(1, 2);
  return {half * (v[0] - v[1]), half * (v[0] + v[1])};
}

FlowVector ManhToChebVector(const FlowVector& v) {
  Require(v.size() == 2, "Chebyshev/Manhattan transform needs d = 2");
  return {v[0] + v[1], v[1] - v[0]};
}

namespace {

template <typename F>
FlowAssignment Transform2d(const FlowAssignment& flow, NormKind from,
                           NormKind to, F map) {
  Require(flow.dimension() == 2, "Chebyshev/Manhattan transform needs d = 2");
  Require(flow.norm() == from, std::string("transform expects a ") +
                                   NormKindName(from) + " flow");
  std::vector<FlowVector> values;
  values.reserve(flow.values().size());
  for (const FlowVector& v : flow.values()) values.push_back(map(v));
  return FlowAssignment(flow.graph(), 2, to, flow.r(), std::move(values));
}

}  // namespace

FlowAssignment ChebToManh2d(const FlowAssignment& flow) {
  return Transform2d(flow, NormKind::kChebyshev, NormKind::kManhattan,
                     ChebToManhVector);
}

FlowAssignment ManhToCheb2d(const FlowAssignment& flow) {
  return Transform2d(flow, NormKind::kManhattan, NormKind::kChebyshev,
                     ManhToChebVector);
}

FlowAssignment Scale(const FlowAssignment& flow, const Rational& s) {
  Require(s > 0, "scale factor must be positive");
  std::vector<FlowVector> values = flow.values();
  for (FlowVector& v : values) {
    for (Rational& x : v) x *= s;
  }
  return FlowAssignment(flow.graph(), flow.dimension(), flow.norm(),
                        1 + s * (flow.r() - 1), std::move(values));
}

FlowAssignment Add(const FlowAssignment& a, const FlowAssignment& b) {
  Require(a.graph() == b.graph() && a.dimension() == b.dimension() &&
              a.norm() == b.norm(),
          "flows to add must share graph, dimension and norm");
  std::vector<FlowVector> values = a.values();
  for (size_t e = 0; e < values.size(); ++e) {
    for (int i = 0; i < a.dimension(); ++i) values[e][i] += b.value(e)[i];
  }
  return FlowAssignment(a.graph(), a.dimension(), a.norm(), a.r(),
                        std::move(values));
}

}  // namespace mcflow
