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

#ifndef MCFLOW_MILP_LP_MODEL_H_
#define MCFLOW_MILP_LP_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common/rational.h"
#include "flow/flow.h"
#include "graph/multigraph.h"

namespace mcflow {

struct LinearTerm {
  Rational coef;
  std::string var;
  bool operator==(const LinearTerm&) const = default;
};

enum class Sense { kLe, kGe, kEq };

struct LpConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::kLe;
  Rational rhs;
  bool operator==(const LpConstraint&) const = default;
};

struct LpBound {
  std::string var;
  std::optional<Rational> lo;  // none = -infinity
  std::optional<Rational> hi;  // none = +infinity
  bool operator==(const LpBound&) const = default;
};

// Equality ignores comments.
struct LpModel {
  std::vector<std::string> comments;
  bool minimize = true;
  std::string objective_name = "obj";
  std::vector<LinearTerm> objective;
  std::vector<LpConstraint> constraints;
  std::vector<LpBound> bounds;
  std::vector<std::string> binaries;

  bool operator==(const LpModel& o) const {
    return minimize == o.minimize && objective_name == o.objective_name &&
           objective == o.objective && constraints == o.constraints &&
           bounds == o.bounds && binaries == o.binaries;
  }
};

// Mixed-integer model whose minimum z equals Phi_2^inf - 1. Needs a simple
// graph; a bridge fails with kNoFlowPossible. lambda bounds each coordinate
// and must be a terminating decimal.
LpModel BuildChebyshev2dModel(const MultiGraph& graph,
                              const Rational& lambda = 2);

// CPLEX LP text. Numbers are exact decimals.
std::string WriteLp(const LpModel& model);
LpModel ParseLp(std::string_view text);

using LpAssignment = std::map<std::string, Rational>;

// Names of violated constraints, bounds and integrality conditions. A
// variable missing from the assignment is a violation of its own.
std::vector<std::string> CheckAssignment(const LpModel& model,
                                         const LpAssignment& values);
Rational EvaluateObjective(const LpModel& model, const LpAssignment& values);

// Point of the model built by BuildChebyshev2dModel for a 2-D Chebyshev
// flow, with z = r - 1.
LpAssignment AssignmentFromFlow(const FlowAssignment& flow);

}  // namespace mcflow

#endif  // MCFLOW_MILP_LP_MODEL_H_
