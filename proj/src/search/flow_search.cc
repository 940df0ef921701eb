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

#include "search/flow_search.h"

#include <algorithm>
#include <numeric>

#include "common/error.h"
#include "graph/structure.h"

namespace mcflow {
namespace {

void RequireBridgeless(const MultiGraph& graph) {
  const std::vector<int> bridges = FindBridges(graph);
  if (!bridges.empty()) {
    Fail(ErrorCode::kNoFlowPossible,
         "graph has a bridge (edge " + std::to_string(bridges.front()) +
             "); no nowhere-zero flow exists");
  }
}

}  // namespace

Decision DecideChnzf(const MultiGraph& graph, int64_t p, int64_t q, int d,
                     const SearchOptions& options) {
  Require(p >= 1 && q >= 1, "p and q must be positive");
  Require(d >= 1, "dimension must be at least 1");
  Require(p >= 2 * q, "flow window needs p/q >= 2");
  RequireBridgeless(graph);
  const int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;

  LabelSearchProblem problem;
  problem.coordinates.assign(d, CoordinateSpec{p - q, q, 0});
  problem.node_budget = options.node_budget;
  const LabelSearchResult found = RunLabelSearch(graph, problem);

  Decision decision;
  decision.outcome = found.outcome;
  decision.nodes = found.nodes;
  if (found.outcome == SearchOutcome::kFound) {
    std::vector<FlowVector> values(graph.edge_count(), FlowVector(d));
    for (int e = 0; e < graph.edge_count(); ++e) {
      for (int i = 0; i < d; ++i) {
        values[e][i] = MakeRational(found.values[i][e], q);
      }
    }
    decision.witness.emplace(graph, d, NormKind::kChebyshev,
                             MakeRational(p, q), std::move(values));
  }
  return decision;
}

Decision DecideMnzf2d(const MultiGraph& graph, int64_t p, int64_t q,
                      const SearchOptions& options) {
  Decision decision = DecideChnzf(graph, p, q, 2, options);
  if (decision.witness) decision.witness = ChebToManh2d(*decision.witness);
  return decision;
}

std::vector<Rational> FareyCandidates(const Rational& lo, const Rational& hi,
                                      int qmax) {
  Require(qmax >= 1, "qmax must be at least 1");
  std::vector<Rational> out;
  for (int q = 1; q <= qmax; ++q) {
    const Rational scaled_lo = lo * q;
    const Rational scaled_hi = hi * q;
    mpz_class first;
    mpz_cdiv_q(first.get_mpz_t(), scaled_lo.get_num_mpz_t(),
               scaled_lo.get_den_mpz_t());
    mpz_class last;
    mpz_fdiv_q(last.get_mpz_t(), scaled_hi.get_num_mpz_t(),
               scaled_hi.get_den_mpz_t());
    for (mpz_class p = first; p <= last; ++p) {
      if (gcd(p, mpz_class(q)) != 1) continue;
      Rational r(p, mpz_class(q));
      r.canonicalize();
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational FlowNumberCeiling(int d) {
  if (d == 1) return 6;
  if (d == 2) return 3;
  return 2;
}

const char* FlowNumberStatusName(FlowNumberStatus status) {
  return status == FlowNumberStatus::kExact ? "exact" : "interval";
}

FlowNumberResult FlowNumber(const MultiGraph& graph, int d, NormKind norm,
                            int qmax, const SearchOptions& options) {
  Require(d >= 1, "dimension must be at least 1");
  Require(qmax >= 1, "qmax must be at least 1");
  if (norm == NormKind::kManhattan && d >= 3) {
    Fail(ErrorCode::kUnsupported,
         "no exact Manhattan procedure for d >= 3; use the cycle-cover "
         "constructions for upper bounds");
  }
  RequireBridgeless(graph);

  FlowNumberResult result;
  result.dimension = d;
  result.norm = norm;
  result.qmax = qmax;
  const std::vector<Rational> ladder =
      FareyCandidates(2, FlowNumberCeiling(d), qmax);

  auto decide = [&](const Rational& r) {
    int64_t p = 0, q = 0;
    ToInt64(r.get_num(), &p);
    ToInt64(r.get_den(), &q);
    Decision decision = DecideChnzf(graph, p, q, d, options);
    result.nodes += decision.nodes;
    result.decisions += 1;
    return decision;
  };

  // Invariant: ladder[low] refuted (or low = -1), ladder[high] feasible by
  // witness or, before it was tested, by the ceiling theorem.
  int low = -1;
  int high = static_cast<int>(ladder.size()) - 1;
  std::optional<FlowAssignment> witness;
  bool budget_hit = false;
  while (high - low > 1) {
    const int mid = low + (high - low) / 2;
    Decision decision = decide(ladder[mid]);
    if (decision.outcome == SearchOutcome::kFound) {
      high = mid;
      witness = std::move(decision.witness);
    } else if (decision.outcome == SearchOutcome::kInfeasible) {
      low = mid;
    } else {
      budget_hit = true;
      break;
    }
  }
  if (!witness) {
    Decision decision = decide(ladder[high]);
    if (decision.outcome == SearchOutcome::kFound) {
      witness = std::move(decision.witness);
    } else if (decision.outcome == SearchOutcome::kBudgetExhausted) {
      budget_hit = true;
    } else {
      Fail(ErrorCode::kInternal, "no flow found at the ceiling " +
                                     ToDisplayString(ladder[high]) +
                                     "; this contradicts a known theorem");
    }
  }

  result.hi = ladder[high];
  result.value = ladder[high];
  if (low >= 0) {
    result.lo = ladder[low];
  } else {
    result.lo = 2;
    result.lo_inclusive = true;
  }
  const bool neighbours = high - low == 1;
  if (!budget_hit && neighbours && witness) {
    result.status = FlowNumberStatus::kExact;
    if (high > 0) {
      result.caveat = "exact relative to qmax=" + std::to_string(qmax) +
                      ": no candidate with a smaller denominator bound lies "
                      "between " +
                      ToDisplayString(result.lo) + " and " +
                      ToDisplayString(result.value);
    }
  } else {
    result.status = FlowNumberStatus::kInterval;
    result.caveat = budget_hit ? "node budget exhausted before the ladder "
                                 "was resolved"
                               : "unresolved";
  }
  if (witness) {
    if (norm == NormKind::kManhattan && d == 2) {
      witness = ChebToManh2d(*witness);
    } else if (norm == NormKind::kManhattan) {
      witness = FlowAssignment(witness->graph(), d, NormKind::kManhattan,
                               witness->r(), witness->values());
    }
    result.witness = std::move(witness);
  }
  return result;
}

}  // namespace mcflow
