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

#include "pairs/flow_pair.h"

#include <numeric>
#include <sstream>

#include "common/error.h"
#include "graph/structure.h"

namespace mcflow {
namespace {

void RequireBridgeless(const MultiGraph& graph) {
  const std::vector<int> bridges = FindBridges(graph);
  if (!bridges.empty()) {
    const Edge& e = graph.edge(bridges.front());
    Fail(ErrorCode::kNoFlowPossible,
         "graph has a bridge (edge " + std::to_string(bridges.front()) + ": " +
             std::to_string(e.tail) + "-" + std::to_string(e.head) + ")");
  }
}

struct BigSearch {
  bool found = false;
  bool exhausted = false;
  std::vector<int64_t> big;
};

// Integer flow with |big| <= p + q and |big| >= q on `needs`.
BigSearch SearchBig(const MultiGraph& graph, int64_t p, int64_t q,
                    const std::vector<bool>& needs, int64_t budget,
                    int64_t* nodes) {
  LabelSearchProblem problem;
  problem.coordinates = {CoordinateSpec{p + q, q, 0}};
  problem.needs_cover = needs;
  problem.node_budget = budget;
  // An empty needs_cover means "all edges"; keep the meaning explicit.
  bool any = false;
  for (bool b : needs) any = any || b;
  BigSearch out;
  if (!any) {
    out.found = true;
    out.big.assign(graph.edge_count(), 0);
    return out;
  }
  const LabelSearchResult r = RunLabelSearch(graph, problem);
  *nodes += r.nodes;
  out.found = r.outcome == SearchOutcome::kFound;
  out.exhausted = r.outcome == SearchOutcome::kBudgetExhausted;
  if (out.found) out.big = r.values[0];
  return out;
}

int64_t Remaining(int64_t budget, int64_t used) {
  if (budget == 0) return 0;
  return budget > used ? budget - used : -1;
}

}  // namespace

const char* PairMethodName(PairMethod method) {
  switch (method) {
    case PairMethod::kAuto: return "auto";
    case PairMethod::kGeneric: return "generic";
    case PairMethod::kMatching: return "matching";
  }
  return "?";
}

PairMethod ParsePairMethod(std::string_view name) {
  if (name == "auto") return PairMethod::kAuto;
  if (name == "generic") return PairMethod::kGeneric;
  if (name == "matching") return PairMethod::kMatching;
  Fail(ErrorCode::kContract, "unknown pair method '" + std::string(name) +
                                 "' (expected auto, generic or matching)");
}

PairSearchResult FindTFlowPair(const MultiGraph& graph, int64_t p, int64_t q,
                               int64_t node_budget, PairMethod method) {
  Require(p >= 1 && q >= 1, "flow pair needs p, q >= 1");
  const int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  Require(p <= q, "flow pair needs t = p/q <= 1");
  RequireBridgeless(graph);
  const int m = graph.edge_count();
  const bool cubic = graph.IsCubic() && graph.IsLoopless();
  if (method == PairMethod::kAuto) {
    method = cubic && p < q ? PairMethod::kMatching : PairMethod::kGeneric;
  }
  if (method == PairMethod::kMatching) {
    Require(cubic, "the matching method needs a loopless cubic graph");
  }
  PairSearchResult result;
  result.method = method;
  bool exhausted = false;

  auto try_support = [&](const std::vector<bool>& support) -> bool {
    ++result.supports_tried;
    const int64_t left = Remaining(node_budget, result.nodes);
    if (left < 0) {
      exhausted = true;
      return true;
    }
    std::vector<bool> needs(m);
    for (int e = 0; e < m; ++e) needs[e] = !support[e];
    BigSearch big = SearchBig(graph, p, q, needs, left, &result.nodes);
    if (big.exhausted) exhausted = true;
    if (!big.found) return false;
    const SignedEdgeMap orient = EulerOrientation(graph, support);
    FlowPair pair{p, q, std::vector<int>(orient.begin(), orient.end()),
                  std::move(big.big)};
    result.pair = std::move(pair);
    return true;
  };

  if (method == PairMethod::kMatching) {
    ForEachPerfectMatching(graph, [&](const std::vector<int>& matching) {
      std::vector<bool> support(m, true);
      for (int e : matching) support[e] = false;
      return !try_support(support);
    });
  } else {
    for (const EdgeBitset& element : CycleSpaceElements(graph)) {
      std::vector<bool> support(m);
      for (int e = 0; e < m; ++e) support[e] = element.test(e);
      if (try_support(support)) break;
    }
  }
  if (result.pair) {
    result.outcome = SearchOutcome::kFound;
    ValidatePair(graph, *result.pair);
  } else {
    result.outcome =
        exhausted ? SearchOutcome::kBudgetExhausted : SearchOutcome::kInfeasible;
  }
  return result;
}

void ValidatePair(const MultiGraph& graph, const FlowPair& pair) {
  const int m = graph.edge_count();
  Require(pair.p >= 1 && pair.q >= 1, "pair needs p, q >= 1");
  Require(static_cast<int>(pair.phi2.size()) == m &&
              static_cast<int>(pair.big.size()) == m,
          "pair has the wrong number of edges");
  for (int e = 0; e < m; ++e) {
    if (pair.phi2[e] < -1 || pair.phi2[e] > 1) {
      Fail(ErrorCode::kContract, "phi2 on edge " + std::to_string(e) +
                                     " is not in {-1, 0, 1}");
    }
    if (pair.big[e] < -(pair.p + pair.q) || pair.big[e] > pair.p + pair.q) {
      Fail(ErrorCode::kContract,
           "big flow on edge " + std::to_string(e) + " exceeds p + q");
    }
    if (pair.phi2[e] == 0 && std::abs(pair.big[e]) < pair.q) {
      Fail(ErrorCode::kContract, "edge " + std::to_string(e) +
                                     " has phi2 = 0 and |big| < q");
    }
  }
  const std::vector<int64_t> phi2(pair.phi2.begin(), pair.phi2.end());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (Boundary(graph, phi2, v) != 0) {
      Fail(ErrorCode::kContract,
           "phi2 is not conserved at vertex " + std::to_string(v));
    }
    if (Boundary(graph, pair.big, v) != 0) {
      Fail(ErrorCode::kContract,
           "big flow is not conserved at vertex " + std::to_string(v));
    }
  }
}

FlowAssignment ChnzfFromPair(const MultiGraph& graph, const FlowPair& pair) {
  ValidatePair(graph, pair);
  std::vector<FlowVector> values;
  for (int e = 0; e < graph.edge_count(); ++e) {
    values.push_back({Rational(pair.phi2[e]), MakeRational(pair.big[e], pair.q)});
  }
  return FlowAssignment(graph, 2, NormKind::kChebyshev,
                        2 + MakeRational(pair.p, pair.q), std::move(values));
}

FlowAssignment Nzf1dFromPair(const MultiGraph& graph, const FlowPair& pair) {
  ValidatePair(graph, pair);
  const Rational t = MakeRational(pair.p, pair.q);
  std::vector<FlowVector> values;
  for (int e = 0; e < graph.edge_count(); ++e) {
    Rational x = (2 + t) * pair.phi2[e] + MakeRational(pair.big[e], pair.q);
    values.push_back({x});
  }
  return FlowAssignment(graph, 1, NormKind::kChebyshev, 4 + 2 * t,
                        std::move(values));
}

bool CheckSupportTwoFactor(const MultiGraph& graph, const FlowPair& pair) {
  if (static_cast<int>(pair.phi2.size()) != graph.edge_count()) return false;
  std::vector<int> degree(graph.vertex_count(), 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (pair.phi2[e] == 0) continue;
    const Edge& edge = graph.edge(e);
    degree[edge.tail] += 1;
    degree[edge.head] += 1;
  }
  for (int d : degree) {
    if (d != 2) return false;
  }
  return true;
}

std::string WritePair(const MultiGraph& graph, const FlowPair& pair) {
  std::ostringstream out;
  out << "mcflow-pair 1\n"
      << "graph " << graph.Key() << "\n"
      << "p " << pair.p << "\n"
      << "q " << pair.q << "\n"
      << "edges " << graph.edge_count() << "\n";
  for (int e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    out << edge.tail << ' ' << edge.head << " : " << pair.phi2[e] << ' '
        << pair.big[e] << "\n";
  }
  return out.str();
}

FlowPair ParsePair(const MultiGraph& graph, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] != '#') return line;
    }
    Fail(ErrorCode::kParse, "pair file ends early after line " +
                                std::to_string(line_no));
  };
  auto expect_field = [&](const char* name) -> std::string {
    std::istringstream fields(next());
    std::string key, value;
    fields >> key >> value;
    if (key != name || value.empty()) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected '" + name + " <value>'");
    }
    return value;
  };
  if (next() != "mcflow-pair 1") {
    Fail(ErrorCode::kParse, "missing 'mcflow-pair 1' header");
  }
  const std::string key = expect_field("graph");
  if (key != graph.Key()) {
    Fail(ErrorCode::kParse, "pair file is for graph " + key + ", not " +
                                graph.Key());
  }
  FlowPair pair;
  try {
    pair.p = std::stoll(expect_field("p"));
    pair.q = std::stoll(expect_field("q"));
  } catch (const std::logic_error&) {
    Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                ": p and q must be integers");
  }
  const std::string edges = expect_field("edges");
  if (edges != std::to_string(graph.edge_count())) {
    Fail(ErrorCode::kParse, "pair file has " + edges + " edges, graph has " +
                                std::to_string(graph.edge_count()));
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    std::istringstream fields(next());
    int tail = -1, head = -1;
    std::string colon;
    int64_t phi2 = 0, big = 0;
    fields >> tail >> head >> colon >> phi2 >> big;
    const Edge& edge = graph.edge(e);
    if (!fields || colon != ":") {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected 'tail head : phi2 big'");
    }
    if (tail != edge.tail || head != edge.head) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": endpoints do not match edge " +
                                  std::to_string(e));
    }
    pair.phi2.push_back(static_cast<int>(phi2));
    pair.big.push_back(big);
  }
  return pair;
}

}  // namespace mcflow
