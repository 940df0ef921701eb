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

#include "common/error.h"
#include "doctest.h"
#include "graph/named_graphs.h"
#include "graph/structure.h"
#include "search/circulation.h"
#include "search/flow_search.h"
#include "search/label_search.h"
#include "support/test_support.h"

using namespace mcflow;
using mcflow_test::LoadCorpus;
using mcflow_test::ToPlain;

namespace {

Rational Q(int64_t p, int64_t q = 1) { return MakeRational(p, q); }

bool AllHalfIntegral(const FlowAssignment& f) {
  bool some_half = false;
  for (const FlowVector& v : f.values()) {
    for (const Rational& x : v) {
      if (x.get_den() == 2) some_half = true;
      if (x.get_den() != 1 && x.get_den() != 2) return false;
    }
  }
  return some_half;
}

}  // namespace

TEST_SUITE("flow-search") {

TEST_CASE("circulations respect bounds") {
  const MultiGraph k4 = NamedGraph("k4");
  CirculationSolver solver(k4);
  std::vector<int64_t> lo(6, 1), hi(6, 1), flow;
  // All edges forced to +1 along i < j cannot conserve at vertex 0.
  CHECK(!solver.Solve(lo, hi, &flow));
  std::fill(lo.begin(), lo.end(), -2);
  std::fill(hi.begin(), hi.end(), 2);
  lo[0] = 1;
  REQUIRE(solver.Solve(lo, hi, &flow));
  CHECK(flow[0] >= 1);
  std::vector<int64_t> values(flow.begin(), flow.end());
  for (int v = 0; v < 4; ++v) CHECK(Boundary(k4, values, v) == 0);
}

TEST_CASE("decisions on the named graphs") {
  const MultiGraph k4 = NamedGraph("k4");
  const MultiGraph petersen = NamedGraph("petersen");
  Decision d = DecideChnzf(k4, 2, 1, 2);
  REQUIRE(d.found());
  CHECK(Verify(*d.witness).valid());
  d = DecideChnzf(petersen, 5, 2, 2);
  REQUIRE(d.found());
  CHECK(Verify(*d.witness).valid());
  CHECK(!DecideChnzf(petersen, 7, 3, 2).found());
  CHECK(DecideChnzf(petersen, 7, 3, 2).outcome == SearchOutcome::kInfeasible);
  d = DecideChnzf(petersen, 5, 1, 1);
  REQUIRE(d.found());
  CHECK(Verify(*d.witness).valid());
  CHECK(!DecideChnzf(petersen, 9, 2, 1).found());
  // Non-reduced input is reduced first.
  CHECK(DecideChnzf(petersen, 10, 4, 2).found());
}

TEST_CASE("Manhattan decisions") {
  const Decision k4 = DecideMnzf2d(NamedGraph("k4"), 2, 1);
  REQUIRE(k4.found());
  CHECK(k4.witness->norm() == NormKind::kManhattan);
  CHECK(Verify(*k4.witness).valid());
  CHECK(AllHalfIntegral(*k4.witness));
  const Decision p = DecideMnzf2d(NamedGraph("petersen"), 5, 2);
  REQUIRE(p.found());
  CHECK(Verify(*p.witness).valid());
  for (const FlowVector& v : p.witness->values()) {
    const Rational n = Norm(v, NormKind::kManhattan);
    CHECK(n >= 1);
    CHECK(n <= Q(3, 2));
  }
}

TEST_CASE("bridges and bad arguments") {
  const MultiGraph bridged(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  for (const auto& call : std::vector<std::function<void()>>{
           [&] { DecideChnzf(bridged, 5, 2, 2); },
           [&] { DecideMnzf2d(bridged, 3, 1); },
           [&] { FlowNumber(bridged, 2, NormKind::kChebyshev); }}) {
    try {
      call();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNoFlowPossible);
    }
  }
  const MultiGraph k4 = NamedGraph("k4");
  CHECK_THROWS_AS(DecideChnzf(k4, 1, 1, 2), Error);
  CHECK_THROWS_AS(DecideChnzf(k4, 3, 1, 0), Error);
  try {
    FlowNumber(k4, 3, NormKind::kManhattan);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupported);
  }
}

TEST_CASE("Farey candidates") {
  const std::vector<Rational> c = FareyCandidates(2, 3, 3);
  CHECK(c == std::vector<Rational>{Q(2), Q(7, 3), Q(5, 2), Q(8, 3), Q(3)});
  for (size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1] < c[i]);
  CHECK(FareyCandidates(2, 2, 5) == std::vector<Rational>{Q(2)});
}

TEST_CASE("flow numbers of the named graphs") {
  FlowNumberResult r = FlowNumber(NamedGraph("petersen"), 2, NormKind::kChebyshev, 4);
  CHECK(r.exact());
  CHECK(r.value == Q(5, 2));
  REQUIRE(r.witness.has_value());
  CHECK(Verify(*r.witness).valid());
  r = FlowNumber(NamedGraph("k4"), 2, NormKind::kChebyshev, 1);
  CHECK(r.exact());
  CHECK(r.value == 2);
  r = FlowNumber(NamedGraph("blanusa1"), 2, NormKind::kChebyshev, 4);
  CHECK(r.exact());
  CHECK(r.value == Q(9, 4));
  r = FlowNumber(NamedGraph("petersen"), 2, NormKind::kManhattan, 4);
  CHECK(r.value == Q(5, 2));
  CHECK(r.witness->norm() == NormKind::kManhattan);
  CHECK(Verify(*r.witness).valid());
  r = FlowNumber(NamedGraph("petersen"), 3, NormKind::kChebyshev, 4);
  CHECK(r.value == 2);
  r = FlowNumber(NamedGraph("k4"), 1, NormKind::kChebyshev, 4);
  CHECK(r.value == 4);
}

TEST_CASE("qmax bounds what exact means") {
  // With denominators up to 2, 9/4 is not a candidate for Blanusa.
  const FlowNumberResult r =
      FlowNumber(NamedGraph("blanusa1"), 2, NormKind::kChebyshev, 2);
  CHECK(r.exact());
  CHECK(r.value == Q(5, 2));
  CHECK(!r.caveat.empty());
}

TEST_CASE("a tiny budget yields an honest interval") {
  SearchOptions options;
  options.node_budget = 1;
  const FlowNumberResult r =
      FlowNumber(NamedGraph("blanusa1"), 2, NormKind::kChebyshev, 4, options);
  CHECK(!r.exact());
  CHECK(r.status == FlowNumberStatus::kInterval);
  CHECK(r.lo <= Q(9, 4));
  CHECK(r.hi >= Q(9, 4));
  if (r.witness) {
    CHECK(r.witness->r() == r.hi);
    CHECK(Verify(*r.witness).valid());
  }
  const Decision d = DecideChnzf(NamedGraph("blanusa1"), 2, 1, 2, options);
  CHECK(d.outcome == SearchOutcome::kBudgetExhausted);
}

TEST_CASE("every witness verifies and the (2,2) decision matches colouring") {
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    const Decision d = DecideChnzf(g, 2, 1, 2);
    CHECK(d.found() == oracle::Colourable(ToPlain(g)));
    if (d.found()) CHECK(Verify(*d.witness).valid());
  }
}

TEST_CASE("Manhattan and Chebyshev flow numbers agree on the small corpus") {
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 10) continue;
    const FlowNumberResult c = FlowNumber(g, 2, NormKind::kChebyshev, 3);
    const FlowNumberResult m = FlowNumber(g, 2, NormKind::kManhattan, 3);
    CHECK(c.value == m.value);
    CHECK(Verify(*m.witness).valid());
  }
}

TEST_CASE("pruned search equals unpruned enumeration on small graphs") {
  const std::vector<std::pair<int64_t, int64_t>> windows = {
      {2, 1}, {9, 4}, {7, 3}, {5, 2}, {3, 1}};
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 8) continue;
    for (auto [p, q] : windows) {
      for (int d : {1, 2}) {
        CHECK(DecideChnzf(g, p, q, d).found() ==
              oracle::IntegerWindowFeasible(ToPlain(g), p, q, d));
      }
    }
  }
}

TEST_CASE("label search honours needs_cover") {
  const MultiGraph k4 = NamedGraph("k4");
  LabelSearchProblem problem;
  problem.coordinates = {CoordinateSpec{1, 1, 0}};
  problem.needs_cover.assign(6, false);
  problem.needs_cover[0] = true;
  const LabelSearchResult r = RunLabelSearch(k4, problem);
  REQUIRE(r.outcome == SearchOutcome::kFound);
  CHECK(r.values[0][0] != 0);
  problem.needs_cover.assign(6, true);
  CHECK(RunLabelSearch(k4, problem).outcome == SearchOutcome::kInfeasible);
}

}  // TEST_SUITE
