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
#include "common/rational.h"
#include "doctest.h"
#include "flow/flow.h"
#include "flow/flow_io.h"
#include "graph/named_graphs.h"
#include "search/flow_search.h"

using namespace mcflow;

namespace {

Rational Q(int64_t p, int64_t q = 1) { return MakeRational(p, q); }

}  // namespace

TEST_SUITE("flow-model") {

TEST_CASE("rationals parse and print") {
  CHECK(ParseRational("5/2") == Q(5, 2));
  CHECK(ParseRational("-6/4") == Q(-3, 2));
  CHECK(ParseRational("7") == Q(7));
  CHECK(ToFractionString(Q(3)) == "3/1");
  CHECK(ToDisplayString(Q(3)) == "3");
  CHECK(ToDisplayString(Q(-9, 4)) == "-9/4");
  for (const char* bad : {"", "1/0", "a/2", "1//2", "1/2/3"}) {
    CHECK_THROWS_AS(ParseRational(bad), Error);
  }
}

TEST_CASE("norms") {
  CHECK(Norm({Q(3, 8), Q(3, 8), Q(-1, 4)}, NormKind::kManhattan) == 1);
  CHECK(Norm({Q(1), Q(1)}, NormKind::kChebyshev) == 1);
  CHECK(Norm({Q(1, 2), Q(-1, 2)}, NormKind::kManhattan) == 1);
  CHECK(Norm({Q(-2), Q(1, 3)}, NormKind::kChebyshev) == 2);
}

TEST_CASE("verification counts every violation") {
  const MultiGraph k4 = NamedGraph("k4");
  const FlowAssignment zero(k4, 2, NormKind::kChebyshev, 2,
                            std::vector<FlowVector>(6, FlowVector{0, 0}));
  const VerificationReport report = Verify(zero);
  CHECK(report.window.size() == 6);
  CHECK(report.conservation.empty());
  CHECK(!report.valid());

  const Decision d = DecideChnzf(k4, 2, 1, 2);
  REQUIRE(d.witness.has_value());
  CHECK(Verify(*d.witness).valid());
  std::vector<FlowVector> values = d.witness->values();
  values[0][0] += 1;
  const FlowAssignment bumped(k4, 2, NormKind::kChebyshev, 3, values);
  const VerificationReport broken = Verify(bumped);
  CHECK(broken.conservation.size() == 2);
  CHECK(broken.conservation[0].vertex == k4.edge(0).tail);
  CHECK(broken.conservation[1].vertex == k4.edge(0).head);
}

TEST_CASE("reversed edges flip the stored sign") {
  const MultiGraph k4 = NamedGraph("k4");
  const Decision d = DecideChnzf(k4, 2, 1, 2);
  REQUIRE(d.witness.has_value());
  std::vector<FlowVector> values = d.witness->values();
  std::vector<bool> reversed(6, false);
  reversed[2] = true;
  for (Rational& x : values[2]) x = -x;
  const FlowAssignment flipped(k4, 2, NormKind::kChebyshev, 2, values);
  CHECK(Verify(flipped, &reversed).valid());
  CHECK(!Verify(flipped).valid());
}

TEST_CASE("Chebyshev and Manhattan transforms") {
  CHECK(ChebToManhVector({Q(1), Q(1)}) == FlowVector{Q(0), Q(1)});
  CHECK(ChebToManhVector({Q(1), Q(0)}) == FlowVector{Q(1, 2), Q(1, 2)});
  CHECK(ManhToChebVector({Q(1, 2), Q(1, 2)}) == FlowVector{Q(1), Q(0)});
  CHECK(ManhToChebVector({Q(2, 3), Q(-1, 3)}) == FlowVector{Q(1, 3), Q(-1)});
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      const FlowVector v{Q(a, 3), Q(b, 2)};
      CHECK(ManhToChebVector(ChebToManhVector(v)) == v);
      CHECK(ChebToManhVector(ManhToChebVector(v)) == v);
      CHECK(Norm(ChebToManhVector(v), NormKind::kManhattan) ==
            Norm(v, NormKind::kChebyshev));
    }
  }
}

TEST_CASE("the Petersen (5/2,2)-ChNZF transforms to a valid MNZF") {
  const MultiGraph petersen = NamedGraph("petersen");
  const Decision d = DecideChnzf(petersen, 5, 2, 2);
  REQUIRE(d.witness.has_value());
  CHECK(Verify(*d.witness).valid());
  const FlowAssignment manhattan = ChebToManh2d(*d.witness);
  CHECK(manhattan.norm() == NormKind::kManhattan);
  CHECK(manhattan.r() == Q(5, 2));
  CHECK(Verify(manhattan).valid());
  CHECK(ManhToCheb2d(manhattan).values() == d.witness->values());
  CHECK_THROWS_AS(ChebToManh2d(manhattan), Error);
}

TEST_CASE("scale and add") {
  const MultiGraph k4 = NamedGraph("k4");
  const Decision d = DecideChnzf(k4, 2, 1, 2);
  REQUIRE(d.witness.has_value());
  const FlowAssignment doubled = Scale(*d.witness, 2);
  CHECK(doubled.r() == 3);
  CHECK(Verify(Add(*d.witness, *d.witness).WithWindow(3)).valid());
  CHECK(Add(*d.witness, *d.witness).values() == doubled.values());
  CHECK_THROWS_AS(Scale(*d.witness, 0), Error);
}

TEST_CASE("flow files round trip and are checked against the graph") {
  const MultiGraph petersen = NamedGraph("petersen");
  const Decision d = DecideChnzf(petersen, 5, 2, 2);
  REQUIRE(d.witness.has_value());
  const std::string text = WriteFlow(*d.witness);
  const FlowAssignment back = ParseFlow(petersen, text);
  CHECK(back.values() == d.witness->values());
  CHECK(back.r() == d.witness->r());
  CHECK(WriteFlow(back) == text);
  try {
    ParseFlow(NamedGraph("k4"), text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
  CHECK_THROWS_AS(ParseFlow(petersen, "mcflow-flow 1\n"), Error);
}

TEST_CASE("assignment shape is validated") {
  const MultiGraph k4 = NamedGraph("k4");
  CHECK_THROWS_AS(FlowAssignment(k4, 2, NormKind::kChebyshev, 2,
                                 std::vector<FlowVector>(5, FlowVector{0, 0})),
                  Error);
  CHECK_THROWS_AS(FlowAssignment(k4, 2, NormKind::kChebyshev, 2,
                                 std::vector<FlowVector>(6, FlowVector{0})),
                  Error);
}

}  // TEST_SUITE
