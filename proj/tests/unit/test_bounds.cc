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
#include "common/error.h"
#include "doctest.h"
#include "graph/named_graphs.h"
#include "search/flow_search.h"
#include "support/test_support.h"

using namespace mcflow;
using mcflow_test::LoadCorpus;
using mcflow_test::ToPlain;

namespace {

Rational Q(int64_t p, int64_t q = 1) { return MakeRational(p, q); }

}  // namespace

TEST_SUITE("bounds-report") {

TEST_CASE("snark recognition") {
  CHECK(IsSnark(NamedGraph("petersen")));
  CHECK(IsSnark(NamedGraph("blanusa1")));
  CHECK(IsSnark(NamedGraph("flower_j5")));
  CHECK(!IsSnark(NamedGraph("k4")));
  CHECK(!IsSnark(NamedGraph("k33")));
  CHECK(oracle::Colourable(ToPlain(NamedGraph("k33"))));
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    const oracle::PlainGraph plain = ToPlain(g);
    CHECK(IsSnark(g) == oracle::Snark(plain));
  }
}

TEST_CASE("snark lower bound") {
  CHECK(SnarkLowerBound(10) == Q(5, 2));
  CHECK(SnarkLowerBound(18) == Q(9, 4));
  CHECK(SnarkLowerBound(20) == Q(9, 4));
  CHECK(SnarkLowerBound(26) == Q(13, 6));
  CHECK_THROWS_AS(SnarkLowerBound(8), Error);
}

TEST_CASE("table of upper bounds") {
  CHECK(Table1Upper(2, CoverAssumption::kBridgeless) == 3);
  CHECK(Table1Upper(6, CoverAssumption::kBridgeless) == Q(7, 3));
  CHECK(Table1Upper(3, CoverAssumption::k4Ocdc) == 2);
  CHECK(Table1Upper(3, CoverAssumption::k5Ocdc) == 2);
  CHECK(Table1Upper(3, CoverAssumption::kBridgeless) == Q(5, 2));
  CHECK(Table1Upper(7, CoverAssumption::kBridgeless) == 2);
  // Monotone: more structure, more dimensions, never a worse bound.
  for (int d = 2; d <= 7; ++d) {
    for (int a = 1; a < 4; ++a) {
      CHECK(Table1Upper(d, static_cast<CoverAssumption>(a)) <=
            Table1Upper(d, static_cast<CoverAssumption>(a - 1)));
    }
    if (d > 2) {
      CHECK(Table1Upper(d, CoverAssumption::kBridgeless) <=
            Table1Upper(d - 1, CoverAssumption::kBridgeless));
    }
  }
  CHECK_THROWS_AS(Table1Upper(1, CoverAssumption::kBridgeless), Error);
  CHECK_THROWS_AS(Table1Upper(8, CoverAssumption::kBridgeless), Error);
  CHECK(ParseCoverAssumption("5ocdc") == CoverAssumption::k5Ocdc);
  CHECK_THROWS_AS(ParseCoverAssumption("6cdc"), Error);
}

TEST_CASE("ratio reports") {
  RatioReport r = ComputeRatioReport(NamedGraph("petersen"), 3);
  CHECK(r.phi1.value == 5);
  CHECK(r.phi2.value == Q(5, 2));
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == 2);
  r = ComputeRatioReport(NamedGraph("k4"), 3);
  CHECK(r.phi1.value == 4);
  CHECK(r.phi2.value == 2);
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == 2);
}

TEST_CASE("bounds records") {
  const BoundsRecord p = BuildBoundsRecord(NamedGraph("petersen"), true, 3);
  CHECK(p.is_snark);
  REQUIRE(p.lower_2inf.has_value());
  CHECK(*p.lower_2inf == Q(5, 2));
  CHECK(p.certified);
  const std::string row = BoundsCsvRow(p);
  CHECK(row.find(",true,5/2,3,5/2,exact,5,exact,2,true") != std::string::npos);
  const BoundsRecord k = BuildBoundsRecord(NamedGraph("k4"), false, 3);
  CHECK(!k.is_snark);
  CHECK(!k.lower_2inf.has_value());
  CHECK(!k.computed.has_value());
  CHECK(k.upper.size() == 6);
  const int commas = static_cast<int>(std::count(row.begin(), row.end(), ','));
  const std::string header = BoundsCsvHeader();
  CHECK(commas == static_cast<int>(std::count(header.begin(), header.end(), ',')));
  CHECK(!BoundsText(p).empty());
}

TEST_CASE("corpus invariants") {
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 12) continue;
    const FlowNumberResult r = FlowNumber(g, 2, NormKind::kChebyshev, 4);
    REQUIRE(r.exact());
    CHECK(r.value <= 3);
    if (IsSnark(g)) {
      CHECK(r.value >= SnarkLowerBound(g.vertex_count()));
      CHECK(!DecideChnzf(g, 2, 1, 2).found());
    }
    CHECK(FlowNumber(g, 3, NormKind::kChebyshev, 2).value == 2);
  }
}

}  // TEST_SUITE
