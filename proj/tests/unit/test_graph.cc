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

#include <functional>
#include <set>

#include "common/error.h"
#include "doctest.h"
#include "graph/graph6.h"
#include "graph/multigraph.h"
#include "graph/named_graphs.h"
#include "graph/structure.h"
#include "support/test_support.h"

using namespace mcflow;
using mcflow_test::LoadCorpus;
using mcflow_test::ToPlain;

namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternal;
}

MultiGraph Path3() { return MultiGraph(3, {{0, 1}, {1, 2}}); }

MultiGraph TriangleWithPendant() {
  return MultiGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("graph6 decodes K4 and the one-vertex graph") {
  const MultiGraph k4 = ParseGraph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.IsCubic());
  const MultiGraph one = ParseGraph6("@");
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(ParseGraph6(">>graph6<<C~") == k4);
}

TEST_CASE("graph6 encodes the built-in Petersen graph like networkx") {
  const MultiGraph petersen = NamedGraph("petersen");
  CHECK(WriteGraph6(petersen) == "IheA@GUAo");
  const MultiGraph decoded = ParseGraph6("IheA@GUAo");
  CHECK(decoded.vertex_count() == 10);
  CHECK(decoded.edge_count() == 15);
  CHECK(decoded.IsCubic());
  CHECK(WriteGraph6(decoded) == "IheA@GUAo");
}

TEST_CASE("graph6 round trip over the corpus") {
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    CHECK(ParseGraph6(WriteGraph6(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed lines") {
  CHECK(CodeOf([] { ParseGraph6(""); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { ParseGraph6("C"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { ParseGraph6("C~~"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { ParseGraph6("C\x7f"); }) == ErrorCode::kParse);
  // K2 is "A_"; "A`" sets a padding bit.
  CHECK(ParseGraph6("A_").edge_count() == 1);
  CHECK(CodeOf([] { ParseGraph6("A`"); }) == ErrorCode::kParse);
}

TEST_CASE("graph6 writer refuses multigraphs") {
  CHECK(CodeOf([] { WriteGraph6(MultiGraph(2, {{0, 1}, {0, 1}})); }) ==
        ErrorCode::kContract);
}

TEST_CASE("edge lists") {
  const MultiGraph g = ParseEdgeList("# theta graph\n2 3\n0 1\n1 0\n0 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.HasParallelEdges());
  CHECK(ParseEdgeList(WriteEdgeList(g)) == g);
  CHECK(CodeOf([] { ParseEdgeList("2 1\n0 2\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { ParseEdgeList("2 2\n0 1\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { ParseEdgeList("x\n"); }) == ErrorCode::kParse);
}

TEST_CASE("loops count twice toward the degree") {
  const MultiGraph g(1, {{0, 0}});
  CHECK(g.degree(0) == 2);
  CHECK(!g.IsLoopless());
  CHECK(g.incident(0).size() == 1);
}

TEST_CASE("graph keys are stable and separate graphs") {
  const MultiGraph k4 = NamedGraph("k4");
  CHECK(k4.Key() == ParseGraph6("C~").Key());
  CHECK(k4.Key().size() == 16);
  std::set<std::string> keys;
  const auto corpus = LoadCorpus("cubic_bridgeless.g6");
  for (const MultiGraph& g : corpus) keys.insert(g.Key());
  CHECK(keys.size() == corpus.size());
}

TEST_CASE("named graphs") {
  const MultiGraph petersen = NamedGraph("petersen");
  CHECK(petersen.vertex_count() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(!ThreeEdgeColouring(petersen).has_value());
  CHECK(Girth(petersen) == 5);
  const MultiGraph k4 = NamedGraph("k4");
  CHECK(ThreeEdgeColouring(k4).has_value());
  for (const char* name : {"blanusa1", "blanusa2"}) {
    const MultiGraph b = NamedGraph(name);
    CHECK(b.vertex_count() == 18);
    CHECK(b.IsCubic());
    CHECK(!ThreeEdgeColouring(b).has_value());
    CHECK(Girth(b) == 5);
  }
  CHECK(!(NamedGraph("blanusa1") == NamedGraph("blanusa2")));
  const MultiGraph j5 = NamedGraph("flower_j5");
  CHECK(j5.vertex_count() == 20);
  CHECK(!oracle::Colourable(ToPlain(j5)));
  CHECK(CodeOf([] { NamedGraph("dodecahedron"); }) == ErrorCode::kContract);
}

TEST_CASE("bridges") {
  CHECK(FindBridges(Path3()) == std::vector<int>{0, 1});
  CHECK(FindBridges(NamedGraph("petersen")).empty());
  CHECK(FindBridges(TriangleWithPendant()) == std::vector<int>{3});
  // A parallel pair is not a bridge.
  CHECK(FindBridges(MultiGraph(2, {{0, 1}, {0, 1}})).empty());
}

TEST_CASE("bridges agree with the deletion oracle") {
  for (const char* file : {"bridged.g6", "cubic_bridgeless.g6"}) {
    for (const MultiGraph& g : LoadCorpus(file)) {
      CHECK(FindBridges(g) == oracle::Bridges(ToPlain(g)));
    }
  }
}

TEST_CASE("three-edge-colouring") {
  const MultiGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                           {2, 3}, {2, 4}, {2, 5}});
  auto colouring = ThreeEdgeColouring(k33);
  REQUIRE(colouring.has_value());
  CHECK(oracle::Colourable(ToPlain(k33)));
  // Proper: the three edges at each vertex get distinct colours.
  for (int v = 0; v < k33.vertex_count(); ++v) {
    std::set<int> seen;
    for (int e : k33.incident(v)) seen.insert((*colouring)[e]);
    CHECK(seen.size() == 3);
  }
  CHECK(!ThreeEdgeColouring(NamedGraph("petersen")).has_value());
}

TEST_CASE("colouring agrees with the brute-force oracle on the corpus") {
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    CHECK(ThreeEdgeColouring(g).has_value() == oracle::Colourable(ToPlain(g)));
  }
}

TEST_CASE("perfect matchings") {
  CHECK(PerfectMatchings(NamedGraph("k4")).size() == 3);
  CHECK(PerfectMatchings(NamedGraph("petersen")).size() == 6);
  CHECK(PerfectMatchings(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}})).empty());
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 12) continue;
    CHECK(static_cast<int64_t>(PerfectMatchings(g).size()) ==
          oracle::CountPerfectMatchings(ToPlain(g)));
  }
}

TEST_CASE("cycle basis and cycle space") {
  CHECK(CycleBasis(Path3()).empty());
  const MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto basis = CycleBasis(triangle);
  REQUIRE(basis.size() == 1);
  for (int e = 0; e < 3; ++e) CHECK(basis[0][e] != 0);
  CHECK(CycleBasis(NamedGraph("petersen")).size() == 6);
  for (const MultiGraph& g : LoadCorpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 10) continue;
    std::set<unsigned long> ours;
    for (const EdgeBitset& b : CycleSpaceElements(g)) ours.insert(b.to_ulong());
    const std::vector<uint32_t> even = oracle::EvenSubgraphs(ToPlain(g));
    CHECK(ours == std::set<unsigned long>(even.begin(), even.end()));
  }
}

TEST_CASE("fundamental cycles are balanced") {
  const MultiGraph g = NamedGraph("blanusa2");
  for (const SignedEdgeMap& c : CycleBasis(g)) {
    std::vector<int64_t> values(c.begin(), c.end());
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(Boundary(g, values, v) == 0);
  }
}

TEST_CASE("Euler orientation of an even subgraph") {
  const MultiGraph g = NamedGraph("petersen");
  for (const EdgeBitset& b : CycleSpaceElements(g)) {
    std::vector<bool> support(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) support[e] = b.test(e);
    const SignedEdgeMap orient = EulerOrientation(g, support);
    std::vector<int64_t> values(orient.begin(), orient.end());
    for (int e = 0; e < g.edge_count(); ++e) CHECK((orient[e] != 0) == support[e]);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(Boundary(g, values, v) == 0);
  }
  std::vector<bool> odd(g.edge_count(), false);
  odd[0] = true;
  CHECK(CodeOf([&] { EulerOrientation(g, odd); }) == ErrorCode::kContract);
}

TEST_CASE("connectivity") {
  CHECK(IsTwoConnected(NamedGraph("petersen")));
  CHECK(!IsTwoConnected(TriangleWithPendant()));
  CHECK(ArticulationPoints(TriangleWithPendant()) == std::vector<int>{2});
  CHECK(ConnectedComponentCount(MultiGraph(3, {{0, 1}})) == 2);
  for (const MultiGraph& g : LoadCorpus("bridged.g6")) {
    CHECK(IsTwoConnected(g) == oracle::TwoConnected(ToPlain(g)));
  }
}

}  // TEST_SUITE
