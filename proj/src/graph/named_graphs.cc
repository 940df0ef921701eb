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

#include "graph/named_graphs.h"

#include <utility>

#include "common/error.h"
#include "graph/structure.h"

namespace mcflow {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct Spec {
  std::string name;
  int order;
  int girth;
  bool colourable;
  EdgeList edges;
};

EdgeList PetersenEdges() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  return edges;
}

// Blanusa snarks: the two dot products of two Petersen graphs with girth
// 5. blanusa1 has automorphism group order 8, blanusa2 order 4.
const EdgeList kBlanusa1 = {
    {0, 4},   {0, 5},   {0, 12},  {1, 2},   {1, 6},   {1, 13},  {2, 3},
    {2, 7},   {3, 4},   {3, 10},  {4, 9},   {5, 7},   {5, 8},   {6, 8},
    {6, 9},   {7, 9},   {8, 14},  {10, 11}, {10, 15}, {11, 12}, {11, 16},
    {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}};
const EdgeList kBlanusa2 = {
    {0, 4},   {0, 5},   {0, 12},  {1, 2},   {1, 6},   {1, 13},  {2, 7},
    {2, 10},  {3, 4},   {3, 8},   {3, 14},  {4, 9},   {5, 7},   {5, 8},
    {6, 8},   {6, 9},   {7, 9},   {10, 11}, {10, 15}, {11, 12}, {11, 16},
    {12, 17}, {13, 15}, {13, 16}, {14, 16}, {14, 17}, {15, 17}};

// Flower snark J5 with a_i = 4i, b_i = 4i+1, c_i = 4i+2, d_i = 4i+3.
EdgeList FlowerJ5Edges() {
  constexpr int k = 5;
  EdgeList edges;
  for (int i = 0; i < k; ++i) {
    const int a = 4 * i;
    edges.emplace_back(a, a + 1);
    edges.emplace_back(a, a + 2);
    edges.emplace_back(a, a + 3);
    edges.emplace_back(a + 1, 4 * ((i + 1) % k) + 1);
  }
  for (int i = 0; i + 1 < k; ++i) {
    edges.emplace_back(4 * i + 2, 4 * (i + 1) + 2);
    edges.emplace_back(4 * i + 3, 4 * (i + 1) + 3);
  }
  edges.emplace_back(4 * (k - 1) + 2, 3);
  edges.emplace_back(4 * (k - 1) + 3, 2);
  return edges;
}

const std::vector<Spec>& Specs() {
  static const std::vector<Spec> specs = {
      {"petersen", 10, 5, false, PetersenEdges()},
      {"k4", 4, 3, true, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"k33",
       6,
       4,
       true,
       {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
        {2, 5}}},
      {"prism",
       6,
       3,
       true,
       {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4},
        {2, 5}}},
      {"blanusa1", 18, 5, false, kBlanusa1},
      {"blanusa2", 18, 5, false, kBlanusa2},
      {"flower_j5", 20, 5, false, FlowerJ5Edges()},
  };
  return specs;
}

MultiGraph BuildChecked(const Spec& spec) {
  MultiGraph graph(spec.order, spec.edges);
  auto check = [&spec](bool ok, const char* what) {
    if (!ok) {
      Fail(ErrorCode::kInternal,
           "built-in graph '" + spec.name + "' failed validation: " + what);
    }
  };
  check(graph.vertex_count() == spec.order, "order");
  check(graph.IsCubic(), "3-regularity");
  check(graph.IsSimple(), "simplicity");
  check(FindBridges(graph).empty() && IsConnected(graph), "bridgelessness");
  check(Girth(graph) == spec.girth, "girth");
  check(ThreeEdgeColouring(graph).has_value() == spec.colourable,
        "colourability class");
  return graph;
}

}  // namespace

const std::vector<std::string>& NamedGraphNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Spec& spec : Specs()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

bool IsNamedGraph(std::string_view name) {
  for (const Spec& spec : Specs()) {
    if (spec.name == name) return true;
  }
  return false;
}

MultiGraph NamedGraph(std::string_view name) {
  for (const Spec& spec : Specs()) {
    if (spec.name == name) return BuildChecked(spec);
  }
  std::string supported;
  for (const std::string& n : NamedGraphNames()) {
    supported += supported.empty() ? n : ", " + n;
  }
  Fail(ErrorCode::kContract, "unknown graph '" + std::string(name) +
                                 "'; supported: " + supported);
}

}  // namespace mcflow
