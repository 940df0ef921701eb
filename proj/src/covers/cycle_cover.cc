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

#include "covers/cycle_cover.h"

#include <sstream>

#include "common/error.h"

namespace mcflow {

bool IsOrientedCycle(const MultiGraph& graph, const SignedEdgeMap& cycle) {
  if (static_cast<int>(cycle.size()) != graph.edge_count()) return false;
  std::vector<int64_t> values(cycle.begin(), cycle.end());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (Boundary(graph, values, v) != 0) return false;
  }
  return true;
}

std::vector<int> CoverCounts(const MultiGraph& graph, const CycleCover& cover) {
  std::vector<int> counts(graph.edge_count(), 0);
  for (const SignedEdgeMap& cycle : cover.cycles) {
    for (int e = 0; e < graph.edge_count(); ++e) counts[e] += cycle[e] != 0;
  }
  return counts;
}

void ValidateCover(const MultiGraph& graph, const CycleCover& cover) {
  const int m = graph.edge_count();
  for (int i = 0; i < cover.size(); ++i) {
    const SignedEdgeMap& cycle = cover.cycles[i];
    Require(static_cast<int>(cycle.size()) == m,
            "cycle " + std::to_string(i) + " has the wrong length");
    std::vector<int64_t> values(cycle.begin(), cycle.end());
    for (int v = 0; v < graph.vertex_count(); ++v) {
      if (Boundary(graph, values, v) != 0) {
        Fail(ErrorCode::kContract, "cycle " + std::to_string(i) +
                                       " is unbalanced at vertex " +
                                       std::to_string(v));
      }
    }
  }
  const std::vector<int> counts = CoverCounts(graph, cover);
  for (int e = 0; e < m; ++e) {
    const bool ok = cover.multiplicity == 0 ? counts[e] >= 1
                                            : counts[e] == cover.multiplicity;
    if (!ok) {
      Fail(ErrorCode::kContract,
           "edge " + std::to_string(e) + " is covered " +
               std::to_string(counts[e]) + " times, expected " +
               (cover.multiplicity == 0 ? std::string("at least 1")
                                        : std::to_string(cover.multiplicity)));
    }
    if (cover.oriented_double) {
      int plus = 0, minus = 0;
      for (const SignedEdgeMap& cycle : cover.cycles) {
        plus += cycle[e] > 0;
        minus += cycle[e] < 0;
      }
      if (plus != 1 || minus != 1) {
        Fail(ErrorCode::kContract,
             "edge " + std::to_string(e) +
                 " does not occur once in each orientation");
      }
    }
  }
}

std::string WriteCover(const CycleCover& cover) {
  std::string out = std::to_string(cover.size()) + " " +
                    std::to_string(cover.multiplicity);
  if (cover.oriented_double) out += " ocdc";
  out += "\n";
  for (const SignedEdgeMap& cycle : cover.cycles) {
    std::string line;
    for (size_t e = 0; e < cycle.size(); ++e) {
      if (cycle[e] == 0) continue;
      if (!line.empty()) line += ' ';
      line += (cycle[e] > 0 ? "+" : "-") + std::to_string(e);
    }
    out += line + "\n";
  }
  return out;
}

CycleCover ParseCover(const MultiGraph& graph, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) Fail(ErrorCode::kParse, "empty cover file");
  std::istringstream header(line);
  int m = -1, k = -1;
  std::string tag;
  header >> m >> k;
  if (!header || m < 0 || k < 0) {
    Fail(ErrorCode::kParse, "cover header must be 'm k'");
  }
  CycleCover cover;
  cover.multiplicity = k;
  if (header >> tag) {
    if (tag != "ocdc") Fail(ErrorCode::kParse, "unknown cover tag '" + tag + "'");
    cover.oriented_double = true;
  }
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line)) {
      Fail(ErrorCode::kParse, "cover file ends after " + std::to_string(i) +
                                  " of " + std::to_string(m) + " cycles");
    }
    SignedEdgeMap cycle(graph.edge_count(), 0);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) {
        Fail(ErrorCode::kParse, "cover token '" + token +
                                    "' must be a signed edge id like +3");
      }
      int id = -1;
      try {
        size_t used = 0;
        id = std::stoi(token.substr(1), &used);
        if (used != token.size() - 1) id = -1;
      } catch (const std::exception&) {
        id = -1;
      }
      if (id < 0 || id >= graph.edge_count()) {
        Fail(ErrorCode::kParse, "cover token '" + token + "' is not an edge");
      }
      if (cycle[id] != 0) {
        Fail(ErrorCode::kParse, "edge " + std::to_string(id) +
                                    " repeated in cycle " + std::to_string(i));
      }
      cycle[id] = token[0] == '+' ? 1 : -1;
    }
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

}  // namespace mcflow
