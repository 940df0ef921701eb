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

#include "flow/flow_io.h"

#include <sstream>
#include <vector>

#include "common/error.h"

namespace mcflow {

std::string WriteFlow(const FlowAssignment& flow) {
  const MultiGraph& g = flow.graph();
  std::string out = "mcflow-flow 1\n";
  out += "graph " + g.Key() + "\n";
  out += "dim " + std::to_string(flow.dimension()) + "\n";
  out += std::string("norm ") + NormKindName(flow.norm()) + "\n";
  out += "r " + ToFractionString(flow.r()) + "\n";
  out += "edges " + std::to_string(g.edge_count()) + "\n";
  for (int id = 0; id < g.edge_count(); ++id) {
    out += std::to_string(g.edge(id).tail) + " " +
           std::to_string(g.edge(id).head) + " :";
    for (const Rational& x : flow.value(id)) out += " " + ToFractionString(x);
    out += "\n";
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : in_(std::string(text)) {}

  // Next non-blank line split on whitespace.
  std::vector<std::string> Next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      std::istringstream fields(line);
      std::vector<std::string> tokens;
      std::string token;
      while (fields >> token) tokens.push_back(token);
      if (!tokens.empty()) return tokens;
    }
    Fail(ErrorCode::kParse, "flow file ends early after line " +
                                std::to_string(number_));
  }

  std::string Expect(const char* keyword) {
    std::vector<std::string> tokens = Next();
    if (tokens.size() != 2 || tokens[0] != keyword) {
      Fail(ErrorCode::kParse, "flow file line " + std::to_string(number_) +
                                  ": expected '" + keyword + " <value>'");
    }
    return tokens[1];
  }

  int number() const { return number_; }

 private:
  std::istringstream in_;
  int number_ = 0;
};

int ParseInt(const std::string& token, int line) {
  try {
    size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  Fail(ErrorCode::kParse, "flow file line " + std::to_string(line) +
                              ": bad integer '" + token + "'");
}

}  // namespace

FlowAssignment ParseFlow(const MultiGraph& graph, std::string_view text) {
  LineReader reader(text);
  std::vector<std::string> magic = reader.Next();
  if (magic.size() != 2 || magic[0] != "mcflow-flow" || magic[1] != "1") {
    Fail(ErrorCode::kParse, "not an mcflow flow file (version 1)");
  }
  const std::string key = reader.Expect("graph");
  if (key != graph.Key()) {
    Fail(ErrorCode::kParse, "flow file is for graph " + key +
                                   ", not " + graph.Key());
  }
  const int d = ParseInt(reader.Expect("dim"), reader.number());
  if (d < 1) Fail(ErrorCode::kParse, "flow dimension must be positive");
  const NormKind norm = ParseNormKind(reader.Expect("norm"));
  const Rational r = ParseRational(reader.Expect("r"));
  const int m = ParseInt(reader.Expect("edges"), reader.number());
  if (m != graph.edge_count()) {
    Fail(ErrorCode::kParse, "flow file has " + std::to_string(m) +
                                   " edges, graph has " +
                                   std::to_string(graph.edge_count()));
  }
  std::vector<FlowVector> values;
  values.reserve(m);
  for (int id = 0; id < m; ++id) {
    std::vector<std::string> tokens = reader.Next();
    const int line = reader.number();
    if (static_cast<int>(tokens.size()) != 3 + d || tokens[2] != ":") {
      Fail(ErrorCode::kParse, "flow file line " + std::to_string(line) +
                                  ": expected 'tail head : c1 .. c" +
                                  std::to_string(d) + "'");
    }
    const int tail = ParseInt(tokens[0], line);
    const int head = ParseInt(tokens[1], line);
    if (tail != graph.edge(id).tail || head != graph.edge(id).head) {
      Fail(ErrorCode::kParse, "flow file line " + std::to_string(line) +
                                     ": edge endpoints do not match edge " +
                                     std::to_string(id));
    }
    FlowVector v;
    for (int i = 0; i < d; ++i) v.push_back(ParseRational(tokens[3 + i]));
    values.push_back(std::move(v));
  }
  return FlowAssignment(graph, d, norm, r, std::move(values));
}

}  // namespace mcflow
