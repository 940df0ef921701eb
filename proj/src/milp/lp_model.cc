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

#include "milp/lp_model.h"

#include <cctype>
#include <set>
#include <sstream>

#include "common/error.h"
#include "graph/structure.h"

namespace mcflow {
namespace {

std::string Suffix(const Edge& e) {
  return std::to_string(e.tail) + "_" + std::to_string(e.head);
}

// Exact decimal text; fails for non-terminating expansions.
std::string Decimal(const Rational& value) {
  mpz_class den = value.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) {
    Fail(ErrorCode::kContract, "coefficient " + ToDisplayString(value) +
                                   " has no finite decimal form");
  }
  const int digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = value.get_num() * (scale / value.get_den());
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string text = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
  }
  return negative ? "-" + text : text;
}

Rational ParseDecimal(const std::string& token) {
  size_t i = 0;
  bool negative = false;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
    negative = token[i] == '-';
    ++i;
  }
  std::string digits;
  int frac = 0;
  bool dot = false;
  for (; i < token.size(); ++i) {
    const char c = token[i];
    if (c == '.' && !dot) {
      dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      frac += dot ? 1 : 0;
    } else {
      Fail(ErrorCode::kParse, "bad number '" + token + "'");
    }
  }
  if (digits.empty()) Fail(ErrorCode::kParse, "bad number '" + token + "'");
  mpz_class num(digits), den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string Expression(const std::vector<LinearTerm>& terms) {
  std::string out;
  for (const LinearTerm& t : terms) {
    const bool negative = t.coef < 0;
    const Rational magnitude = negative ? Rational(-t.coef) : t.coef;
    if (out.empty()) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += Decimal(magnitude) + " ";
    out += t.var;
  }
  return out.empty() ? "0 z" : out;
}

const char* SenseText(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kGe: return ">=";
    case Sense::kEq: return "=";
  }
  return "?";
}

// Tokens of the LP grammar subset written by WriteLp.
std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      if (i + 1 < line.size() && line[i + 1] == '=') {
        op += '=';
        ++i;
      }
      if (op == "=<") op = "<=";
      if (op == "=>") op = ">=";
      if (op == "<") op = "<=";
      if (op == ">") op = ">=";
      out.push_back(op);
      ++i;
    } else if (c == '+' || c == '-' || c == ':') {
      out.push_back(std::string(1, c));
      ++i;
    } else {
      size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])) &&
             std::string("<>=+-:").find(line[j]) == std::string::npos) {
        ++j;
      }
      out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

bool IsNumber(const std::string& t) {
  return !t.empty() &&
         (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '.');
}

// Parses "[name:] expr [sense rhs]" from tokens.
struct ParsedRow {
  std::string name;
  std::vector<LinearTerm> terms;
  std::optional<Sense> sense;
  Rational rhs;
};

ParsedRow ParseRow(const std::vector<std::string>& tokens, int line_no) {
  ParsedRow row;
  size_t i = 0;
  if (tokens.size() >= 2 && tokens[1] == ":") {
    row.name = tokens[0];
    i = 2;
  }
  auto fail = [&](const std::string& what) {
    Fail(ErrorCode::kParse, "LP line " + std::to_string(line_no) + ": " + what);
  };
  while (i < tokens.size() && tokens[i] != "<=" && tokens[i] != ">=" &&
         tokens[i] != "=") {
    Rational sign = 1;
    while (i < tokens.size() && (tokens[i] == "+" || tokens[i] == "-")) {
      if (tokens[i] == "-") sign = -sign;
      ++i;
    }
    if (i >= tokens.size()) fail("dangling sign");
    Rational coef = 1;
    if (IsNumber(tokens[i])) {
      coef = ParseDecimal(tokens[i]);
      ++i;
      if (i >= tokens.size() || IsNumber(tokens[i])) fail("expected a variable");
    }
    row.terms.push_back({sign * coef, tokens[i]});
    ++i;
  }
  if (i < tokens.size()) {
    const std::string& op = tokens[i];
    row.sense = op == "<=" ? Sense::kLe : op == ">=" ? Sense::kGe : Sense::kEq;
    ++i;
    Rational sign = 1;
    while (i < tokens.size() && (tokens[i] == "+" || tokens[i] == "-")) {
      if (tokens[i] == "-") sign = -sign;
      ++i;
    }
    if (i + 1 != tokens.size() || !IsNumber(tokens[i])) {
      fail("right-hand side must be a single number");
    }
    row.rhs = sign * ParseDecimal(tokens[i]);
  }
  return row;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

LpModel BuildChebyshev2dModel(const MultiGraph& graph, const Rational& lambda) {
  if (!graph.IsSimple()) {
    Fail(ErrorCode::kContract,
         "the model indexes edges by vertex pairs and needs a simple graph");
  }
  const std::vector<int> bridges = FindBridges(graph);
  if (!bridges.empty()) {
    Fail(ErrorCode::kNoFlowPossible,
         "graph has a bridge (edge " + std::to_string(bridges.front()) + ")");
  }
  Require(lambda > 0, "lambda must be positive");
  Decimal(lambda);

  LpModel model;
  model.comments = {
      "mcflow: 2-dimensional Chebyshev flow number model",
      "graph " + graph.Key() + ", " + std::to_string(graph.vertex_count()) +
          " vertices, " + std::to_string(graph.edge_count()) +
          " edges, Lambda = " + Decimal(lambda),
      "Edge {i,j} with i < j is oriented i -> j and carries (xp - xm, yp - ym).",
      "Objective: z is an upper bound on |x| and |y| of every edge, so z is",
      "the largest allowed Chebyshev norm r - 1. At the optimum",
      "Phi_2^inf(G) = 1 + z.",
  };
  model.objective = {{1, "z"}};

  for (const Edge& e : graph.edges()) {
    const std::string s = Suffix(e);
    const std::string xp = "xp_" + s, xm = "xm_" + s, yp = "yp_" + s,
                      ym = "ym_" + s, ux = "ux_" + s, uy = "uy_" + s;
    const std::string v[4] = {"v1_" + s, "v2_" + s, "v3_" + s, "v4_" + s};
    auto add = [&](const std::string& name, std::vector<LinearTerm> terms,
                   Sense sense, const Rational& rhs) {
      model.constraints.push_back({name + "_" + s, std::move(terms), sense, rhs});
    };
    add("sx", {{1, xp}, {-lambda, ux}}, Sense::kLe, 0);
    add("tx", {{1, xm}, {lambda, ux}}, Sense::kLe, lambda);
    add("sy", {{1, yp}, {-lambda, uy}}, Sense::kLe, 0);
    add("ty", {{1, ym}, {lambda, uy}}, Sense::kLe, lambda);
    add("zx", {{1, xp}, {1, xm}, {-1, "z"}}, Sense::kLe, 0);
    add("zy", {{1, yp}, {1, ym}, {-1, "z"}}, Sense::kLe, 0);
    add("w1", {{1, xp}, {1, v[0]}}, Sense::kGe, 1);
    add("w2", {{1, xm}, {1, v[1]}}, Sense::kGe, 1);
    add("w3", {{1, yp}, {1, v[2]}}, Sense::kGe, 1);
    add("w4", {{1, ym}, {1, v[3]}}, Sense::kGe, 1);
    add("wv", {{1, v[0]}, {1, v[1]}, {1, v[2]}, {1, v[3]}}, Sense::kLe, 3);
    for (const std::string& var : {xp, xm, yp, ym}) {
      model.bounds.push_back({var, Rational(0), std::nullopt});
    }
    model.binaries.insert(model.binaries.end(), {ux, uy, v[0], v[1], v[2], v[3]});
  }
  // Net outflow is zero at every non-isolated vertex.
  for (int i = 0; i < graph.vertex_count(); ++i) {
    if (graph.incident(i).empty()) continue;
    for (const char* axis : {"x", "y"}) {
      std::vector<LinearTerm> terms;
      for (int id : graph.incident(i)) {
        const Edge& e = graph.edge(id);
        const Rational sign = e.tail == i ? 1 : -1;
        const std::string s = Suffix(e);
        terms.push_back({sign, std::string(axis) + "p_" + s});
        terms.push_back({-sign, std::string(axis) + "m_" + s});
      }
      model.constraints.push_back({std::string("c") + axis + "_" + std::to_string(i),
                                   std::move(terms), Sense::kEq, 0});
    }
  }
  model.bounds.push_back({"z", Rational(0), std::nullopt});
  return model;
}

std::string WriteLp(const LpModel& model) {
  std::string out;
  for (const std::string& c : model.comments) out += "\\ " + c + "\n";
  out += model.minimize ? "Minimize\n" : "Maximize\n";
  out += " " + model.objective_name + ": " + Expression(model.objective) + "\n";
  out += "Subject To\n";
  for (const LpConstraint& c : model.constraints) {
    out += " " + c.name + ": " + Expression(c.terms) + " " + SenseText(c.sense) +
           " " + Decimal(c.rhs) + "\n";
  }
  out += "Bounds\n";
  for (const LpBound& b : model.bounds) {
    if (!b.lo && !b.hi) {
      out += " " + b.var + " free\n";
    } else if (b.lo && b.hi) {
      out += " " + Decimal(*b.lo) + " <= " + b.var + " <= " + Decimal(*b.hi) + "\n";
    } else if (b.lo) {
      out += " " + b.var + " >= " + Decimal(*b.lo) + "\n";
    } else {
      out += " -inf <= " + b.var + " <= " + Decimal(*b.hi) + "\n";
    }
  }
  if (!model.binaries.empty()) {
    out += "Binaries\n";
    for (const std::string& v : model.binaries) out += " " + v + "\n";
  }
  out += "End\n";
  return out;
}

LpModel ParseLp(std::string_view text) {
  LpModel model;
  model.objective_name.clear();
  std::istringstream in{std::string(text)};
  std::string line;
  enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kEnd };
  Section section = Section::kNone;
  int line_no = 0;
  bool have_objective = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '\\') {
      model.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    const std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string head = Lower(tokens[0]);
    if (tokens.size() == 1 && (head == "minimize" || head == "maximize" ||
                               head == "min" || head == "max")) {
      model.minimize = head[1] == 'i';
      section = Section::kObjective;
      continue;
    }
    if (head == "subject" && tokens.size() == 2 && Lower(tokens[1]) == "to") {
      section = Section::kConstraints;
      continue;
    }
    if (tokens.size() == 1 && head == "bounds") {
      section = Section::kBounds;
      continue;
    }
    if (tokens.size() == 1 && (head == "binaries" || head == "binary")) {
      section = Section::kBinaries;
      continue;
    }
    if (tokens.size() == 1 && head == "end") {
      section = Section::kEnd;
      continue;
    }
    auto fail = [&](const std::string& what) {
      Fail(ErrorCode::kParse, "LP line " + std::to_string(line_no) + ": " + what);
    };
    switch (section) {
      case Section::kNone:
      case Section::kEnd:
        fail("text outside a section");
        break;
      case Section::kObjective: {
        if (have_objective) fail("objective continues over lines");
        ParsedRow row = ParseRow(tokens, line_no);
        if (row.sense) fail("objective has a sense");
        model.objective_name = row.name;
        model.objective = std::move(row.terms);
        have_objective = true;
        break;
      }
      case Section::kConstraints: {
        ParsedRow row = ParseRow(tokens, line_no);
        if (!row.sense) fail("constraint without sense");
        model.constraints.push_back(
            {row.name, std::move(row.terms), *row.sense, row.rhs});
        break;
      }
      case Section::kBounds: {
        LpBound b;
        if (tokens.size() == 2 && Lower(tokens[1]) == "free") {
          b.var = tokens[0];
        } else if (tokens.size() == 3 && !IsNumber(tokens[0]) &&
                   (tokens[1] == ">=" || tokens[1] == "<=") &&
                   IsNumber(tokens[2])) {
          b.var = tokens[0];
          (tokens[1] == ">=" ? b.lo : b.hi) = ParseDecimal(tokens[2]);
        } else if (tokens.size() == 4 && !IsNumber(tokens[0]) &&
                   (tokens[1] == ">=" || tokens[1] == "<=") &&
                   tokens[2] == "-" && IsNumber(tokens[3])) {
          (tokens[1] == ">=" ? b.lo : b.hi) = Rational(-ParseDecimal(tokens[3]));
        } else if (tokens.size() == 5 && tokens[1] == "<=" && tokens[3] == "<=") {
          b.var = tokens[2];
          if (tokens[0] != "-inf") b.lo = ParseDecimal(tokens[0]);
          b.hi = ParseDecimal(tokens[4]);
        } else if (tokens.size() == 6 && tokens[0] == "-" && tokens[2] == "<=" &&
                   tokens[4] == "<=") {
          if (Lower(tokens[1]) != "inf") fail("unsupported bound");
          b.var = tokens[3];
          b.hi = ParseDecimal(tokens[5]);
        } else {
          fail("unsupported bound");
        }
        model.bounds.push_back(std::move(b));
        break;
      }
      case Section::kBinaries:
        for (const std::string& t : tokens) model.binaries.push_back(t);
        break;
    }
  }
  if (section != Section::kEnd) Fail(ErrorCode::kParse, "LP text lacks End");
  if (!have_objective) Fail(ErrorCode::kParse, "LP text lacks an objective");
  return model;
}

std::vector<std::string> CheckAssignment(const LpModel& model,
                                         const LpAssignment& values) {
  std::vector<std::string> violated;
  std::set<std::string> missing;
  auto value = [&](const std::string& var) -> Rational {
    auto it = values.find(var);
    if (it == values.end()) {
      missing.insert(var);
      return 0;
    }
    return it->second;
  };
  for (const LpConstraint& c : model.constraints) {
    Rational lhs = 0;
    for (const LinearTerm& t : c.terms) lhs += t.coef * value(t.var);
    const bool ok = c.sense == Sense::kLe   ? lhs <= c.rhs
                    : c.sense == Sense::kGe ? lhs >= c.rhs
                                            : lhs == c.rhs;
    if (!ok) violated.push_back(c.name);
  }
  for (const LpBound& b : model.bounds) {
    const Rational x = value(b.var);
    if ((b.lo && x < *b.lo) || (b.hi && x > *b.hi)) {
      violated.push_back("bound " + b.var);
    }
  }
  for (const std::string& v : model.binaries) {
    const Rational x = value(v);
    if (x != 0 && x != 1) violated.push_back("binary " + v);
  }
  for (const std::string& v : missing) violated.push_back("missing " + v);
  return violated;
}

Rational EvaluateObjective(const LpModel& model, const LpAssignment& values) {
  Rational total = 0;
  for (const LinearTerm& t : model.objective) {
    auto it = values.find(t.var);
    if (it != values.end()) total += t.coef * it->second;
  }
  return total;
}

LpAssignment AssignmentFromFlow(const FlowAssignment& flow) {
  Require(flow.dimension() == 2 && flow.norm() == NormKind::kChebyshev,
          "model points come from 2-dimensional Chebyshev flows");
  LpAssignment out;
  const MultiGraph& graph = flow.graph();
  for (int id = 0; id < graph.edge_count(); ++id) {
    const std::string s = Suffix(graph.edge(id));
    const FlowVector& v = flow.value(id);
    const char* axes[2] = {"x", "y"};
    bool big[4];
    for (int a = 0; a < 2; ++a) {
      const Rational& c = v[a];
      const std::string axis = axes[a];
      out[axis + "p_" + s] = c > 0 ? c : Rational(0);
      out[axis + "m_" + s] = c < 0 ? Rational(-c) : Rational(0);
      out["u" + axis + "_" + s] = c > 0 ? 1 : 0;
      big[2 * a] = c >= 1;
      big[2 * a + 1] = c <= -1;
    }
    // v_i = 0 marks the coordinate part that reaches 1; exactly one is 0.
    int chosen = -1;
    for (int i = 0; i < 4 && chosen < 0; ++i) {
      if (big[i]) chosen = i;
    }
    for (int i = 0; i < 4; ++i) {
      out["v" + std::to_string(i + 1) + "_" + s] =
          (chosen < 0 || i != chosen) ? 1 : 0;
    }
  }
  out["z"] = flow.window_high();
  return out;
}

}  // namespace mcflow
