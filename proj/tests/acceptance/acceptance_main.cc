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

// Runs the nine acceptance criteria and prints one line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "app.h"
#include "bounds/bounds.h"
#include "common/error.h"
#include "covers/constructions.h"
#include "covers/cover_search.h"
#include "covers/hadamard.h"
#include "graph/named_graphs.h"
#include "graph/graph6.h"
#include "milp/lp_model.h"
#include "oracles.h"
#include "pairs/flow_pair.h"
#include "search/flow_search.h"

namespace fs = std::filesystem;
using namespace mcflow;

namespace {

const std::string kData = MCFLOW_TEST_DATA_DIR;

Rational Q(int64_t p, int64_t q = 1) { return MakeRational(p, q); }

// Collects failures; a criterion passes when none were recorded.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(checks_ - failed_) + "/" +
                    std::to_string(checks_) + " checks";
    for (const std::string& f : failures_) s += "; " + f;
    return s;
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<MultiGraph> Corpus(const std::string& file) {
  std::ifstream in(kData + "/" + file);
  std::stringstream s;
  s << in.rdbuf();
  return ParseGraph6File(s.str());
}

oracle::PlainGraph Plain(const MultiGraph& g) {
  oracle::PlainGraph p{g.vertex_count(), {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    p.edges.push_back({g.edge(e).tail, g.edge(e).head});
  }
  return p;
}

std::string Show(const Rational& r) { return ToDisplayString(r); }

void Criterion1(Check& check) {
  const std::pair<const char*, Rational> expected[] = {
      {"petersen", Q(5, 2)}, {"blanusa1", Q(9, 4)}, {"blanusa2", Q(9, 4)},
      {"k4", Q(2)}};
  for (const auto& [name, value] : expected) {
    const FlowNumberResult r =
        FlowNumber(NamedGraph(name), 2, NormKind::kChebyshev, 4);
    check(r.exact() && r.value == value && r.witness &&
              Verify(*r.witness).valid(),
          std::string(name) + " gave " + Show(r.value));
  }
}

void Criterion2(Check& check) {
  const std::vector<MultiGraph> corpus = Corpus("cubic_bridgeless.g6");
  check(corpus.size() >= 50, "corpus has only " + std::to_string(corpus.size()));
  int i = 0;
  for (const MultiGraph& g : corpus) {
    check(g.vertex_count() <= 14, "graph " + std::to_string(i) + " too large");
    const Decision d = DecideChnzf(g, 2, 1, 2);
    const bool colourable = oracle::Colourable(Plain(g));
    check(d.found() == colourable && (!d.found() || Verify(*d.witness).valid()),
          "graph " + std::to_string(i) + " disagrees");
    ++i;
  }
}

void Criterion3(Check& check) {
  std::vector<MultiGraph> graphs = Corpus("cubic_bridgeless.g6");
  for (const char* name : {"petersen", "blanusa1", "blanusa2", "k4", "k33", "prism"}) {
    graphs.push_back(NamedGraph(name));
  }
  int i = 0;
  for (const MultiGraph& g : graphs) {
    const FlowNumberResult c = FlowNumber(g, 2, NormKind::kChebyshev, 4);
    const FlowNumberResult m = FlowNumber(g, 2, NormKind::kManhattan, 4);
    const std::string id = "graph " + std::to_string(i++);
    check(c.exact() && m.exact() && c.value == m.value, id + " values differ");
    if (!c.witness || !m.witness) {
      check(false, id + " has no witness");
      continue;
    }
    check(m.witness->norm() == NormKind::kManhattan && Verify(*m.witness).valid(),
          id + " Manhattan witness invalid");
    const FlowAssignment back = ManhToCheb2d(*m.witness);
    check(Verify(back).valid(), id + " inverse transform invalid");
    check(ManhToCheb2d(ChebToManh2d(*c.witness)).values() == c.witness->values() &&
              ChebToManh2d(back).values() == m.witness->values(),
          id + " round trip not the identity");
  }
  for (int a = -12; a <= 12; ++a) {
    for (int b = -12; b <= 12; ++b) {
      const FlowVector v{Q(a, 4), Q(b, 3)};
      check(ManhToChebVector(ChebToManhVector(v)) == v &&
                ChebToManhVector(ManhToChebVector(v)) == v,
            "vector round trip");
    }
  }
}

void Criterion4(Check& check) {
  const std::pair<const char*, int> attained[] = {
      {"petersen", 10}, {"blanusa1", 18}, {"blanusa2", 18}};
  for (const auto& [name, n] : attained) {
    const MultiGraph g = NamedGraph(name);
    const FlowNumberResult r = FlowNumber(g, 2, NormKind::kChebyshev, 4);
    check(g.vertex_count() == n && r.exact() && r.value == SnarkLowerBound(n),
          std::string(name) + " gave " + Show(r.value));
  }
  std::vector<MultiGraph> graphs = Corpus("cubic_bridgeless.g6");
  for (const MultiGraph& g : Corpus("snarks.g6")) graphs.push_back(g);
  int snarks = 0;
  for (const MultiGraph& g : graphs) {
    if (!IsSnark(g)) continue;
    ++snarks;
    const FlowNumberResult r = FlowNumber(g, 2, NormKind::kChebyshev, 4);
    check(r.value >= SnarkLowerBound(g.vertex_count()),
          "snark of order " + std::to_string(g.vertex_count()) + " below bound");
  }
  check(snarks >= 4, "only " + std::to_string(snarks) + " snarks");
}

void Criterion5(Check& check) {
  for (const char* name : {"petersen", "k4"}) {
    const MultiGraph g = NamedGraph(name);
    const PairSearchResult r = FindTFlowPair(g, 1, 2);
    if (!r.pair) {
      check(false, std::string(name) + ": no 1/2-flow-pair");
      continue;
    }
    bool valid = true;
    try {
      ValidatePair(g, *r.pair);
    } catch (const Error&) {
      valid = false;
    }
    check(valid, std::string(name) + ": pair invalid");
    const FlowAssignment ch = ChnzfFromPair(g, *r.pair);
    const FlowAssignment one = Nzf1dFromPair(g, *r.pair);
    check(ch.r() == Q(5, 2) && ch.dimension() == 2 && Verify(ch).valid(),
          std::string(name) + ": (5/2,2)-ChNZF invalid");
    check(one.r() == 5 && one.dimension() == 1 && Verify(one).valid(),
          std::string(name) + ": (5,1)-NZF invalid");
    if (std::string(name) == "petersen") {
      check(CheckSupportTwoFactor(g, *r.pair), "petersen: support not a 2-factor");
    }
  }
  const MultiGraph petersen = NamedGraph("petersen");
  const FlowNumberResult phi1 = FlowNumber(petersen, 1, NormKind::kChebyshev, 3);
  check(phi1.exact() && phi1.value == 5, "Phi_1(petersen) = " + Show(phi1.value));
  // Unpruned enumeration over the same ladder.
  const oracle::PlainGraph plain = Plain(petersen);
  Rational smallest = 0;
  for (const Rational& r : FareyCandidates(4, 6, 3)) {
    const int64_t p = r.get_num().get_si(), q = r.get_den().get_si();
    const bool brute = oracle::IntegerWindowFeasible(plain, p, q, 1);
    check(brute == DecideChnzf(petersen, p, q, 1).found(),
          "d=1 verdict differs at " + Show(r));
    if (brute && smallest == 0) smallest = r;
  }
  check(smallest == 5, "brute force gives Phi_1 = " + Show(smallest));
}

void Criterion6(Check& check) {
  for (const char* name : {"petersen", "k4"}) {
    const MultiGraph g = NamedGraph(name);
    const FlowAssignment f = FlowFrom3CoverQ(g, FindZ2CubeFlow(g));
    check(f.r() == Q(5, 2) && Verify(f).valid(), std::string(name) + ": 3-cover flow");
    for (const FlowVector& v : f.values()) {
      const Rational n = Norm(v, NormKind::kManhattan);
      check(n == 1 || n == Q(5, 4) || n == Q(3, 2),
            std::string(name) + ": norm " + Show(n));
    }
  }
  const MultiGraph k4 = NamedGraph("k4");
  const CoverSearchResult ocdc = FindKOcdc(k4, 4);
  check(ocdc.cover.has_value(), "k4: no 4-OCDC");
  if (ocdc.cover) {
    const FlowAssignment f = FlowFrom4Ocdc(k4, *ocdc.cover);
    check(Verify(f).valid(), "k4: 4-OCDC flow invalid");
    for (const FlowVector& v : f.values()) {
      check(Norm(v, NormKind::kChebyshev) == 1, "k4: non-unit L-inf norm");
    }
  }
  const HadamardMatrix h4 = HadamardSylvester(4);
  for (const char* name : {"k4", "petersen"}) {
    const MultiGraph g = NamedGraph(name);
    const CoverSearchResult cdc = FindCycleCover(g, 5, 2);
    check(cdc.cover.has_value(), std::string(name) + ": no 5-CDC");
    if (!cdc.cover) continue;
    const FlowAssignment f = FlowFromCdcHadamard(g, *cdc.cover, h4);
    check(Verify(f).valid(), std::string(name) + ": Hadamard flow invalid");
    for (const FlowVector& v : f.values()) {
      check(Norm(v, NormKind::kManhattan) == 1, std::string(name) + ": non-unit L1");
    }
  }
  bool identity = true;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      int dot = 0;
      for (int k = 0; k < 4; ++k) dot += h4.rows[i][k] * h4.rows[j][k];
      identity = identity && dot == (i == j ? 4 : 0);
    }
  }
  check(identity, "H4 H4^T != 4I");
}

void Criterion7(Check& check) {
  const std::pair<int64_t, int64_t> windows[] = {{2, 1}, {9, 4}, {7, 3}, {5, 2}};
  int graphs = 0;
  for (const MultiGraph& g : Corpus("cubic_bridgeless.g6")) {
    if (g.vertex_count() > 10) continue;
    ++graphs;
    const oracle::PlainGraph plain = Plain(g);
    for (const auto& [p, q] : windows) {
      check(DecideChnzf(g, p, q, 2).found() ==
                oracle::IntegerWindowFeasible(plain, p, q, 2),
            "order " + std::to_string(g.vertex_count()) + " at " +
                std::to_string(p) + "/" + std::to_string(q));
    }
  }
  check(graphs > 0, "no graphs of order <= 10");
}

void Criterion8(Check& check) {
  const MultiGraph petersen = NamedGraph("petersen");
  const LpModel model = BuildChebyshev2dModel(petersen);
  const std::string text = WriteLp(model);
  const LpModel back = ParseLp(text);
  check(back == model, "re-parsed model differs");
  check(WriteLp(back) == text, "re-written text differs");
  const FlowNumberResult r = FlowNumber(petersen, 2, NormKind::kChebyshev, 4);
  check(r.witness.has_value(), "no witness");
  if (!r.witness) return;
  const LpAssignment point = AssignmentFromFlow(*r.witness);
  const std::vector<std::string> violated = CheckAssignment(back, point);
  check(violated.empty(), std::to_string(violated.size()) + " rows violated");
  check(EvaluateObjective(back, point) == r.value - 1, "objective is not r - 1");
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void Criterion9(Check& check) {
  std::string tmpl = (fs::temp_directory_path() / "mcflow-accept-XXXXXX").string();
  if (mkdtemp(tmpl.data()) == nullptr) {
    check(false, "cannot create a temporary directory");
    return;
  }
  const fs::path dir = tmpl;
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "4", "4"}) {
    const std::string csv = (dir / (std::string("run") + std::to_string(outputs.size()) + ".csv")).string();
    std::ostringstream out, err;
    const int code = mcflow_cli::RunCli(
        {"--no-cache", "batch", kData + "/cubic_bridgeless.g6", "--qmax", "4",
         "--jobs", jobs, "--csv", csv},
        out, err);
    check(code == 0, std::string("batch exit code ") + std::to_string(code));
    outputs.push_back(Slurp(csv));
  }
  check(!outputs[0].empty(), "empty CSV");
  check(outputs[0] == outputs[1], "jobs 1 and jobs 4 differ");
  check(outputs[1] == outputs[2], "two runs at jobs 4 differ");
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"flow-number exactness", Criterion1},
      {"(2,2)-ChNZF iff 3-edge-colourable", Criterion2},
      {"Manhattan and Chebyshev 2-D flow numbers agree", Criterion3},
      {"snark lower bound attained and respected", Criterion4},
      {"flow-pair pipeline", Criterion5},
      {"cycle cover constructions", Criterion6},
      {"pruned search agrees with brute force", Criterion7},
      {"MILP export", Criterion8},
      {"batch determinism", Criterion9},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failed += !check.ok();
    std::printf("[%s] %zu %s (%s, %.1fs)\n", check.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), check.Summary().c_str(), seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
