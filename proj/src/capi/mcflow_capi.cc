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

#include "mcflow/mcflow.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bounds/bounds.h"
#include "common/error.h"
#include "common/rational.h"
#include "covers/constructions.h"
#include "covers/cover_search.h"
#include "covers/hadamard.h"
#include "flow/flow.h"
#include "flow/flow_io.h"
#include "graph/graph6.h"
#include "graph/multigraph.h"
#include "graph/named_graphs.h"
#include "graph/structure.h"
#include "milp/lp_model.h"
#include "pairs/flow_pair.h"
#include "search/flow_search.h"

struct mcf_graph {
  mcflow::MultiGraph graph;
};
struct mcf_corpus {
  std::vector<mcflow::MultiGraph> graphs;
};
struct mcf_flow {
  mcflow::FlowAssignment flow;
};
struct mcf_result {
  mcflow::FlowNumberResult result;
};
struct mcf_pair {
  mcflow::MultiGraph graph;
  mcflow::FlowPair pair;
  mcflow::PairMethod method;
};
struct mcf_cover {
  mcflow::MultiGraph graph;
  mcflow::CycleCover cover;
};

namespace {

using mcflow::ErrorCode;

thread_local std::string last_error;

mcf_status FromCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return MCF_ERR_PARSE;
    case ErrorCode::kNoFlowPossible: return MCF_ERR_NO_FLOW;
    case ErrorCode::kContract: return MCF_ERR_CONTRACT;
    case ErrorCode::kUnsupported: return MCF_ERR_UNSUPPORTED;
    case ErrorCode::kIo: return MCF_ERR_IO;
    case ErrorCode::kInternal: return MCF_ERR_INTERNAL;
  }
  return MCF_ERR_INTERNAL;
}

template <typename F>
mcf_status Guard(F&& body) {
  try {
    last_error.clear();
    body();
    return MCF_OK;
  } catch (const mcflow::Error& e) {
    last_error = e.what();
    return FromCode(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MCF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MCF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return MCF_ERR_INTERNAL;
  }
}

#define MCF_CHECK_ARG(cond)                                          \
  do {                                                               \
    if (!(cond)) {                                                   \
      last_error = std::string("invalid argument: ") + #cond;        \
      return MCF_ERR_ARGUMENT;                                       \
    }                                                                \
  } while (0)

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mcf_outcome FromOutcome(mcflow::SearchOutcome o) {
  switch (o) {
    case mcflow::SearchOutcome::kFound: return MCF_FOUND;
    case mcflow::SearchOutcome::kInfeasible: return MCF_INFEASIBLE;
    case mcflow::SearchOutcome::kBudgetExhausted: return MCF_BUDGET_EXHAUSTED;
  }
  return MCF_INFEASIBLE;
}

mcflow::NormKind ToNorm(mcf_norm n) {
  return n == MCF_MANHATTAN ? mcflow::NormKind::kManhattan
                            : mcflow::NormKind::kChebyshev;
}

bool ValidNorm(mcf_norm n) { return n == MCF_MANHATTAN || n == MCF_CHEBYSHEV; }

// First line that is neither blank nor a comment.
std::string FirstDataLine(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.substr(start);
  }
  return "";
}

bool LooksLikeEdgeList(const std::string& text) {
  std::istringstream fields(FirstDataLine(text));
  long long n = -1, m = -1;
  std::string extra;
  return static_cast<bool>(fields >> n >> m) && !(fields >> extra);
}

mcflow::Rational LambdaOrDefault(const char* lambda) {
  return lambda == nullptr ? mcflow::Rational(2)
                           : mcflow::ParseRational(lambda);
}

}  // namespace

extern "C" {

const char* mcf_version(void) { return MCFLOW_VERSION_STRING; }

const char* mcf_last_error(void) { return last_error.c_str(); }

const char* mcf_status_name(mcf_status status) {
  switch (status) {
    case MCF_OK: return "ok";
    case MCF_ERR_PARSE: return "parse error";
    case MCF_ERR_NO_FLOW: return "no flow possible";
    case MCF_ERR_CONTRACT: return "contract violation";
    case MCF_ERR_UNSUPPORTED: return "unsupported";
    case MCF_ERR_IO: return "i/o error";
    case MCF_ERR_INTERNAL: return "internal error";
    case MCF_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* mcf_outcome_name(mcf_outcome outcome) {
  switch (outcome) {
    case MCF_FOUND: return "found";
    case MCF_INFEASIBLE: return "infeasible";
    case MCF_BUDGET_EXHAUSTED: return "budget-exhausted";
  }
  return "unknown";
}

void mcf_string_free(char* s) { std::free(s); }

// Graphs.

mcf_status mcf_graph_named(const char* name, mcf_graph** out) {
  MCF_CHECK_ARG(name != nullptr && out != nullptr);
  return Guard([&] { *out = new mcf_graph{mcflow::NamedGraph(name)}; });
}

mcf_status mcf_graph_named_list(char** out) {
  MCF_CHECK_ARG(out != nullptr);
  return Guard([&] {
    std::string list;
    for (const std::string& name : mcflow::NamedGraphNames()) {
      if (!list.empty()) list += ",";
      list += name;
    }
    *out = Dup(list);
  });
}

mcf_status mcf_graph_from_graph6(const char* text, mcf_graph** out) {
  MCF_CHECK_ARG(text != nullptr && out != nullptr);
  return Guard([&] {
    std::string line = FirstDataLine(text);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    *out = new mcf_graph{mcflow::ParseGraph6(line)};
  });
}

mcf_status mcf_graph_from_edge_list(const char* text, mcf_graph** out) {
  MCF_CHECK_ARG(text != nullptr && out != nullptr);
  return Guard([&] { *out = new mcf_graph{mcflow::ParseEdgeList(text)}; });
}

mcf_status mcf_graph_parse(const char* text, mcf_graph** out) {
  MCF_CHECK_ARG(text != nullptr && out != nullptr);
  if (LooksLikeEdgeList(text)) return mcf_graph_from_edge_list(text, out);
  return Guard([&] {
    std::vector<mcflow::MultiGraph> graphs = mcflow::ParseGraph6File(text);
    if (graphs.size() != 1) {
      mcflow::Fail(ErrorCode::kParse,
                   "expected one graph, found " + std::to_string(graphs.size()));
    }
    *out = new mcf_graph{std::move(graphs.front())};
  });
}

mcf_status mcf_graph_copy(const mcf_graph* g, mcf_graph** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] { *out = new mcf_graph{g->graph}; });
}

void mcf_graph_free(mcf_graph* g) { delete g; }

int mcf_graph_vertex_count(const mcf_graph* g) {
  return g == nullptr ? -1 : g->graph.vertex_count();
}

int mcf_graph_edge_count(const mcf_graph* g) {
  return g == nullptr ? -1 : g->graph.edge_count();
}

mcf_status mcf_graph_edge(const mcf_graph* g, int id, int* tail, int* head) {
  MCF_CHECK_ARG(g != nullptr && tail != nullptr && head != nullptr);
  MCF_CHECK_ARG(id >= 0 && id < g->graph.edge_count());
  *tail = g->graph.edge(id).tail;
  *head = g->graph.edge(id).head;
  return MCF_OK;
}

mcf_status mcf_graph_key(const mcf_graph* g, char** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(g->graph.Key()); });
}

mcf_status mcf_graph_to_graph6(const mcf_graph* g, char** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::WriteGraph6(g->graph)); });
}

mcf_status mcf_graph_to_edge_list(const mcf_graph* g, char** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::WriteEdgeList(g->graph)); });
}

mcf_status mcf_graph_describe(const mcf_graph* g, mcf_graph_info* out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] {
    const mcflow::MultiGraph& graph = g->graph;
    mcf_graph_info info{};
    info.vertices = graph.vertex_count();
    info.edges = graph.edge_count();
    info.cubic = graph.IsCubic();
    info.simple = graph.IsSimple();
    info.connected = mcflow::IsConnected(graph);
    info.two_connected = mcflow::IsTwoConnected(graph);
    info.bridges = static_cast<int>(mcflow::FindBridges(graph).size());
    info.girth = mcflow::Girth(graph);
    const bool loopless_cubic = graph.IsCubic() && graph.IsLoopless();
    info.colourable =
        loopless_cubic ? mcflow::ThreeEdgeColouring(graph).has_value() : -1;
    info.snark = mcflow::IsSnark(graph);
    if (loopless_cubic) {
      int count = 0;
      mcflow::ForEachPerfectMatching(graph, [&](const std::vector<int>&) {
        ++count;
        return true;
      });
      info.perfect_matchings = count;
    } else {
      info.perfect_matchings = -1;
    }
    *out = info;
  });
}

mcf_status mcf_corpus_parse(const char* text, mcf_corpus** out) {
  MCF_CHECK_ARG(text != nullptr && out != nullptr);
  return Guard([&] { *out = new mcf_corpus{mcflow::ParseGraph6File(text)}; });
}

size_t mcf_corpus_size(const mcf_corpus* c) {
  return c == nullptr ? 0 : c->graphs.size();
}

mcf_status mcf_corpus_get(const mcf_corpus* c, size_t index, mcf_graph** out) {
  MCF_CHECK_ARG(c != nullptr && out != nullptr && index < c->graphs.size());
  return Guard([&] { *out = new mcf_graph{c->graphs[index]}; });
}

void mcf_corpus_free(mcf_corpus* c) { delete c; }

// Flows.

mcf_status mcf_flow_parse(const mcf_graph* g, const char* text,
                          mcf_flow** out) {
  MCF_CHECK_ARG(g != nullptr && text != nullptr && out != nullptr);
  return Guard([&] { *out = new mcf_flow{mcflow::ParseFlow(g->graph, text)}; });
}

mcf_status mcf_flow_write(const mcf_flow* f, char** out) {
  MCF_CHECK_ARG(f != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::WriteFlow(f->flow)); });
}

mcf_status mcf_flow_verify(const mcf_flow* f, int* valid, char** report) {
  MCF_CHECK_ARG(f != nullptr && valid != nullptr);
  return Guard([&] {
    const mcflow::VerificationReport r = mcflow::Verify(f->flow);
    *valid = r.valid();
    if (report != nullptr) *report = Dup(r.ToText());
  });
}

int mcf_flow_dimension(const mcf_flow* f) {
  return f == nullptr ? -1 : f->flow.dimension();
}

mcf_norm mcf_flow_norm(const mcf_flow* f) {
  return f != nullptr && f->flow.norm() == mcflow::NormKind::kManhattan
             ? MCF_MANHATTAN
             : MCF_CHEBYSHEV;
}

mcf_status mcf_flow_r(const mcf_flow* f, char** out) {
  MCF_CHECK_ARG(f != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::ToDisplayString(f->flow.r())); });
}

mcf_status mcf_flow_norms(const mcf_flow* f, char** out) {
  MCF_CHECK_ARG(f != nullptr && out != nullptr);
  return Guard([&] {
    std::set<mcflow::Rational> norms;
    for (const mcflow::FlowVector& v : f->flow.values()) {
      norms.insert(mcflow::Norm(v, f->flow.norm()));
    }
    std::string text;
    for (const mcflow::Rational& n : norms) {
      if (!text.empty()) text += ' ';
      text += mcflow::ToDisplayString(n);
    }
    *out = Dup(text);
  });
}

mcf_status mcf_flow_transform(const mcf_flow* f, mcf_flow** out) {
  MCF_CHECK_ARG(f != nullptr && out != nullptr);
  return Guard([&] {
    *out = new mcf_flow{f->flow.norm() == mcflow::NormKind::kChebyshev
                            ? mcflow::ChebToManh2d(f->flow)
                            : mcflow::ManhToCheb2d(f->flow)};
  });
}

void mcf_flow_free(mcf_flow* f) { delete f; }

mcf_status mcf_decide(const mcf_graph* g, long long p, long long q, int d,
                      mcf_norm norm, long long node_budget,
                      mcf_outcome* outcome, mcf_flow** witness) {
  MCF_CHECK_ARG(g != nullptr && outcome != nullptr && ValidNorm(norm));
  MCF_CHECK_ARG(node_budget >= 0);
  return Guard([&] {
    mcflow::SearchOptions options{node_budget};
    mcflow::Decision decision;
    if (norm == MCF_CHEBYSHEV || d == 1) {
      decision = mcflow::DecideChnzf(g->graph, p, q, d, options);
    } else if (d == 2) {
      decision = mcflow::DecideMnzf2d(g->graph, p, q, options);
    } else {
      mcflow::Fail(ErrorCode::kUnsupported,
                   "Manhattan decisions are implemented for d <= 2");
    }
    *outcome = FromOutcome(decision.outcome);
    if (witness != nullptr) {
      *witness = decision.witness ? new mcf_flow{*decision.witness} : nullptr;
    }
  });
}

// Flow numbers.

mcf_status mcf_flow_number(const mcf_graph* g, int d, mcf_norm norm, int qmax,
                           long long node_budget, mcf_result** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr && ValidNorm(norm));
  MCF_CHECK_ARG(node_budget >= 0);
  return Guard([&] {
    *out = new mcf_result{mcflow::FlowNumber(g->graph, d, ToNorm(norm), qmax,
                                             mcflow::SearchOptions{node_budget})};
  });
}

int mcf_result_exact(const mcf_result* r) {
  return r != nullptr && r->result.exact();
}

mcf_status mcf_result_value(const mcf_result* r, char** out) {
  MCF_CHECK_ARG(r != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::ToDisplayString(r->result.value)); });
}

mcf_status mcf_result_bracket(const mcf_result* r, char** lo, int* lo_inclusive,
                              char** hi) {
  MCF_CHECK_ARG(r != nullptr && lo != nullptr && lo_inclusive != nullptr &&
                hi != nullptr);
  return Guard([&] {
    *lo = Dup(mcflow::ToDisplayString(r->result.lo));
    *lo_inclusive = r->result.lo_inclusive;
    *hi = Dup(mcflow::ToDisplayString(r->result.hi));
  });
}

long long mcf_result_nodes(const mcf_result* r) {
  return r == nullptr ? -1 : r->result.nodes;
}

int mcf_result_decisions(const mcf_result* r) {
  return r == nullptr ? -1 : r->result.decisions;
}

mcf_status mcf_result_caveat(const mcf_result* r, char** out) {
  MCF_CHECK_ARG(r != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(r->result.caveat); });
}

mcf_status mcf_result_witness(const mcf_result* r, mcf_flow** out) {
  MCF_CHECK_ARG(r != nullptr && out != nullptr);
  if (!r->result.witness) {
    last_error = "result has no witness";
    return MCF_ERR_ARGUMENT;
  }
  return Guard([&] { *out = new mcf_flow{*r->result.witness}; });
}

void mcf_result_free(mcf_result* r) { delete r; }

// Flow pairs.

mcf_status mcf_pair_find(const mcf_graph* g, long long p, long long q,
                         long long node_budget, mcf_pair_method method,
                         mcf_outcome* outcome, mcf_pair** out) {
  MCF_CHECK_ARG(g != nullptr && outcome != nullptr && out != nullptr);
  MCF_CHECK_ARG(method == MCF_PAIR_AUTO || method == MCF_PAIR_GENERIC ||
                method == MCF_PAIR_MATCHING);
  MCF_CHECK_ARG(node_budget >= 0);
  return Guard([&] {
    const mcflow::PairMethod m = method == MCF_PAIR_GENERIC
                                     ? mcflow::PairMethod::kGeneric
                                 : method == MCF_PAIR_MATCHING
                                     ? mcflow::PairMethod::kMatching
                                     : mcflow::PairMethod::kAuto;
    mcflow::PairSearchResult r =
        mcflow::FindTFlowPair(g->graph, p, q, node_budget, m);
    *outcome = FromOutcome(r.outcome);
    *out = r.pair ? new mcf_pair{g->graph, std::move(*r.pair), r.method}
                  : nullptr;
  });
}

mcf_status mcf_pair_parse(const mcf_graph* g, const char* text,
                          mcf_pair** out) {
  MCF_CHECK_ARG(g != nullptr && text != nullptr && out != nullptr);
  return Guard([&] {
    mcflow::FlowPair pair = mcflow::ParsePair(g->graph, text);
    mcflow::ValidatePair(g->graph, pair);
    *out = new mcf_pair{g->graph, std::move(pair), mcflow::PairMethod::kAuto};
  });
}

mcf_status mcf_pair_write(const mcf_pair* pr, char** out) {
  MCF_CHECK_ARG(pr != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::WritePair(pr->graph, pr->pair)); });
}

mcf_status mcf_pair_chnzf(const mcf_pair* pr, mcf_flow** out) {
  MCF_CHECK_ARG(pr != nullptr && out != nullptr);
  return Guard([&] {
    *out = new mcf_flow{mcflow::ChnzfFromPair(pr->graph, pr->pair)};
  });
}

mcf_status mcf_pair_nzf1d(const mcf_pair* pr, mcf_flow** out) {
  MCF_CHECK_ARG(pr != nullptr && out != nullptr);
  return Guard([&] {
    *out = new mcf_flow{mcflow::Nzf1dFromPair(pr->graph, pr->pair)};
  });
}

mcf_status mcf_pair_two_factor(const mcf_pair* pr, int* out) {
  MCF_CHECK_ARG(pr != nullptr && out != nullptr);
  return Guard(
      [&] { *out = mcflow::CheckSupportTwoFactor(pr->graph, pr->pair); });
}

mcf_status mcf_pair_method_used(const mcf_pair* pr, char** out) {
  MCF_CHECK_ARG(pr != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::PairMethodName(pr->method)); });
}

void mcf_pair_free(mcf_pair* pr) { delete pr; }

// Cycle covers.

mcf_status mcf_cover_z2cube(const mcf_graph* g, mcf_cover** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] {
    *out = new mcf_cover{g->graph, mcflow::FindZ2CubeFlow(g->graph)};
  });
}

mcf_status mcf_cover_ocdc(const mcf_graph* g, int k, long long node_budget,
                          mcf_outcome* outcome, mcf_cover** out) {
  MCF_CHECK_ARG(g != nullptr && outcome != nullptr && out != nullptr);
  MCF_CHECK_ARG(node_budget >= 0);
  return Guard([&] {
    mcflow::CoverSearchResult r = mcflow::FindKOcdc(g->graph, k, node_budget);
    *outcome = FromOutcome(r.outcome);
    *out = r.cover ? new mcf_cover{g->graph, std::move(*r.cover)} : nullptr;
  });
}

mcf_status mcf_cover_find(const mcf_graph* g, int m, int k,
                          long long node_budget, mcf_outcome* outcome,
                          mcf_cover** out) {
  MCF_CHECK_ARG(g != nullptr && outcome != nullptr && out != nullptr);
  MCF_CHECK_ARG(node_budget >= 0);
  return Guard([&] {
    mcflow::CoverSearchResult r =
        mcflow::FindCycleCover(g->graph, m, k, node_budget);
    *outcome = FromOutcome(r.outcome);
    *out = r.cover ? new mcf_cover{g->graph, std::move(*r.cover)} : nullptr;
  });
}

mcf_status mcf_cover_parse(const mcf_graph* g, const char* text,
                           mcf_cover** out) {
  MCF_CHECK_ARG(g != nullptr && text != nullptr && out != nullptr);
  return Guard([&] {
    mcflow::CycleCover cover = mcflow::ParseCover(g->graph, text);
    mcflow::ValidateCover(g->graph, cover);
    *out = new mcf_cover{g->graph, std::move(cover)};
  });
}

mcf_status mcf_cover_write(const mcf_cover* c, char** out) {
  MCF_CHECK_ARG(c != nullptr && out != nullptr);
  return Guard([&] { *out = Dup(mcflow::WriteCover(c->cover)); });
}

int mcf_cover_size(const mcf_cover* c) {
  return c == nullptr ? -1 : c->cover.size();
}

mcf_status mcf_construct(const mcf_cover* c, mcf_construction kind, int n,
                         mcf_flow** out) {
  MCF_CHECK_ARG(c != nullptr && out != nullptr);
  MCF_CHECK_ARG(kind >= MCF_BUILD_4OCDC && kind <= MCF_BUILD_HADAMARD);
  return Guard([&] {
    const mcflow::MultiGraph& g = c->graph;
    switch (kind) {
      case MCF_BUILD_4OCDC:
        *out = new mcf_flow{mcflow::FlowFrom4Ocdc(g, c->cover)};
        break;
      case MCF_BUILD_5OCDC_3D:
        *out = new mcf_flow{mcflow::FlowFrom5Ocdc3d(g, c->cover)};
        break;
      case MCF_BUILD_3COVER:
        *out = new mcf_flow{mcflow::FlowFrom3CoverQ(g, c->cover)};
        break;
      case MCF_BUILD_BASIS:
        *out = new mcf_flow{mcflow::FlowFromCoverBasis(g, c->cover, n)};
        break;
      case MCF_BUILD_HADAMARD: {
        if (c->cover.size() < 2) {
          mcflow::Fail(ErrorCode::kContract,
                       "the Hadamard construction needs at least 2 cycles");
        }
        const mcflow::HadamardMatrix h =
            mcflow::HadamardSylvester(c->cover.size() - 1);
        *out = new mcf_flow{mcflow::FlowFromCdcHadamard(g, c->cover, h)};
        break;
      }
    }
  });
}

void mcf_cover_free(mcf_cover* c) { delete c; }

mcf_status mcf_hadamard(int order, char** out) {
  MCF_CHECK_ARG(out != nullptr);
  return Guard([&] {
    const mcflow::HadamardMatrix h = mcflow::HadamardSylvester(order);
    std::string text;
    for (const std::vector<int>& row : h.rows) {
      for (int x : row) text += x > 0 ? '+' : '-';
      text += '\n';
    }
    *out = Dup(text);
  });
}

// Bounds.

mcf_status mcf_is_snark(const mcf_graph* g, int* out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] { *out = mcflow::IsSnark(g->graph); });
}

mcf_status mcf_snark_lower_bound(int n, char** out) {
  MCF_CHECK_ARG(out != nullptr);
  return Guard([&] {
    *out = Dup(mcflow::ToDisplayString(mcflow::SnarkLowerBound(n)));
  });
}

mcf_status mcf_table1_upper(int d, const char* assumption, char** out) {
  MCF_CHECK_ARG(assumption != nullptr && out != nullptr);
  return Guard([&] {
    *out = Dup(mcflow::ToDisplayString(
        mcflow::Table1Upper(d, mcflow::ParseCoverAssumption(assumption))));
  });
}

mcf_status mcf_bounds_report(const mcf_graph* g, int compute, int qmax,
                             long long node_budget, char** text,
                             char** csv_row) {
  MCF_CHECK_ARG(g != nullptr && node_budget >= 0);
  return Guard([&] {
    const mcflow::BoundsRecord record = mcflow::BuildBoundsRecord(
        g->graph, compute != 0, qmax, mcflow::SearchOptions{node_budget});
    if (text != nullptr) *text = Dup(mcflow::BoundsText(record));
    if (csv_row != nullptr) *csv_row = Dup(mcflow::BoundsCsvRow(record));
  });
}

mcf_status mcf_bounds_csv_header(char** out) {
  MCF_CHECK_ARG(out != nullptr);
  return Guard([&] { *out = Dup(mcflow::BoundsCsvHeader()); });
}

// MILP.

mcf_status mcf_milp_export(const mcf_graph* g, const char* lambda,
                           char** out) {
  MCF_CHECK_ARG(g != nullptr && out != nullptr);
  return Guard([&] {
    *out = Dup(mcflow::WriteLp(
        mcflow::BuildChebyshev2dModel(g->graph, LambdaOrDefault(lambda))));
  });
}

mcf_status mcf_milp_check(const mcf_graph* g, const char* lambda,
                          const char* lp_text, const mcf_flow* witness,
                          int* equivalent, int* violations, char** report) {
  MCF_CHECK_ARG(g != nullptr && lp_text != nullptr && equivalent != nullptr);
  return Guard([&] {
    const mcflow::LpModel expected =
        mcflow::BuildChebyshev2dModel(g->graph, LambdaOrDefault(lambda));
    const mcflow::LpModel parsed = mcflow::ParseLp(lp_text);
    *equivalent = parsed == expected;
    std::string text = std::string("model ") +
                       (*equivalent ? "equivalent" : "differs") + " (" +
                       std::to_string(parsed.constraints.size()) +
                       " constraints, " + std::to_string(parsed.binaries.size()) +
                       " binaries)\n";
    if (witness != nullptr) {
      const mcflow::LpAssignment point =
          mcflow::AssignmentFromFlow(witness->flow);
      const std::vector<std::string> violated =
          mcflow::CheckAssignment(parsed, point);
      if (violations != nullptr) *violations = static_cast<int>(violated.size());
      text += "witness objective z = " +
              mcflow::ToDisplayString(mcflow::EvaluateObjective(parsed, point)) +
              ", violated rows: " + std::to_string(violated.size()) + "\n";
      for (const std::string& name : violated) text += "  " + name + "\n";
    } else if (violations != nullptr) {
      *violations = 0;
    }
    if (report != nullptr) *report = Dup(text);
  });
}

}  // extern "C"
