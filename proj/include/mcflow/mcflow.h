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

// C interface to the mcflow library. Objects are opaque handles released
// with the matching *_free function. Every function returning mcf_status
// sets a thread-local message readable with mcf_last_error() on failure.
// Strings returned through char** are owned by the caller and released
// with mcf_string_free(). Rationals cross the boundary as "a" or "a/b".

#ifndef MCFLOW_MCFLOW_H_
#define MCFLOW_MCFLOW_H_

#include <stddef.h>

#if defined(MCFLOW_BUILDING_LIBRARY)
#define MCF_API __attribute__((visibility("default")))
#else
#define MCF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MCF_OK = 0,
  MCF_ERR_PARSE = 1,
  MCF_ERR_NO_FLOW = 2,      // the graph has a bridge
  MCF_ERR_CONTRACT = 3,     // precondition or invariant violated
  MCF_ERR_UNSUPPORTED = 4,
  MCF_ERR_IO = 5,
  MCF_ERR_INTERNAL = 6,
  MCF_ERR_ARGUMENT = 7,     // null pointer or bad enum value
} mcf_status;

typedef enum {
  MCF_FOUND = 0,
  MCF_INFEASIBLE = 1,       // proven: nothing exists
  MCF_BUDGET_EXHAUSTED = 2, // gave up; not a proof
} mcf_outcome;

typedef enum { MCF_MANHATTAN = 0, MCF_CHEBYSHEV = 1 } mcf_norm;

typedef enum {
  MCF_PAIR_AUTO = 0,
  MCF_PAIR_GENERIC = 1,
  MCF_PAIR_MATCHING = 2,
} mcf_pair_method;

typedef enum {
  MCF_BUILD_4OCDC = 0,     // Chebyshev, d = 2, r = 2
  MCF_BUILD_5OCDC_3D = 1,  // Manhattan, d = 3, r = 2
  MCF_BUILD_3COVER = 2,    // Manhattan, d = 3, r = 5/2
  MCF_BUILD_BASIS = 3,     // Manhattan, d = m - n
  MCF_BUILD_HADAMARD = 4,  // Manhattan, d = m - 1, Sylvester matrix
} mcf_construction;

typedef struct mcf_graph mcf_graph;
typedef struct mcf_corpus mcf_corpus;
typedef struct mcf_flow mcf_flow;
typedef struct mcf_result mcf_result;
typedef struct mcf_pair mcf_pair;
typedef struct mcf_cover mcf_cover;

MCF_API const char* mcf_version(void);
MCF_API const char* mcf_last_error(void);
MCF_API const char* mcf_status_name(mcf_status status);
MCF_API const char* mcf_outcome_name(mcf_outcome outcome);
MCF_API void mcf_string_free(char* s);

// Graphs.
MCF_API mcf_status mcf_graph_named(const char* name, mcf_graph** out);
// Comma separated list of built-in names.
MCF_API mcf_status mcf_graph_named_list(char** out);
MCF_API mcf_status mcf_graph_from_graph6(const char* text, mcf_graph** out);
MCF_API mcf_status mcf_graph_from_edge_list(const char* text, mcf_graph** out);
// Edge list when the first data line is "n m", otherwise one graph6 line.
MCF_API mcf_status mcf_graph_parse(const char* text, mcf_graph** out);
MCF_API mcf_status mcf_graph_copy(const mcf_graph* g, mcf_graph** out);
MCF_API void mcf_graph_free(mcf_graph* g);
MCF_API int mcf_graph_vertex_count(const mcf_graph* g);
MCF_API int mcf_graph_edge_count(const mcf_graph* g);
MCF_API mcf_status mcf_graph_edge(const mcf_graph* g, int id, int* tail,
                                  int* head);
MCF_API mcf_status mcf_graph_key(const mcf_graph* g, char** out);
MCF_API mcf_status mcf_graph_to_graph6(const mcf_graph* g, char** out);
MCF_API mcf_status mcf_graph_to_edge_list(const mcf_graph* g, char** out);

typedef struct {
  int vertices;
  int edges;
  int cubic;
  int simple;
  int connected;
  int two_connected;
  int bridges;       // number of bridges
  int girth;         // 0 for forests
  int colourable;    // 3-edge-colourable; -1 when not loopless cubic
  int snark;
  int perfect_matchings;  // -1 when not loopless cubic
} mcf_graph_info;

MCF_API mcf_status mcf_graph_describe(const mcf_graph* g, mcf_graph_info* out);

// graph6 corpora, one graph per line.
MCF_API mcf_status mcf_corpus_parse(const char* text, mcf_corpus** out);
MCF_API size_t mcf_corpus_size(const mcf_corpus* c);
MCF_API mcf_status mcf_corpus_get(const mcf_corpus* c, size_t index,
                                  mcf_graph** out);
MCF_API void mcf_corpus_free(mcf_corpus* c);

// Flows.
MCF_API mcf_status mcf_flow_parse(const mcf_graph* g, const char* text,
                                  mcf_flow** out);
MCF_API mcf_status mcf_flow_write(const mcf_flow* f, char** out);
// valid gets 1 or 0; report (optional) a readable account.
MCF_API mcf_status mcf_flow_verify(const mcf_flow* f, int* valid,
                                   char** report);
MCF_API int mcf_flow_dimension(const mcf_flow* f);
MCF_API mcf_norm mcf_flow_norm(const mcf_flow* f);
MCF_API mcf_status mcf_flow_r(const mcf_flow* f, char** out);
// Distinct edge norms in increasing order, space separated.
MCF_API mcf_status mcf_flow_norms(const mcf_flow* f, char** out);
// 2-D Chebyshev <-> Manhattan transform.
MCF_API mcf_status mcf_flow_transform(const mcf_flow* f, mcf_flow** out);
MCF_API void mcf_flow_free(mcf_flow* f);

// Decides whether an (r, d) flow exists for r = p/q.
MCF_API mcf_status mcf_decide(const mcf_graph* g, long long p, long long q,
                              int d, mcf_norm norm, long long node_budget,
                              mcf_outcome* outcome, mcf_flow** witness);

// Flow numbers. node_budget applies per decision; 0 = unlimited.
MCF_API mcf_status mcf_flow_number(const mcf_graph* g, int d, mcf_norm norm,
                                   int qmax, long long node_budget,
                                   mcf_result** out);
MCF_API int mcf_result_exact(const mcf_result* r);
MCF_API mcf_status mcf_result_value(const mcf_result* r, char** out);
MCF_API mcf_status mcf_result_bracket(const mcf_result* r, char** lo,
                                      int* lo_inclusive, char** hi);
MCF_API long long mcf_result_nodes(const mcf_result* r);
MCF_API int mcf_result_decisions(const mcf_result* r);
MCF_API mcf_status mcf_result_caveat(const mcf_result* r, char** out);
// MCF_ERR_ARGUMENT when there is no witness.
MCF_API mcf_status mcf_result_witness(const mcf_result* r, mcf_flow** out);
MCF_API void mcf_result_free(mcf_result* r);

// Flow pairs.
MCF_API mcf_status mcf_pair_find(const mcf_graph* g, long long p, long long q,
                                 long long node_budget, mcf_pair_method method,
                                 mcf_outcome* outcome, mcf_pair** out);
MCF_API mcf_status mcf_pair_parse(const mcf_graph* g, const char* text,
                                  mcf_pair** out);
MCF_API mcf_status mcf_pair_write(const mcf_pair* pr, char** out);
MCF_API mcf_status mcf_pair_chnzf(const mcf_pair* pr, mcf_flow** out);
MCF_API mcf_status mcf_pair_nzf1d(const mcf_pair* pr, mcf_flow** out);
MCF_API mcf_status mcf_pair_two_factor(const mcf_pair* pr, int* out);
MCF_API mcf_status mcf_pair_method_used(const mcf_pair* pr, char** out);
MCF_API void mcf_pair_free(mcf_pair* pr);

// Cycle covers.
MCF_API mcf_status mcf_cover_z2cube(const mcf_graph* g, mcf_cover** out);
MCF_API mcf_status mcf_cover_ocdc(const mcf_graph* g, int k,
                                  long long node_budget, mcf_outcome* outcome,
                                  mcf_cover** out);
MCF_API mcf_status mcf_cover_find(const mcf_graph* g, int m, int k,
                                  long long node_budget, mcf_outcome* outcome,
                                  mcf_cover** out);
MCF_API mcf_status mcf_cover_parse(const mcf_graph* g, const char* text,
                                   mcf_cover** out);
MCF_API mcf_status mcf_cover_write(const mcf_cover* c, char** out);
MCF_API int mcf_cover_size(const mcf_cover* c);
// n is only read by MCF_BUILD_BASIS.
MCF_API mcf_status mcf_construct(const mcf_cover* c, mcf_construction kind,
                                 int n, mcf_flow** out);
MCF_API void mcf_cover_free(mcf_cover* c);

// Hadamard matrix rows as lines of '+' and '-'.
MCF_API mcf_status mcf_hadamard(int order, char** out);

// Bounds. assumption: "bridgeless", "5cdc", "5ocdc" or "4ocdc".
MCF_API mcf_status mcf_is_snark(const mcf_graph* g, int* out);
MCF_API mcf_status mcf_snark_lower_bound(int n, char** out);
MCF_API mcf_status mcf_table1_upper(int d, const char* assumption, char** out);
// With compute set, also computes both flow numbers at qmax.
MCF_API mcf_status mcf_bounds_report(const mcf_graph* g, int compute, int qmax,
                                     long long node_budget, char** text,
                                     char** csv_row);
MCF_API mcf_status mcf_bounds_csv_header(char** out);

// Mixed-integer model for the 2-D Chebyshev flow number. lambda is a
// decimal string, NULL for 2.
MCF_API mcf_status mcf_milp_export(const mcf_graph* g, const char* lambda,
                                   char** out);
// Re-parses lp_text and compares it with a freshly built model for g
// (equivalent gets 1 or 0). When witness is given (a 2-D Chebyshev flow on
// g), substitutes it and counts violated rows; report lists them.
MCF_API mcf_status mcf_milp_check(const mcf_graph* g, const char* lambda,
                                  const char* lp_text, const mcf_flow* witness,
                                  int* equivalent, int* violations,
                                  char** report);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // MCFLOW_MCFLOW_H_
