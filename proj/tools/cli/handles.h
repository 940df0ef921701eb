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

#ifndef MCFLOW_TOOLS_CLI_HANDLES_H_
#define MCFLOW_TOOLS_CLI_HANDLES_H_

#include <memory>
#include <stdexcept>
#include <string>

#include "mcflow/mcflow.h"

namespace mcflow_cli {

// A failed C call, carrying its status and message.
class ApiError : public std::runtime_error {
 public:
  ApiError(mcf_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  mcf_status status() const { return status_; }

 private:
  mcf_status status_;
};

inline void Check(mcf_status status) {
  if (status != MCF_OK) throw ApiError(status, mcf_last_error());
}

struct GraphDeleter {
  void operator()(mcf_graph* p) const { mcf_graph_free(p); }
};
struct CorpusDeleter {
  void operator()(mcf_corpus* p) const { mcf_corpus_free(p); }
};
struct FlowDeleter {
  void operator()(mcf_flow* p) const { mcf_flow_free(p); }
};
struct ResultDeleter {
  void operator()(mcf_result* p) const { mcf_result_free(p); }
};
struct PairDeleter {
  void operator()(mcf_pair* p) const { mcf_pair_free(p); }
};
struct CoverDeleter {
  void operator()(mcf_cover* p) const { mcf_cover_free(p); }
};

using Graph = std::unique_ptr<mcf_graph, GraphDeleter>;
using Corpus = std::unique_ptr<mcf_corpus, CorpusDeleter>;
using Flow = std::unique_ptr<mcf_flow, FlowDeleter>;
using Result = std::unique_ptr<mcf_result, ResultDeleter>;
using Pair = std::unique_ptr<mcf_pair, PairDeleter>;
using Cover = std::unique_ptr<mcf_cover, CoverDeleter>;

// Takes ownership of a library string.
inline std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  mcf_string_free(s);
  return out;
}

// Runs a call that fills a char** and returns the string.
template <typename F>
std::string GetString(F&& call) {
  char* s = nullptr;
  Check(call(&s));
  return Take(s);
}

}  // namespace mcflow_cli

#endif  // MCFLOW_TOOLS_CLI_HANDLES_H_
