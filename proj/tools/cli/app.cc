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

#include "app.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cache.h"
#include "handles.h"
#include "mcflow/mcflow.h"

namespace mcflow_cli {
namespace {

int ExitFor(mcf_status status) {
  switch (status) {
    case MCF_OK: return kExitOk;
    case MCF_ERR_PARSE: return kExitParse;
    case MCF_ERR_NO_FLOW: return kExitNoFlow;
    case MCF_ERR_CONTRACT:
    case MCF_ERR_UNSUPPORTED: return kExitUnsupported;
    case MCF_ERR_IO: return kExitIo;
    case MCF_ERR_ARGUMENT: return kExitUsage;
    case MCF_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

int ExitForOutcome(mcf_outcome outcome) {
  switch (outcome) {
    case MCF_FOUND: return kExitOk;
    case MCF_INFEASIBLE: return kExitCheckFailed;
    case MCF_BUDGET_EXHAUSTED: return kExitBudget;
  }
  return kExitInternal;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError(MCF_ERR_IO, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw ApiError(MCF_ERR_IO, "cannot write '" + path + "'");
}

bool IsNamed(const std::string& name) {
  std::string list = GetString([](char** s) { return mcf_graph_named_list(s); });
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == name) return true;
  }
  return false;
}

// A built-in name, "g6:<graph6>", or a file (edge list or graph6) with an
// optional "@index" selecting one graph of a multi-graph graph6 file.
Graph LoadGraph(const std::string& spec) {
  mcf_graph* raw = nullptr;
  if (IsNamed(spec)) {
    Check(mcf_graph_named(spec.c_str(), &raw));
    return Graph(raw);
  }
  if (spec.rfind("g6:", 0) == 0) {
    Check(mcf_graph_from_graph6(spec.c_str() + 3, &raw));
    return Graph(raw);
  }
  std::string path = spec;
  std::optional<size_t> index;
  const size_t at = spec.rfind('@');
  if (at != std::string::npos && at + 1 < spec.size() &&
      std::all_of(spec.begin() + at + 1, spec.end(), ::isdigit)) {
    path = spec.substr(0, at);
    index = std::stoul(spec.substr(at + 1));
  }
  const std::string text = ReadFile(path);
  if (!index) {
    mcf_status status = mcf_graph_parse(text.c_str(), &raw);
    if (status == MCF_OK) return Graph(raw);
    mcf_corpus* corpus = nullptr;
    if (mcf_corpus_parse(text.c_str(), &corpus) == MCF_OK) {
      Corpus owned(corpus);
      if (mcf_corpus_size(corpus) > 1) {
        throw ApiError(MCF_ERR_PARSE,
                       "'" + path + "' holds " +
                           std::to_string(mcf_corpus_size(corpus)) +
                           " graphs; select one with " + path + "@<index>");
      }
    }
    Check(mcf_graph_parse(text.c_str(), &raw));
  }
  mcf_corpus* corpus = nullptr;
  Check(mcf_corpus_parse(text.c_str(), &corpus));
  Corpus owned(corpus);
  if (*index >= mcf_corpus_size(corpus)) {
    throw ApiError(MCF_ERR_ARGUMENT,
                   "index " + std::to_string(*index) + " out of range; '" +
                       path + "' holds " +
                       std::to_string(mcf_corpus_size(corpus)) + " graphs");
  }
  Check(mcf_corpus_get(corpus, *index, &raw));
  return Graph(raw);
}

std::string KeyOf(const mcf_graph* g) {
  return GetString([g](char** s) { return mcf_graph_key(g, s); });
}

// "p/q" or "p" with positive integers.
std::pair<long long, long long> ParseFraction(const std::string& text) {
  const size_t slash = text.find('/');
  auto number = [&](const std::string& part) -> long long {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit) ||
        part.size() > 15) {
      throw ApiError(MCF_ERR_PARSE, "'" + text + "' is not a fraction p/q");
    }
    return std::stoll(part);
  };
  const long long p = number(text.substr(0, slash));
  const long long q =
      slash == std::string::npos ? 1 : number(text.substr(slash + 1));
  if (p <= 0 || q <= 0) {
    throw ApiError(MCF_ERR_PARSE, "'" + text + "' must be positive");
  }
  return {p, q};
}

mcf_norm NormFromName(const std::string& name) {
  return name == "manhattan" ? MCF_MANHATTAN : MCF_CHEBYSHEV;
}

std::string Quantity(int d, mcf_norm norm) {
  if (d == 1) return "Phi_1";
  return "Phi_" + std::to_string(d) + (norm == MCF_MANHATTAN ? "^1" : "^inf");
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

struct CommandOutput {
  std::string payload;
  int exit_code = kExitOk;
  std::map<std::string, std::string> artifacts;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, bool use_cache)
      : out_(out),
        err_(err),
        cache_(use_cache ? CacheDirFromEnvironment() : std::string()) {}

  ResultsCache& cache() { return cache_; }

  // Prints the payload and writes requested artifacts. A cache hit replays
  // the stored record without recomputing.
  int Run(const std::string& graph_key, const std::string& command,
          const std::string& params,
          const std::map<std::string, std::string>& artifact_paths,
          const std::function<CommandOutput()>& compute) {
    CommandOutput result;
    if (std::optional<RunRecord> hit = cache_.Find(graph_key, command, params)) {
      result.payload = hit->payload;
      result.exit_code = hit->exit_code;
      result.artifacts = hit->artifacts;
      err_ << "mcflow: cached result from " << cache_.path() << "\n";
    } else {
      const auto start = std::chrono::steady_clock::now();
      result = compute();
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      cache_.Append({graph_key, command, params, result.payload,
                     result.exit_code, result.artifacts, ms, mcf_version()});
    }
    out_ << result.payload;
    for (const auto& [name, path] : artifact_paths) {
      if (path.empty()) continue;
      auto it = result.artifacts.find(name);
      if (it == result.artifacts.end()) {
        err_ << "mcflow: no " << name << " to write to " << path << "\n";
        continue;
      }
      WriteFile(path, it->second);
    }
    return result.exit_code;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  ResultsCache cache_;
};

struct Options {
  std::string graph;
  int dim = 2;
  std::string norm = "chebyshev";
  int qmax = 4;
  long long budget = 0;
  std::string witness;
  std::string flow_file;
  std::string r = "5/2";
  std::string t = "1/2";
  std::string method = "auto";
  std::string out_file;
  std::string chnzf_file;
  std::string nzf_file;
  std::string lambda = "2";
  bool check_witness = false;
  bool compute = false;
  bool csv = false;
  std::string kind;
  int k = 5;
  int m = 5;
  int n = 0;
  std::string cover_file;
  int order = 4;
  std::string corpus;
  std::string task = "flownum";
  int jobs = 1;
  std::string csv_file;
  std::string histogram_file;
  bool no_cache = false;
};

CommandOutput FlowNumberOutput(const mcf_graph* g, const Options& o) {
  mcf_result* raw = nullptr;
  Check(mcf_flow_number(g, o.dim, NormFromName(o.norm), o.qmax, o.budget, &raw));
  Result result(raw);
  std::ostringstream text;
  text << "graph " << KeyOf(g) << "\n"
       << "quantity " << Quantity(o.dim, NormFromName(o.norm)) << "\n";
  CommandOutput output;
  if (mcf_result_exact(raw)) {
    text << "exact "
         << GetString([&](char** s) { return mcf_result_value(raw, s); })
         << "\n";
  } else {
    char *lo = nullptr, *hi = nullptr;
    int inclusive = 0;
    Check(mcf_result_bracket(raw, &lo, &inclusive, &hi));
    text << "interval " << (inclusive ? "[" : "(") << Take(lo) << ","
         << Take(hi) << "]\n";
    output.exit_code = kExitBudget;
  }
  text << "qmax " << o.qmax << "\n"
       << "decisions " << mcf_result_decisions(raw) << "\n"
       << "nodes " << mcf_result_nodes(raw) << "\n";
  const std::string caveat =
      GetString([&](char** s) { return mcf_result_caveat(raw, s); });
  if (!caveat.empty()) text << "note " << caveat << "\n";
  mcf_flow* witness = nullptr;
  if (mcf_result_witness(raw, &witness) == MCF_OK) {
    Flow owned(witness);
    output.artifacts["witness"] =
        GetString([&](char** s) { return mcf_flow_write(witness, s); });
  }
  output.payload = text.str();
  return output;
}

std::string FlowNumberParams(const Options& o) {
  return "dim=" + std::to_string(o.dim) + ";norm=" + o.norm +
         ";qmax=" + std::to_string(o.qmax) + ";budget=" + std::to_string(o.budget);
}

int CmdFlownum(Runner& runner, const Options& o) {
  Graph g = LoadGraph(o.graph);
  return runner.Run(KeyOf(g.get()), "flownum", FlowNumberParams(o),
                    {{"witness", o.witness}},
                    [&] { return FlowNumberOutput(g.get(), o); });
}

int CmdDecide(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  const auto [p, q] = ParseFraction(o.r);
  mcf_outcome outcome = MCF_INFEASIBLE;
  mcf_flow* witness = nullptr;
  Check(mcf_decide(g.get(), p, q, o.dim, NormFromName(o.norm), o.budget,
                   &outcome, &witness));
  Flow owned(witness);
  out << "graph " << KeyOf(g.get()) << "\n"
      << "r " << o.r << " dim " << o.dim << " norm " << o.norm << "\n"
      << mcf_outcome_name(outcome) << "\n";
  if (witness != nullptr && !o.witness.empty()) {
    WriteFile(o.witness,
              GetString([&](char** s) { return mcf_flow_write(witness, s); }));
  }
  return ExitForOutcome(outcome);
}

int CmdVerify(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  const std::string text = ReadFile(o.flow_file);
  mcf_flow* raw = nullptr;
  Check(mcf_flow_parse(g.get(), text.c_str(), &raw));
  Flow flow(raw);
  int valid = 0;
  char* report = nullptr;
  Check(mcf_flow_verify(raw, &valid, &report));
  out << "flow dim " << mcf_flow_dimension(raw) << " norm "
      << (mcf_flow_norm(raw) == MCF_MANHATTAN ? "manhattan" : "chebyshev")
      << " r " << GetString([&](char** s) { return mcf_flow_r(raw, s); })
      << "\n"
      << Take(report);
  return valid ? kExitOk : kExitCheckFailed;
}

CommandOutput PairOutput(const mcf_graph* g, const Options& o) {
  const auto [p, q] = ParseFraction(o.t);
  const mcf_pair_method method = o.method == "generic"    ? MCF_PAIR_GENERIC
                                 : o.method == "matching" ? MCF_PAIR_MATCHING
                                                          : MCF_PAIR_AUTO;
  mcf_outcome outcome = MCF_INFEASIBLE;
  mcf_pair* raw = nullptr;
  Check(mcf_pair_find(g, p, q, o.budget, method, &outcome, &raw));
  Pair pair(raw);
  CommandOutput output;
  std::ostringstream text;
  text << "graph " << KeyOf(g) << "\n"
       << "t " << o.t << "\n"
       << "pair " << mcf_outcome_name(outcome) << "\n";
  output.exit_code = ExitForOutcome(outcome);
  if (raw != nullptr) {
    text << "method "
         << GetString([&](char** s) { return mcf_pair_method_used(raw, s); })
         << "\n";
    output.artifacts["pair"] =
        GetString([&](char** s) { return mcf_pair_write(raw, s); });
    bool all_valid = true;
    for (const char* which : {"chnzf", "nzf"}) {
      mcf_flow* flow = nullptr;
      Check(std::string(which) == "chnzf" ? mcf_pair_chnzf(raw, &flow)
                                          : mcf_pair_nzf1d(raw, &flow));
      Flow owned(flow);
      int valid = 0;
      Check(mcf_flow_verify(flow, &valid, nullptr));
      all_valid = all_valid && valid;
      const std::string r =
          GetString([&](char** s) { return mcf_flow_r(flow, s); });
      text << which << " (" << r << "," << mcf_flow_dimension(flow) << ") "
           << (valid ? "valid" : "INVALID") << "\n";
      output.artifacts[which] =
          GetString([&](char** s) { return mcf_flow_write(flow, s); });
    }
    int two_factor = 0;
    Check(mcf_pair_two_factor(raw, &two_factor));
    text << "support two-factor " << (two_factor ? "yes" : "no") << "\n";
    if (!all_valid) output.exit_code = kExitCheckFailed;
  }
  output.payload = text.str();
  return output;
}

int CmdPair(Runner& runner, const Options& o) {
  Graph g = LoadGraph(o.graph);
  ParseFraction(o.t);
  return runner.Run(KeyOf(g.get()), "pair",
                    "t=" + o.t + ";method=" + o.method +
                        ";budget=" + std::to_string(o.budget),
                    {{"pair", o.out_file},
                     {"chnzf", o.chnzf_file},
                     {"nzf", o.nzf_file}},
                    [&] { return PairOutput(g.get(), o); });
}

int CmdExportMilp(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  const std::string lp = GetString(
      [&](char** s) { return mcf_milp_export(g.get(), o.lambda.c_str(), s); });
  Flow witness;
  if (o.check_witness) {
    mcf_result* raw = nullptr;
    Check(mcf_flow_number(g.get(), 2, MCF_CHEBYSHEV, o.qmax, o.budget, &raw));
    Result result(raw);
    mcf_flow* w = nullptr;
    Check(mcf_result_witness(raw, &w));
    witness.reset(w);
  }
  int equivalent = 0, violations = 0;
  char* report = nullptr;
  Check(mcf_milp_check(g.get(), o.lambda.c_str(), lp.c_str(), witness.get(),
                       &equivalent, &violations, &report));
  const std::string summary = Take(report);
  if (o.out_file.empty()) {
    out << lp;
  } else {
    WriteFile(o.out_file, lp);
    out << "wrote " << o.out_file << "\n" << summary;
  }
  return equivalent && violations == 0 ? kExitOk : kExitCheckFailed;
}

int CmdBounds(Runner& runner, const Options& o) {
  Graph g = LoadGraph(o.graph);
  const std::string params = std::string("compute=") + (o.compute ? "1" : "0") +
                             ";qmax=" + std::to_string(o.qmax) +
                             ";budget=" + std::to_string(o.budget) +
                             ";csv=" + (o.csv ? "1" : "0");
  return runner.Run(KeyOf(g.get()), "bounds", params, {}, [&] {
    char *text = nullptr, *row = nullptr;
    Check(mcf_bounds_report(g.get(), o.compute, o.qmax, o.budget, &text, &row));
    CommandOutput output;
    const std::string body = Take(text), csv_row = Take(row);
    if (o.csv) {
      output.payload =
          GetString([](char** s) { return mcf_bounds_csv_header(s); }) + "\n" +
          csv_row + "\n";
    } else {
      output.payload = body;
    }
    return output;
  });
}

Cover FindCover(const mcf_graph* g, const Options& o, mcf_outcome* outcome) {
  mcf_cover* raw = nullptr;
  *outcome = MCF_FOUND;
  if (o.kind == "z2cube") {
    Check(mcf_cover_z2cube(g, &raw));
  } else if (o.kind == "ocdc") {
    Check(mcf_cover_ocdc(g, o.k, o.budget, outcome, &raw));
  } else {
    Check(mcf_cover_find(g, o.m, o.k, o.budget, outcome, &raw));
  }
  return Cover(raw);
}

int CmdCover(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  mcf_outcome outcome = MCF_FOUND;
  Cover cover = FindCover(g.get(), o, &outcome);
  out << "graph " << KeyOf(g.get()) << "\n"
      << "cover " << o.kind << " " << mcf_outcome_name(outcome) << "\n";
  if (cover) {
    const std::string text =
        GetString([&](char** s) { return mcf_cover_write(cover.get(), s); });
    if (o.out_file.empty()) {
      out << text;
    } else {
      WriteFile(o.out_file, text);
    }
  } else if (outcome == MCF_INFEASIBLE) {
    out << "exhaustive: no such cover exists\n";
  }
  return ExitForOutcome(outcome);
}

int CmdConstruct(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  static const std::map<std::string, mcf_construction> kKinds = {
      {"4ocdc", MCF_BUILD_4OCDC},   {"5ocdc3d", MCF_BUILD_5OCDC_3D},
      {"3cover", MCF_BUILD_3COVER}, {"basis", MCF_BUILD_BASIS},
      {"hadamard", MCF_BUILD_HADAMARD}};
  const mcf_construction kind = kKinds.at(o.kind);
  Cover cover;
  if (!o.cover_file.empty()) {
    const std::string text = ReadFile(o.cover_file);
    mcf_cover* raw = nullptr;
    Check(mcf_cover_parse(g.get(), text.c_str(), &raw));
    cover.reset(raw);
  } else {
    Options search = o;
    switch (kind) {
      case MCF_BUILD_4OCDC: search.kind = "ocdc"; search.k = 4; break;
      case MCF_BUILD_5OCDC_3D: search.kind = "ocdc"; search.k = 5; break;
      case MCF_BUILD_3COVER: search.kind = "z2cube"; break;
      case MCF_BUILD_HADAMARD: search.kind = "cdc"; search.k = 2; break;
      case MCF_BUILD_BASIS: search.kind = "cdc"; break;
    }
    mcf_outcome outcome = MCF_FOUND;
    cover = FindCover(g.get(), search, &outcome);
    if (!cover) {
      out << "no cover for the " << o.kind << " construction: "
          << mcf_outcome_name(outcome) << "\n";
      return ExitForOutcome(outcome);
    }
  }
  mcf_flow* raw = nullptr;
  Check(mcf_construct(cover.get(), kind, o.n, &raw));
  Flow flow(raw);
  int valid = 0;
  Check(mcf_flow_verify(raw, &valid, nullptr));
  out << "graph " << KeyOf(g.get()) << "\n"
      << "construction " << o.kind << " from " << mcf_cover_size(cover.get())
      << " cycles\n"
      << "flow dim " << mcf_flow_dimension(raw) << " norm "
      << (mcf_flow_norm(raw) == MCF_MANHATTAN ? "manhattan" : "chebyshev")
      << " r " << GetString([&](char** s) { return mcf_flow_r(raw, s); })
      << " " << (valid ? "valid" : "INVALID") << "\n"
      << "edge norms "
      << GetString([&](char** s) { return mcf_flow_norms(raw, s); }) << "\n";
  if (!o.out_file.empty()) {
    WriteFile(o.out_file,
              GetString([&](char** s) { return mcf_flow_write(raw, s); }));
  }
  return valid ? kExitOk : kExitCheckFailed;
}

int CmdInfo(std::ostream& out, const Options& o) {
  Graph g = LoadGraph(o.graph);
  mcf_graph_info info{};
  Check(mcf_graph_describe(g.get(), &info));
  auto yes = [](int v) { return v ? "yes" : "no"; };
  out << "key " << KeyOf(g.get()) << "\n"
      << "vertices " << info.vertices << "\n"
      << "edges " << info.edges << "\n"
      << "cubic " << yes(info.cubic) << "\n"
      << "simple " << yes(info.simple) << "\n"
      << "connected " << yes(info.connected) << "\n"
      << "2-connected " << yes(info.two_connected) << "\n"
      << "bridges " << info.bridges << "\n"
      << "girth " << info.girth << "\n";
  if (info.colourable >= 0) {
    out << "3-edge-colourable " << yes(info.colourable) << "\n"
        << "perfect matchings " << info.perfect_matchings << "\n";
  }
  out << "snark " << yes(info.snark) << "\n";
  if (info.simple) {
    out << "graph6 "
        << GetString([&](char** s) { return mcf_graph_to_graph6(g.get(), s); })
        << "\n";
  }
  return kExitOk;
}

int CmdHadamard(std::ostream& out, const Options& o) {
  out << GetString([&](char** s) { return mcf_hadamard(o.order, s); });
  return kExitOk;
}

// Histogram of exact Chebyshev values by order, shaped like the snark
// tables: one row per order, one column per value 2 + 1/k.
std::string Histogram(const std::vector<std::vector<std::string>>& rows) {
  static const std::vector<std::pair<std::string, std::string>> kColumns = {
      {"2", "2"}, {"9/4", "2+1/4"}, {"7/3", "2+1/3"}, {"5/2", "2+1/2"}};
  std::map<int, std::vector<int>> counts;
  for (const std::vector<std::string>& row : rows) {
    // row: key, n, m, snark, status, value, ...
    const int n = std::stoi(row[1]);
    std::vector<int>& c = counts[n];
    c.resize(kColumns.size() + 2, 0);
    size_t column = kColumns.size();
    if (row[4] == "exact") {
      for (size_t i = 0; i < kColumns.size(); ++i) {
        if (row[5] == kColumns[i].first) column = i;
      }
    }
    ++c[column];
    ++c.back();
  }
  std::ostringstream out;
  out << "order";
  for (const auto& col : kColumns) out << ',' << col.second;
  out << ",other,total\n";
  for (const auto& [n, c] : counts) {
    out << n;
    for (int x : c) out << ',' << x;
    out << "\n";
  }
  return out.str();
}

CommandOutput BatchFlownumRow(const mcf_graph* g, const Options& o) {
  CommandOutput row;
  std::string snark = "";
  std::string fields[6] = {"error", "", "", "", "", ""};
  try {
    int is_snark = 0;
    Check(mcf_is_snark(g, &is_snark));
    snark = is_snark ? "true" : "false";
    mcf_result* raw = nullptr;
    Check(mcf_flow_number(g, o.dim, NormFromName(o.norm), o.qmax, o.budget,
                          &raw));
    Result result(raw);
    char *lo = nullptr, *hi = nullptr;
    int inclusive = 0;
    Check(mcf_result_bracket(raw, &lo, &inclusive, &hi));
    const std::string bracket = std::string(inclusive ? "[" : "(") + Take(lo) +
                                ";" + Take(hi) + "]";
    if (mcf_result_exact(raw)) {
      fields[0] = "exact";
      fields[1] = GetString([&](char** s) { return mcf_result_value(raw, s); });
    } else {
      fields[0] = "interval";
      fields[2] = bracket;
    }
    fields[3] = std::to_string(mcf_result_decisions(raw));
    fields[4] = std::to_string(mcf_result_nodes(raw));
  } catch (const ApiError& e) {
    fields[0] = "error";
    fields[5] = std::string(mcf_status_name(e.status())) + ": " + e.what();
  }
  row.payload = KeyOf(g) + "," + std::to_string(mcf_graph_vertex_count(g)) +
                "," + std::to_string(mcf_graph_edge_count(g)) + "," + snark;
  for (const std::string& f : fields) row.payload += "," + CsvField(f);
  return row;
}

CommandOutput BatchBoundsRow(const mcf_graph* g, const Options& o) {
  CommandOutput row;
  char* csv = nullptr;
  mcf_status status =
      mcf_bounds_report(g, o.compute, o.qmax, o.budget, nullptr, &csv);
  if (status == MCF_OK) {
    row.payload = Take(csv);
  } else {
    row.payload = KeyOf(g) + "," + std::to_string(mcf_graph_vertex_count(g)) +
                  ",error," + CsvField(mcf_last_error());
  }
  return row;
}

int CmdBatch(Runner& runner, std::ostream& out, std::ostream& err,
             const Options& o) {
  const std::string text = ReadFile(o.corpus);
  mcf_corpus* raw = nullptr;
  Check(mcf_corpus_parse(text.c_str(), &raw));
  Corpus corpus(raw);
  const size_t count = mcf_corpus_size(raw);
  const bool bounds = o.task == "bounds";
  const std::string command = bounds ? "batch-bounds" : "batch-flownum";
  const std::string params =
      bounds ? std::string("compute=") + (o.compute ? "1" : "0") +
                   ";qmax=" + std::to_string(o.qmax) +
                   ";budget=" + std::to_string(o.budget)
             : FlowNumberParams(o);

  std::vector<std::string> keys(count);
  std::vector<std::optional<std::string>> rows(count);
  for (size_t i = 0; i < count; ++i) {
    mcf_graph* g = nullptr;
    Check(mcf_corpus_get(raw, i, &g));
    Graph owned(g);
    keys[i] = KeyOf(g);
    if (std::optional<RunRecord> hit = runner.cache().Find(keys[i], command, params)) {
      rows[i] = hit->payload;
    }
  }
  std::vector<char> computed(count, 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) {
      if (rows[i]) continue;
      mcf_graph* g = nullptr;
      if (mcf_corpus_get(raw, i, &g) != MCF_OK) continue;
      Graph owned(g);
      rows[i] = bounds ? BatchBoundsRow(g, o).payload
                       : BatchFlownumRow(g, o).payload;
      computed[i] = 1;
    }
  };
  const int jobs = std::max(1, o.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::ostringstream csv;
  if (bounds) {
    csv << "index," << GetString([](char** s) { return mcf_bounds_csv_header(s); })
        << "\n";
  } else {
    csv << "index,key,n,m,snark,status,value,bracket,decisions,nodes,error\n";
  }
  std::vector<std::vector<std::string>> parsed;
  int failures = 0;
  for (size_t i = 0; i < count; ++i) {
    csv << i << "," << *rows[i] << "\n";
    std::vector<std::string> fields = SplitCsv(*rows[i]);
    if (!bounds) {
      if (fields[4] != "exact") ++failures;
      parsed.push_back(std::move(fields));
    }
    if (computed[i]) {
      runner.cache().Append({keys[i], command, params, *rows[i], 0, {}, 0,
                             mcf_version()});
    }
  }
  if (o.csv_file.empty()) {
    out << csv.str();
  } else {
    WriteFile(o.csv_file, csv.str());
  }
  if (!bounds) {
    const std::string table = Histogram(parsed);
    if (!o.histogram_file.empty()) {
      WriteFile(o.histogram_file, table);
    } else if (!o.csv_file.empty()) {
      out << table;
    } else {
      err << table;
    }
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

void AddGraph(CLI::App* cmd, Options& o) {
  cmd->add_option("graph", o.graph,
                  "built-in name, g6:<graph6>, or file[@index]")
      ->required();
}

void AddFlowOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--dim,-d", o.dim, "dimension d")->check(CLI::Range(1, 16));
  cmd->add_option("--norm", o.norm, "manhattan or chebyshev")
      ->check(CLI::IsMember({"manhattan", "chebyshev"}));
  cmd->add_option("--budget", o.budget, "search nodes per decision, 0 = none")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Multidimensional nowhere-zero flows on graphs", "mcflow"};
  app.set_version_flag("--version", std::string(mcf_version()));
  app.require_subcommand(1);
  app.add_flag("--no-cache", o.no_cache, "ignore MCFLOW_CACHE_DIR");

  CLI::App* flownum = app.add_subcommand("flownum", "compute a flow number");
  AddGraph(flownum, o);
  AddFlowOptions(flownum, o);
  flownum->add_option("--qmax", o.qmax, "largest denominator searched")
      ->check(CLI::Range(1, 64));
  flownum->add_option("--witness", o.witness, "write the optimal flow here");

  CLI::App* decide = app.add_subcommand("decide", "decide one window r");
  AddGraph(decide, o);
  AddFlowOptions(decide, o);
  decide->add_option("--r", o.r, "window r as p/q")->required();
  decide->add_option("--witness", o.witness, "write the flow here");

  CLI::App* batch = app.add_subcommand("batch", "run a task over a corpus");
  batch->add_option("corpus", o.corpus, "graph6 file, one graph per line")
      ->required();
  batch->add_option("--task", o.task, "flownum or bounds")
      ->check(CLI::IsMember({"flownum", "bounds"}));
  AddFlowOptions(batch, o);
  batch->add_option("--qmax", o.qmax, "largest denominator searched")
      ->check(CLI::Range(1, 64));
  batch->add_flag("--compute", o.compute, "bounds task: compute flow numbers");
  batch->add_option("--jobs,-j", o.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  batch->add_option("--csv", o.csv_file, "CSV output file (default stdout)");
  batch->add_option("--histogram", o.histogram_file,
                    "histogram output file (default: after the CSV file "
                    "summary, or stderr)");

  CLI::App* verify = app.add_subcommand("verify", "check a flow file");
  AddGraph(verify, o);
  verify->add_option("flow", o.flow_file, "flow file")->required();

  CLI::App* pair = app.add_subcommand("pair", "search for a t-flow-pair");
  AddGraph(pair, o);
  pair->add_option("--t", o.t, "t = p/q with 0 < t <= 1");
  pair->add_option("--method", o.method, "auto, generic or matching")
      ->check(CLI::IsMember({"auto", "generic", "matching"}));
  pair->add_option("--budget", o.budget, "total search nodes, 0 = none")
      ->check(CLI::NonNegativeNumber);
  pair->add_option("--out", o.out_file, "write the pair here");
  pair->add_option("--chnzf", o.chnzf_file, "write the 2-D flow here");
  pair->add_option("--nzf", o.nzf_file, "write the 1-D flow here");

  CLI::App* milp = app.add_subcommand("export-milp", "write the LP model");
  AddGraph(milp, o);
  milp->add_option("--lambda", o.lambda, "coordinate bound (decimal)");
  milp->add_option("--out", o.out_file, "LP file (default stdout)");
  milp->add_flag("--check-witness", o.check_witness,
                 "substitute an optimal flow into every row");
  milp->add_option("--qmax", o.qmax, "for --check-witness")
      ->check(CLI::Range(1, 64));
  milp->add_option("--budget", o.budget, "for --check-witness")
      ->check(CLI::NonNegativeNumber);

  CLI::App* bounds = app.add_subcommand("bounds", "bounds report");
  AddGraph(bounds, o);
  bounds->add_flag("--compute", o.compute, "also compute Phi_1 and Phi_2^inf");
  bounds->add_option("--qmax", o.qmax, "largest denominator searched")
      ->check(CLI::Range(1, 64));
  bounds->add_option("--budget", o.budget, "search nodes per decision")
      ->check(CLI::NonNegativeNumber);
  bounds->add_flag("--csv", o.csv, "CSV header and row");

  CLI::App* cover = app.add_subcommand("cover", "search for a cycle cover");
  AddGraph(cover, o);
  cover->add_option("--kind", o.kind, "z2cube, ocdc or cdc")
      ->required()
      ->check(CLI::IsMember({"z2cube", "ocdc", "cdc"}));
  cover->add_option("--k", o.k, "ocdc: cycles; cdc: multiplicity");
  cover->add_option("--m", o.m, "cdc: number of cycles");
  cover->add_option("--budget", o.budget, "search nodes, 0 = none")
      ->check(CLI::NonNegativeNumber);
  cover->add_option("--out", o.out_file, "cover file (default stdout)");

  CLI::App* construct =
      app.add_subcommand("construct", "build a flow from a cycle cover");
  AddGraph(construct, o);
  construct->add_option("--kind", o.kind, "4ocdc, 5ocdc3d, 3cover, basis, hadamard")
      ->required()
      ->check(CLI::IsMember({"4ocdc", "5ocdc3d", "3cover", "basis", "hadamard"}));
  construct->add_option("--cover", o.cover_file,
                        "cover file (default: search for one)");
  construct->add_option("--n", o.n, "basis: cycles left out");
  construct->add_option("--m", o.m, "cover search: number of cycles");
  construct->add_option("--k", o.k, "basis cover search: multiplicity");
  construct->add_option("--budget", o.budget, "cover search nodes")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--out", o.out_file, "write the flow here");

  CLI::App* info = app.add_subcommand("info", "graph summary");
  AddGraph(info, o);

  CLI::App* hadamard = app.add_subcommand("hadamard", "print a Hadamard matrix");
  hadamard->add_option("--order", o.order, "1, 2, 4, 8, ...");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(out, err, !o.no_cache);
  try {
    if (*flownum) return CmdFlownum(runner, o);
    if (*decide) return CmdDecide(out, o);
    if (*batch) return CmdBatch(runner, out, err, o);
    if (*verify) return CmdVerify(out, o);
    if (*pair) return CmdPair(runner, o);
    if (*milp) return CmdExportMilp(out, o);
    if (*bounds) return CmdBounds(runner, o);
    if (*cover) return CmdCover(out, o);
    if (*construct) return CmdConstruct(out, o);
    if (*info) return CmdInfo(out, o);
    if (*hadamard) return CmdHadamard(out, o);
  } catch (const ApiError& e) {
    err << "mcflow: " << mcf_status_name(e.status()) << ": " << e.what() << "\n";
    return ExitFor(e.status());
  } catch (const std::exception& e) {
    err << "mcflow: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mcflow_cli
