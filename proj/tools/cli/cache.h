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

#ifndef MCFLOW_TOOLS_CLI_CACHE_H_
#define MCFLOW_TOOLS_CLI_CACHE_H_

#include <map>
#include <optional>
#include <string>

namespace mcflow_cli {

// One line of the results store.
struct RunRecord {
  std::string graph_key;
  std::string command;
  std::string params;
  std::string payload;
  int exit_code = 0;
  std::map<std::string, std::string> artifacts;
  double wall_ms = 0;
  std::string version;
};

// Append-only JSON-lines store at <dir>/cache.jsonl. Lookups match graph
// key, command, parameters and tool version; the last match wins.
class ResultsCache {
 public:
  // Disabled when dir is empty.
  explicit ResultsCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  std::string path() const;

  std::optional<RunRecord> Find(const std::string& graph_key,
                                const std::string& command,
                                const std::string& params);
  void Append(const RunRecord& record);

 private:
  void Load();

  std::string dir_;
  bool loaded_ = false;
  std::map<std::string, RunRecord> records_;
};

// MCFLOW_CACHE_DIR, or empty.
std::string CacheDirFromEnvironment();

}  // namespace mcflow_cli

#endif  // MCFLOW_TOOLS_CLI_CACHE_H_
