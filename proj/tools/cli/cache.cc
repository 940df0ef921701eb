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

#include "cache.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "handles.h"
#include "json.hpp"
#include "mcflow/mcflow.h"

namespace mcflow_cli {
namespace {

using nlohmann::json;

std::string LookupKey(const std::string& graph_key, const std::string& command,
                      const std::string& params, const std::string& version) {
  return json::array({graph_key, command, params, version}).dump();
}

}  // namespace

ResultsCache::ResultsCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultsCache::path() const {
  return (std::filesystem::path(dir_) / "cache.jsonl").string();
}

void ResultsCache::Load() {
  loaded_ = true;
  std::ifstream in(path());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A truncated or foreign line is skipped rather than fatal.
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      RunRecord r;
      r.graph_key = j.at("graph").get<std::string>();
      r.command = j.at("command").get<std::string>();
      r.params = j.at("params").get<std::string>();
      r.payload = j.at("payload").get<std::string>();
      r.exit_code = j.at("exit").get<int>();
      r.artifacts = j.value("artifacts", std::map<std::string, std::string>{});
      r.wall_ms = j.value("wall_ms", 0.0);
      r.version = j.at("version").get<std::string>();
      records_[LookupKey(r.graph_key, r.command, r.params, r.version)] = r;
    } catch (const json::exception&) {
      continue;
    }
  }
}

std::optional<RunRecord> ResultsCache::Find(const std::string& graph_key,
                                            const std::string& command,
                                            const std::string& params) {
  if (!enabled()) return std::nullopt;
  if (!loaded_) Load();
  auto it = records_.find(LookupKey(graph_key, command, params, mcf_version()));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultsCache::Append(const RunRecord& record) {
  if (!enabled()) return;
  if (!loaded_) Load();
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  json j = {{"graph", record.graph_key}, {"command", record.command},
            {"params", record.params},   {"payload", record.payload},
            {"exit", record.exit_code},  {"artifacts", record.artifacts},
            {"wall_ms", record.wall_ms}, {"version", record.version}};
  std::ofstream out(path(), std::ios::app);
  out << j.dump() << '\n';
  if (!out) {
    throw ApiError(MCF_ERR_IO, "cannot append to cache file " + path());
  }
  records_[LookupKey(record.graph_key, record.command, record.params,
                     record.version)] = record;
}

std::string CacheDirFromEnvironment() {
  const char* dir = std::getenv("MCFLOW_CACHE_DIR");
  return dir == nullptr ? "" : dir;
}

}  // namespace mcflow_cli
