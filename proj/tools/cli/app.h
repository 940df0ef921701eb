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

#ifndef MCFLOW_TOOLS_CLI_APP_H_
#define MCFLOW_TOOLS_CLI_APP_H_

#include <ostream>
#include <string>
#include <vector>

namespace mcflow_cli {

// Process exit codes.
enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitNoFlow = 4,
  kExitUnsupported = 5,
  kExitIo = 6,
  kExitBudget = 7,
  kExitInternal = 8,
};

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mcflow_cli

#endif  // MCFLOW_TOOLS_CLI_APP_H_
