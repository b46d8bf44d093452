// Copyright 2026 The matgame Authors.
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

#ifndef MATGAME_CLI_H_
#define MATGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace matgame {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolated = 1,
  kExitInputError = 2,
  kExitInternal = 3,
};

// Entry point of the `matgame` tool. `args` excludes the program name.
// Subcommands: solve, analyze, verify, oracle.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace matgame

#endif  // MATGAME_CLI_H_
