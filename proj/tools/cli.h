// Copyright 2026 The gamecheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMECHECK_TOOLS_CLI_H_
#define GAMECHECK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gamecheck::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kAssertionFailed = 1;  // --assert-* failed, or the game is
                                            // not in the class `potential` /
                                            // `zerosum` was asked to extract
inline constexpr int kUsageError = 2;       // bad arguments, I/O, bad input

// Runs the command line `args` (without the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gamecheck::cli

#endif  // GAMECHECK_TOOLS_CLI_H_
