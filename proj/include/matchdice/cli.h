// Copyright 2026 The matchdice Authors
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

// Command-line front end. Commands: expect, pmf, simulate, diff, check.
// Global flags: --format {table,csv,json}, --precision N.
//
// Exit codes: 0 success, 1 computation or validation failure, 2 usage or
// parse error. Data goes to out, diagnostics to err.

#ifndef MATCHDICE_CLI_H_
#define MATCHDICE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace matchdice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace matchdice::cli

#endif  // MATCHDICE_CLI_H_
