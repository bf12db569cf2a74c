// Copyright 2026 The qsep Authors
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

#ifndef QSEP_TOOLS_CLI_H_
#define QSEP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qsep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotConverged = 2;

// Runs one command line. args[0] is the program name. Human-readable output
// goes to `out` (or a single JSON document with --json), diagnostics to
// `err`. Returns the process exit status.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "0.25,0.75" -> {0.25, 0.75}. Throws qsep::Error(kBadWeights).
std::vector<double> ParseWeightList(const std::string& text);

}  // namespace qsep::cli

#endif  // QSEP_TOOLS_CLI_H_
