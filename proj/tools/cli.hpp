// Copyright 2026 The gmspec Authors.
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

#ifndef GMSPEC_TOOLS_CLI_HPP_
#define GMSPEC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gmspec::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kVerification = 3 };

// Runs one command line (args excludes the program name). Output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gmspec::cli

#endif  // GMSPEC_TOOLS_CLI_HPP_
