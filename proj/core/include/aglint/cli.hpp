// Copyright 2026 The aglint Authors
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

#ifndef AGLINT_CLI_HPP_
#define AGLINT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace aglint {

/// Entry point behind the `aglint` binary, callable in-process for tests.
/// args excludes the program name. Reports go to out, diagnostics to err;
/// input supplies "-" reads (defaults to std::cin). Returns the process
/// exit code: 0 clean, 1 errors found, 2 failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream* input = nullptr);

}  // namespace aglint

#endif  // AGLINT_CLI_HPP_
