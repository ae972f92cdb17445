// Copyright 2026 The monomat Authors
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

#ifndef MONOMAT_CLI_H
#define MONOMAT_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace monomat {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitParseFailure = 2;

/// Runs one command line (argv without the program name). The report goes to
/// `out` or to --output; summaries and diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

std::string version_string();

}  // namespace monomat

#endif
