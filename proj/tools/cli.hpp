// Copyright 2026 The udisc Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udisc::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDegenerate = 3,
    kResource = 4,
    kVerificationFailed = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "lo:hi:count" (inclusive linspace) or "v1,v2,...".
std::vector<double> parse_grid(const std::string& text);

}  // namespace udisc::cli
