// Copyright 2026 The lefschetz Authors
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

namespace lefschetz::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kOk = 0,
    kDomainFailure = 1,
    kInputError = 2,
};

struct Outcome {
    int status = kOk;
    std::string out;
    std::string err;
};

/// Runs one invocation. `args` excludes the program name; `in` backs the
/// `-` expression argument.
Outcome run(const std::vector<std::string>& args, std::istream& in);

}  // namespace lefschetz::cli
