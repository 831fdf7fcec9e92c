// Copyright 2026 The Malice Game Authors.
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

#ifndef MALICE_CLI_H_
#define MALICE_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace malice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCertificate = 3;

// Runs one CLI invocation. `args` includes the program name. Reports go to
// `out`, diagnostics to `err`; the return value is the process exit code.
int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

// Parses "start:stop:step" (inclusive of stop) or a comma-separated list.
// Throws malice::Error with kUsageError.
std::vector<double> ParseAlphaList(std::string_view spec);

}  // namespace malice::cli

#endif  // MALICE_CLI_H_
