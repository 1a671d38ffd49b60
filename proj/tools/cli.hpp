// Copyright 2026 The revsurf Authors.
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
#include <optional>
#include <string>
#include <vector>

namespace revsurf::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success / embeddable
inline constexpr int kExitNegative = 1;  // validation failed / not embeddable
inline constexpr int kExitError = 2;     // usage, parse or IO error

/// Parses "pi", "2pi", "2*pi" or a decimal. Returns nullopt if malformed or
/// not positive.
std::optional<double> parse_length(const std::string& text);

/// Runs the tool. `args` excludes the program name. Regular output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revsurf::cli
