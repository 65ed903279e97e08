// Copyright 2026 The graylap Authors
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

/**
 * @file
 * Command-line front end. Subcommands: trotter-sweep, build-circuit,
 * adiabatic, ho-scan. Exit codes: 0 success, 2 usage or validation error,
 * 1 internal failure.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graylap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Parses and runs one command. Output files named by --out are written
/// directly; "-" (the default) means `out`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Comma list ("1e-3,1e-2") or "log:LO:HI:COUNT".
[[nodiscard]] std::vector<double> parse_real_list(const std::string &text);
[[nodiscard]] std::vector<int> parse_int_list(const std::string &text);

} // namespace graylap::cli
