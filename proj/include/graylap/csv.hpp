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

/// @file
/// Locale-independent CSV output.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graylap::csv {

/// 17 significant digits with trailing zeros trimmed, '.' decimal.
[[nodiscard]] std::string format(double value);

/// "# text" line; embedded newlines become separate comment lines.
void write_comment(std::ostream &out, std::string_view text);

void write_row(std::ostream &out, const std::vector<std::string> &fields);

} // namespace graylap::csv
