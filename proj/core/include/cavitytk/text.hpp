// Copyright 2026 The cavitytk Authors
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

#include <string>
#include <string_view>
#include <vector>

// Small parsing helpers shared by the CSV readers and the scenario format.
namespace cavitytk::text {

std::string_view trim(std::string_view s);

/// Splits on `sep` and trims each field.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Parses the whole of `s` as a double. Returns false on any trailing text.
bool parse_double(std::string_view s, double& out);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

std::string to_lower(std::string_view s);

}  // namespace cavitytk::text
