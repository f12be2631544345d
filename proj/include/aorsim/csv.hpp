// SPDX-License-Identifier: Apache-2.0
//
// aorsim - 3D geometric channel simulation of reception-angle statistics
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aorsim {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Strict double parse of a whole (trimmed) field; false on any leftover.
bool parse_double(std::string_view field, double &out);

std::string_view trim(std::string_view s);

// Split one CSV row on commas (no quoting; the formats here never need it).
std::vector<std::string_view> split_fields(std::string_view line);

} // namespace aorsim
