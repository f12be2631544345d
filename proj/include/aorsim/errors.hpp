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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aorsim {

// Malformed input file content; carries the 1-based line number when known.
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string &msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line)
    {
    }
    explicit ParseError(const std::string &msg) : std::runtime_error(msg), line_(0) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Invalid simulation configuration (file missing, bad values, ...).
// The CLI maps this to exit code 1; everything else maps to 2.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace aorsim
