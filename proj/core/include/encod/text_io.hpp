// Copyright 2026 The EnCoD Authors.
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

// Shared helpers for the plain-text formats: tokenizing records and
// formatting reals so that they read back bit-exactly.

#ifndef ENCOD_TEXT_IO_HPP_
#define ENCOD_TEXT_IO_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace encod {

// Calls fn(line_number, tokens) for every non-blank line that does not start
// with '#'. Tokens are separated by runs of spaces, tabs or '\r'. Line
// numbers are 1-based.
void for_each_record(
    std::string_view text,
    const std::function<void(std::size_t, std::span<const std::string_view>)>&
        fn);

// Shortest representation that round-trips.
std::string format_real(double value);

// Parses a full token as a double; throws ParseError(line) otherwise.
double parse_real(std::string_view token, std::size_t line);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace encod

#endif  // ENCOD_TEXT_IO_HPP_
