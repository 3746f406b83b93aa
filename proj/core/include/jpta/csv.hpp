// SPDX-License-Identifier: Apache-2.0
//
// jpta: beam design and uplink evaluation for joint phase-time arrays
// Copyright (C) 2026 The jpta Authors
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

#ifndef JPTA_CSV_HPP
#define JPTA_CSV_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jpta
{
    // Malformed input file
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Fixed 6-significant-digit formatting used by every CSV writer
    std::string format_number(double value);

    struct CsvRow
    {
        std::size_t line = 0;
        std::vector<std::string> fields;
    };

    // Reads a comma-separated file whose first non-empty line must equal the given header.
    // Blank lines are skipped; every row must have as many fields as the header.
    std::vector<CsvRow> read_csv(std::istream &is, const std::vector<std::string> &header);

    double parse_double(std::string_view text, std::size_t line, std::string_view column);
    long parse_integer(std::string_view text, std::size_t line, std::string_view column);

    std::string trim(std::string_view s);
    std::vector<std::string> split(std::string_view s, char sep);
}

#endif
