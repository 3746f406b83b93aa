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

#include "jpta/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>

#include <fmt/format.h>

namespace jpta
{
    std::string format_number(double value)
    {
        if (value == 0.0)
            return "0"; // no "-0"
        return fmt::format("{:.6g}", value);
    }

    std::string trim(std::string_view s)
    {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos)
            return {};
        const auto e = s.find_last_not_of(" \t\r\n");
        return std::string(s.substr(b, e - b + 1));
    }

    std::vector<std::string> split(std::string_view s, char sep)
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true)
        {
            const auto pos = s.find(sep, start);
            out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return out;
    }

    std::vector<CsvRow> read_csv(std::istream &is, const std::vector<std::string> &header)
    {
        std::vector<CsvRow> rows;
        std::string line;
        std::size_t lineno = 0;
        bool have_header = false;
        while (std::getline(is, line))
        {
            ++lineno;
            if (trim(line).empty())
                continue;
            auto fields = split(line, ',');
            if (!have_header)
            {
                if (fields != header)
                {
                    std::string expected;
                    for (const auto &h : header)
                        expected += (expected.empty() ? "" : ",") + h;
                    throw FormatError("line " + std::to_string(lineno) + ": expected header '" + expected + "'");
                }
                have_header = true;
                continue;
            }
            if (fields.size() != header.size())
                throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                                  " fields, found " + std::to_string(fields.size()));
            rows.push_back({lineno, std::move(fields)});
        }
        if (!have_header)
            throw FormatError("missing header line");
        return rows;
    }

    double parse_double(std::string_view text, std::size_t line, std::string_view column)
    {
        // strtod rather than from_chars: libstdc++ 11 lacks floating from_chars
        const std::string s(text);
        char *end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size())
            throw FormatError("line " + std::to_string(line) + ": column '" + std::string(column) +
                              "' is not a number: '" + s + "'");
        return v;
    }

    long parse_integer(std::string_view text, std::size_t line, std::string_view column)
    {
        long v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            throw FormatError("line " + std::to_string(line) + ": column '" + std::string(column) +
                              "' is not an integer: '" + std::string(text) + "'");
        return v;
    }
}
