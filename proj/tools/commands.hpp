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

#ifndef JPTA_TOOLS_COMMANDS_HPP
#define JPTA_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jpta::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitInternal = 1;
    inline constexpr int kExitConfig = 2;

    // Log verbosity is read from this variable (trace, debug, info, warn, error, off)
    inline constexpr const char *kLogLevelEnv = "JPTA_LOG_LEVEL";

    // Entry point shared by main() and the tests. args excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

    // Parses "start:stop:step" (degrees); stop is included when it lies on the grid
    std::vector<double> parse_angle_range(const std::string &spec);
}

#endif
