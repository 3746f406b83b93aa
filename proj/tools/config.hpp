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

#ifndef JPTA_TOOLS_CONFIG_HPP
#define JPTA_TOOLS_CONFIG_HPP

#include "jpta/jpta.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jpta::cli
{
    // Invalid or unreadable configuration; field() names the offending key (or file)
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string field, const std::string &what)
            : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
        const std::string &field() const { return field_; }

    private:
        std::string field_;
    };

    // Run configuration. Every field defaults to the reference system; angles are degrees from boresight.
    struct RunConfig
    {
        ArrayConfig array = ArrayConfig::half_wavelength(16, 28e9, 28.0);
        FrequencyGrid grid;
        LinkModel link;
        McsTable mcs = McsTable::standard();
        DelayConstraint delays;

        std::size_t paa_num_beams = 16;
        double paa_sector_lo_deg = -60.0;
        double paa_sector_hi_deg = 60.0;

        std::vector<double> ue_angles_deg{-30.0, -10.0, 10.0, 30.0};
        std::vector<double> ring_distances_m = log_ring_grid(30.0, 1500.0, 40);

        std::vector<double> type1_angles_deg;      // empty: use the UE angles
        std::vector<std::size_t> type1_rb_counts;  // empty: equal split
        bool type1_per_subcarrier = false;

        double type2_center_deg = 0.0;
        double type2_spread_deg = 110.0;
        RainbowReference type2_reference = RainbowReference::kCarrier;

        Deployment deployment() const;
        Type1Target type1_target() const;
        RainbowSpec rainbow() const;
        AngleInterval paa_sector() const;
        std::vector<PhaseTimeWeights> paa_codebook() const;
        Scenario scenario() const;
    };

    // Parses "section.key = value" lines; '#' starts a comment. Relative file paths in the
    // config are resolved against base_dir.
    RunConfig parse_config(std::istream &is, const std::filesystem::path &base_dir = {});
    RunConfig load_config(const std::filesystem::path &path);

    // Documented key list with defaults, in config syntax
    std::string default_config_text();
}

#endif
