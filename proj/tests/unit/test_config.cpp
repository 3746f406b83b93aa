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

#include "config.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jpta;
using namespace jpta::cli;

namespace
{
    RunConfig parse(const std::string &text, const std::filesystem::path &base = {})
    {
        std::istringstream is(text);
        return parse_config(is, base);
    }

    std::string error_field(const std::string &text)
    {
        try
        {
            parse(text);
        }
        catch (const ConfigError &e)
        {
            return e.field();
        }
        return "<no error>";
    }
}

TEST_CASE("an empty config is the reference system")
{
    const auto c = parse("");
    CHECK(c.array.num_elements == 16);
    CHECK(c.array.carrier_hz == 28e9);
    CHECK(c.array.spacing_m == doctest::Approx(kSpeedOfLight / 28e9 / 2));
    CHECK(c.array.peak_gain_db == 28.0);
    CHECK(c.grid.bandwidth_hz == 400e6);
    CHECK(c.grid.scs_hz == 120e3);
    CHECK(c.grid.num_rbs == 264);
    CHECK(c.link.ue_tx_power_dbm == 23.0);
    CHECK(c.link.ue_beam_gain_db == 0.0);
    CHECK(c.link.bs_noise_figure_db == 5.0);
    CHECK(c.link.path_loss_exponent == 3.0);
    CHECK(c.paa_num_beams == 16);
    CHECK(c.delays.step_s == doctest::Approx(2.5e-9));
    CHECK(c.delays.max_delay_s == doctest::Approx(157.5e-9));
    CHECK(c.ring_distances_m.size() == 40);
    CHECK(c.ue_angles_deg == std::vector<double>{-30, -10, 10, 30});
    CHECK(c.mcs.size() == 15);
}

TEST_CASE("the documented defaults parse back to the defaults")
{
    const auto a = parse(default_config_text());
    const auto b = parse("");
    CHECK(a.array.spacing_m == b.array.spacing_m);
    CHECK(a.ring_distances_m == b.ring_distances_m);
    CHECK(a.ue_angles_deg == b.ue_angles_deg);
    CHECK(a.type2_spread_deg == b.type2_spread_deg);
}

TEST_CASE("keys, lists and comments")
{
    const auto c = parse(R"(
# a comment
array.num_elements = 8      # trailing comment
array.carrier_hz = 39e9
link.path_loss_exponent = 2.5
deployment.ue_angles_deg = -20, 0, 20
deployment.distances_m = 10, 20, 40
delay.step_ns = 1.25
delay.max_ns = 80
type1.angles_deg = -20, 20
type1.rb_counts = 100, 164
type1.per_subcarrier = true
type2.center_deg = 10
type2.spread_deg = 40
type2.reference = absolute
paa.num_beams = 8
paa.sector_deg = -45, 45
)");
    CHECK(c.array.num_elements == 8);
    CHECK(c.grid.center_hz == 39e9);
    CHECK(c.link.carrier_hz == 39e9);
    CHECK(c.array.spacing_m == doctest::Approx(kSpeedOfLight / 39e9 / 2));
    CHECK(c.link.path_loss_exponent == 2.5);
    CHECK(c.ring_distances_m == std::vector<double>{10, 20, 40});
    CHECK(c.delays.step_s == doctest::Approx(1.25e-9));
    CHECK(c.type1_per_subcarrier);
    CHECK(c.type2_reference == RainbowReference::kAbsolute);

    const auto t = c.type1_target();
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].rbs.size() == 100);
    CHECK(t.entries[1].theta_rad == doctest::Approx(from_boresight(deg_to_rad(20))));

    const auto r = c.rainbow();
    CHECK(r.center_rad == doctest::Approx(from_boresight(deg_to_rad(10))));
    CHECK(c.paa_codebook().size() == 8);
    CHECK(c.deployment().ue_angles_rad.size() == 3);
}

TEST_CASE("errors name the offending field")
{
    CHECK(error_field("bogus.key = 1") == "bogus.key");
    CHECK(error_field("array.num_elements = 0") == "array.num_elements");
    CHECK(error_field("array.num_elements = sixteen") == "array.num_elements");
    CHECK(error_field("array.num_elements = 4\narray.num_elements = 8") == "array.num_elements");
    CHECK(error_field("link.path_loss_exponent = -1") == "link.path_loss_exponent");
    CHECK(error_field("grid.num_rbs = 400") == "grid.num_rbs");
    CHECK(error_field("delay.step_ns = 0") == "delay.step_ns");
    CHECK(error_field("delay.max_ns = 1") == "delay.max_ns");
    CHECK(error_field("deployment.distances_m = 10, 5") == "deployment.distances_m");
    CHECK(error_field("deployment.ue_angles_deg = 95") == "deployment.ue_angles_deg");
    CHECK(error_field("type1.rb_counts = 100, 100") == "type1.rb_counts");
    CHECK(error_field("type2.spread_deg = 170\ntype2.center_deg = 30") == "type2.spread_deg");
    CHECK(error_field("type2.reference = sideways") == "type2.reference");
    CHECK(error_field("paa.sector_deg = 30, -30") == "paa.sector_deg");
    CHECK(error_field("just some words") == "line 1");
}

TEST_CASE("MCS and beta files are read relative to the config")
{
    const auto dir = std::filesystem::temp_directory_path() / "jpta_config_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "mcs.csv") << "index,spectral_efficiency,snr_threshold_db\n0,0.25,-3\n1,1,2\n2,2,8\n";
        std::ofstream(dir / "beta.csv") << "index,beta\n2,4.5\n";
        std::ofstream(dir / "run.cfg") << "link.mcs_table = mcs.csv\nlink.eesm_beta_file = beta.csv\n";
    }
    const auto c = load_config(dir / "run.cfg");
    CHECK(c.mcs.size() == 3);
    CHECK(c.mcs[2].eesm_beta == 4.5);
    CHECK(c.mcs[0].eesm_beta == 1.0);

    try
    {
        load_config(dir / "missing.cfg");
        FAIL("expected an error");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()).find("missing.cfg") != std::string::npos);
    }
    CHECK(error_field("link.mcs_table = /nonexistent/mcs.csv") == "link.mcs_table");
    std::filesystem::remove_all(dir);
}
