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

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace jpta::cli
{
    namespace
    {
        struct Value
        {
            std::string text;
            std::size_t line;
        };

        using Entries = std::map<std::string, Value>;

        double to_double(const std::string &key, const Value &v)
        {
            try
            {
                return parse_double(v.text, v.line, key);
            }
            catch (const FormatError &)
            {
                throw ConfigError(key, "expected a number, got '" + v.text + "' (line " + std::to_string(v.line) + ")");
            }
        }

        std::size_t to_count(const std::string &key, const Value &v)
        {
            long n = 0;
            try
            {
                n = parse_integer(v.text, v.line, key);
            }
            catch (const FormatError &)
            {
                throw ConfigError(key, "expected an integer, got '" + v.text + "' (line " + std::to_string(v.line) + ")");
            }
            if (n < 0)
                throw ConfigError(key, "must be >= 0");
            return static_cast<std::size_t>(n);
        }

        bool to_bool(const std::string &key, const Value &v)
        {
            if (v.text == "true" || v.text == "1" || v.text == "yes")
                return true;
            if (v.text == "false" || v.text == "0" || v.text == "no")
                return false;
            throw ConfigError(key, "expected true or false, got '" + v.text + "'");
        }

        std::vector<double> to_list(const std::string &key, const Value &v)
        {
            std::vector<double> out;
            for (const auto &item : split(v.text, ','))
                out.push_back(to_double(key, {item, v.line}));
            return out;
        }

        void require(bool ok, const std::string &key, const std::string &constraint)
        {
            if (!ok)
                throw ConfigError(key, constraint);
        }

        std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p)
        {
            std::filesystem::path path(p);
            return path.is_relative() && !base.empty() ? base / path : path;
        }
    }

    Deployment RunConfig::deployment() const
    {
        Deployment d;
        for (const double a : ue_angles_deg)
            d.ue_angles_rad.push_back(deg_to_rad(a));
        d.ring_distances_m = ring_distances_m;
        return d;
    }

    Type1Target RunConfig::type1_target() const
    {
        const auto &angles = type1_angles_deg.empty() ? ue_angles_deg : type1_angles_deg;
        std::vector<double> thetas;
        for (const double a : angles)
            thetas.push_back(from_boresight(deg_to_rad(a)));
        if (type1_rb_counts.empty())
            return Type1Target::equal_split(thetas, grid.num_rbs);

        Type1Target t;
        std::size_t begin = 0;
        for (std::size_t i = 0; i < thetas.size(); ++i)
        {
            t.entries.push_back({thetas[i], {begin, begin + type1_rb_counts[i]}});
            begin += type1_rb_counts[i];
        }
        return t;
    }

    RainbowSpec RunConfig::rainbow() const
    {
        return {from_boresight(deg_to_rad(type2_center_deg)), deg_to_rad(type2_spread_deg)};
    }

    AngleInterval RunConfig::paa_sector() const
    {
        return {from_boresight(deg_to_rad(paa_sector_lo_deg)), from_boresight(deg_to_rad(paa_sector_hi_deg))};
    }

    std::vector<PhaseTimeWeights> RunConfig::paa_codebook() const
    {
        return jpta::paa_codebook(array, paa_num_beams, paa_sector());
    }

    Scenario RunConfig::scenario() const
    {
        return {array, grid, link, mcs, delays, paa_codebook()};
    }

    RunConfig parse_config(std::istream &is, const std::filesystem::path &base_dir)
    {
        Entries entries;
        std::string raw;
        std::size_t lineno = 0;
        while (std::getline(is, raw))
        {
            ++lineno;
            const auto hash = raw.find('#');
            const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
            if (!entries.emplace(key, Value{value, lineno}).second)
                throw ConfigError(key, "set twice (line " + std::to_string(lineno) + ")");
        }

        RunConfig cfg;
        std::optional<double> spacing;
        std::optional<double> ring_min, ring_max;
        std::optional<std::size_t> ring_count;
        std::optional<std::filesystem::path> mcs_file, beta_file;
        double mcs_margin = 2.0, eesm_beta = 1.0;

        using Setter = std::function<void(const std::string &, const Value &)>;
        const std::map<std::string, Setter> setters = {
            {"array.num_elements", [&](auto &k, auto &v) { cfg.array.num_elements = to_count(k, v); }},
            {"array.spacing_m", [&](auto &k, auto &v) { spacing = to_double(k, v); }},
            {"array.carrier_hz", [&](auto &k, auto &v) { cfg.array.carrier_hz = to_double(k, v); }},
            {"array.peak_gain_db", [&](auto &k, auto &v) { cfg.array.peak_gain_db = to_double(k, v); }},
            {"grid.bandwidth_hz", [&](auto &k, auto &v) { cfg.grid.bandwidth_hz = to_double(k, v); }},
            {"grid.scs_hz", [&](auto &k, auto &v) { cfg.grid.scs_hz = to_double(k, v); }},
            {"grid.num_rbs", [&](auto &k, auto &v) { cfg.grid.num_rbs = to_count(k, v); }},
            {"link.ue_tx_power_dbm", [&](auto &k, auto &v) { cfg.link.ue_tx_power_dbm = to_double(k, v); }},
            {"link.ue_beam_gain_db", [&](auto &k, auto &v) { cfg.link.ue_beam_gain_db = to_double(k, v); }},
            {"link.noise_figure_db", [&](auto &k, auto &v) { cfg.link.bs_noise_figure_db = to_double(k, v); }},
            {"link.path_loss_exponent", [&](auto &k, auto &v) { cfg.link.path_loss_exponent = to_double(k, v); }},
            {"link.thermal_noise_dbm_per_hz",
             [&](auto &k, auto &v) { cfg.link.thermal_noise_dbm_per_hz = to_double(k, v); }},
            {"link.mcs_margin_db", [&](auto &k, auto &v) { mcs_margin = to_double(k, v); }},
            {"link.eesm_beta", [&](auto &k, auto &v) { eesm_beta = to_double(k, v); }},
            {"link.mcs_table", [&](auto &, auto &v) { mcs_file = resolve(base_dir, v.text); }},
            {"link.eesm_beta_file", [&](auto &, auto &v) { beta_file = resolve(base_dir, v.text); }},
            {"paa.num_beams", [&](auto &k, auto &v) { cfg.paa_num_beams = to_count(k, v); }},
            {"paa.sector_deg",
             [&](auto &k, auto &v) {
                 const auto s = to_list(k, v);
                 require(s.size() == 2, k, "expected 'lo, hi'");
                 cfg.paa_sector_lo_deg = s[0];
                 cfg.paa_sector_hi_deg = s[1];
             }},
            {"delay.step_ns", [&](auto &k, auto &v) { cfg.delays.step_s = to_double(k, v) * 1e-9; }},
            {"delay.max_ns", [&](auto &k, auto &v) { cfg.delays.max_delay_s = to_double(k, v) * 1e-9; }},
            {"deployment.ue_angles_deg", [&](auto &k, auto &v) { cfg.ue_angles_deg = to_list(k, v); }},
            {"deployment.distances_m", [&](auto &k, auto &v) { cfg.ring_distances_m = to_list(k, v); }},
            {"deployment.ring_min_m", [&](auto &k, auto &v) { ring_min = to_double(k, v); }},
            {"deployment.ring_max_m", [&](auto &k, auto &v) { ring_max = to_double(k, v); }},
            {"deployment.ring_count", [&](auto &k, auto &v) { ring_count = to_count(k, v); }},
            {"type1.angles_deg", [&](auto &k, auto &v) { cfg.type1_angles_deg = to_list(k, v); }},
            {"type1.rb_counts",
             [&](auto &k, auto &v) {
                 cfg.type1_rb_counts.clear();
                 for (const auto &item : split(v.text, ','))
                     cfg.type1_rb_counts.push_back(to_count(k, {item, v.line}));
             }},
            {"type1.per_subcarrier", [&](auto &k, auto &v) { cfg.type1_per_subcarrier = to_bool(k, v); }},
            {"type2.center_deg", [&](auto &k, auto &v) { cfg.type2_center_deg = to_double(k, v); }},
            {"type2.spread_deg", [&](auto &k, auto &v) { cfg.type2_spread_deg = to_double(k, v); }},
            {"type2.reference",
             [&](auto &k, auto &v) {
                 if (v.text == "carrier")
                     cfg.type2_reference = RainbowReference::kCarrier;
                 else if (v.text == "absolute")
                     cfg.type2_reference = RainbowReference::kAbsolute;
                 else
                     throw ConfigError(k, "expected 'carrier' or 'absolute'");
             }},
        };

        for (const auto &[key, value] : entries)
        {
            const auto it = setters.find(key);
            if (it == setters.end())
                throw ConfigError(key, "unknown key (line " + std::to_string(value.line) + ")");
            it->second(key, value);
        }

        // Derived and cross-field checks
        require(cfg.array.num_elements >= 1, "array.num_elements", "must be >= 1");
        require(cfg.array.carrier_hz > 0.0, "array.carrier_hz", "must be > 0");
        cfg.array.spacing_m = spacing.value_or(kSpeedOfLight / cfg.array.carrier_hz / 2.0);
        require(cfg.array.spacing_m > 0.0, "array.spacing_m", "must be > 0");
        cfg.grid.center_hz = cfg.array.carrier_hz;
        cfg.link.carrier_hz = cfg.array.carrier_hz;

        require(cfg.grid.scs_hz > 0.0, "grid.scs_hz", "must be > 0");
        require(cfg.grid.num_rbs >= 1, "grid.num_rbs", "must be >= 1");
        require(static_cast<double>(cfg.grid.num_subcarriers()) * cfg.grid.scs_hz <= cfg.grid.bandwidth_hz * (1 + 1e-12),
                "grid.num_rbs", "num_rbs * 12 * scs_hz must not exceed grid.bandwidth_hz");
        require(cfg.link.path_loss_exponent > 0.0, "link.path_loss_exponent", "must be > 0");
        require(eesm_beta > 0.0, "link.eesm_beta", "must be > 0");

        require(cfg.paa_num_beams >= 1, "paa.num_beams", "must be >= 1");
        require(cfg.paa_sector_lo_deg < cfg.paa_sector_hi_deg, "paa.sector_deg", "lo must be < hi");
        require(cfg.paa_sector_lo_deg >= -90.0 && cfg.paa_sector_hi_deg <= 90.0, "paa.sector_deg",
                "must lie within [-90, 90]");

        require(cfg.delays.step_s > 0.0, "delay.step_ns", "must be > 0");
        require(cfg.delays.max_delay_s >= cfg.delays.step_s, "delay.max_ns", "must be >= delay.step_ns");

        require(!cfg.ue_angles_deg.empty(), "deployment.ue_angles_deg", "at least one UE is required");
        for (const double a : cfg.ue_angles_deg)
            require(a >= -90.0 && a <= 90.0, "deployment.ue_angles_deg", "angles must lie within [-90, 90]");

        const bool explicit_list = entries.count("deployment.distances_m") > 0;
        if (ring_min || ring_max || ring_count)
        {
            require(!explicit_list, "deployment.distances_m", "cannot be combined with deployment.ring_*");
            const double lo = ring_min.value_or(30.0), hi = ring_max.value_or(1500.0);
            const std::size_t n = ring_count.value_or(40);
            require(lo > 0.0, "deployment.ring_min_m", "must be > 0");
            require(hi > lo, "deployment.ring_max_m", "must be > deployment.ring_min_m");
            require(n >= 2, "deployment.ring_count", "must be >= 2");
            cfg.ring_distances_m = log_ring_grid(lo, hi, n);
        }
        require(!cfg.ring_distances_m.empty(), "deployment.distances_m", "at least one distance is required");
        for (std::size_t i = 0; i < cfg.ring_distances_m.size(); ++i)
        {
            require(cfg.ring_distances_m[i] > 0.0, "deployment.distances_m", "distances must be > 0");
            require(i == 0 || cfg.ring_distances_m[i] > cfg.ring_distances_m[i - 1], "deployment.distances_m",
                    "distances must be strictly increasing");
        }

        const auto &t1 = cfg.type1_angles_deg.empty() ? cfg.ue_angles_deg : cfg.type1_angles_deg;
        for (const double a : t1)
            require(a >= -90.0 && a <= 90.0, "type1.angles_deg", "angles must lie within [-90, 90]");
        require(t1.size() <= cfg.grid.num_rbs, "type1.angles_deg", "more targets than RBs");
        if (!cfg.type1_rb_counts.empty())
        {
            require(cfg.type1_rb_counts.size() == t1.size(), "type1.rb_counts", "needs one count per type1 angle");
            std::size_t total = 0;
            for (const auto n : cfg.type1_rb_counts)
            {
                require(n >= 1, "type1.rb_counts", "counts must be >= 1");
                total += n;
            }
            require(total == cfg.grid.num_rbs, "type1.rb_counts", "counts must sum to grid.num_rbs");
        }

        require(cfg.type2_spread_deg >= 0.0, "type2.spread_deg", "must be >= 0");
        require(cfg.type2_center_deg - cfg.type2_spread_deg / 2 >= -90.0 - 1e-9 &&
                    cfg.type2_center_deg + cfg.type2_spread_deg / 2 <= 90.0 + 1e-9,
                "type2.spread_deg", "center +- spread/2 must lie within [-90, 90]");

        try
        {
            if (mcs_file)
            {
                std::ifstream f(*mcs_file);
                if (!f)
                    throw ConfigError("link.mcs_table", "cannot open '" + mcs_file->string() + "'");
                cfg.mcs = McsTable::read_csv(f);
                std::vector<McsEntry> e(cfg.mcs.entries().begin(), cfg.mcs.entries().end());
                for (auto &x : e)
                    x.eesm_beta = eesm_beta;
                cfg.mcs = McsTable(std::move(e));
            }
            else
                cfg.mcs = McsTable::standard(mcs_margin, eesm_beta);
        }
        catch (const FormatError &ex)
        {
            throw ConfigError("link.mcs_table", ex.what());
        }
        if (beta_file)
        {
            std::ifstream f(*beta_file);
            if (!f)
                throw ConfigError("link.eesm_beta_file", "cannot open '" + beta_file->string() + "'");
            try
            {
                cfg.mcs.apply_beta_csv(f);
            }
            catch (const FormatError &ex)
            {
                throw ConfigError("link.eesm_beta_file", ex.what());
            }
        }
        return cfg;
    }

    RunConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream f(path);
        if (!f)
            throw ConfigError(path.string(), "cannot open config file");
        return parse_config(f, path.parent_path());
    }

    std::string default_config_text()
    {
        return R"(# jpta run configuration. Angles are degrees from boresight.
array.num_elements = 16
array.carrier_hz = 28e9
# array.spacing_m defaults to half a wavelength at the carrier
array.peak_gain_db = 28

grid.bandwidth_hz = 400e6
grid.scs_hz = 120e3
grid.num_rbs = 264

link.ue_tx_power_dbm = 23
link.ue_beam_gain_db = 0
link.noise_figure_db = 5
link.path_loss_exponent = 3
link.thermal_noise_dbm_per_hz = -174
link.mcs_margin_db = 2
link.eesm_beta = 1
# link.mcs_table = mcs.csv          (index,spectral_efficiency,snr_threshold_db)
# link.eesm_beta_file = beta.csv    (index,beta)

paa.num_beams = 16
paa.sector_deg = -60, 60

delay.step_ns = 2.5
delay.max_ns = 157.5

deployment.ue_angles_deg = -30, -10, 10, 30
deployment.ring_min_m = 30
deployment.ring_max_m = 1500
deployment.ring_count = 40
# deployment.distances_m = 30, 100, 300   (explicit list instead of ring_*)

# type1.angles_deg defaults to the UE angles; type1.rb_counts to an equal split
type1.per_subcarrier = false

type2.center_deg = 0
type2.spread_deg = 110
type2.reference = carrier
)";
    }
}
