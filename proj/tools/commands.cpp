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

#include "commands.hpp"
#include "config.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace jpta::cli
{
    namespace
    {
        std::shared_ptr<spdlog::logger> logger()
        {
            auto log = spdlog::get("jpta");
            if (!log)
            {
                log = spdlog::stderr_color_mt("jpta");
                const char *level = std::getenv(kLogLevelEnv);
                log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
            }
            return log;
        }

        std::ofstream open_output(const std::filesystem::path &path)
        {
            std::ofstream f(path);
            if (!f)
                throw ConfigError(path.string(), "cannot open output file");
            return f;
        }

        int cmd_design(const std::string &config_path, int type, bool quantize, const std::string &out_path,
                       std::ostream &out)
        {
            const auto cfg = load_config(config_path);
            PhaseTimeWeights w;
            if (type == 1)
            {
                Type1Options opt;
                opt.per_subcarrier = cfg.type1_per_subcarrier;
                const auto target = cfg.type1_target();
                logger()->info("designing Type-1 beam for {} targets", target.entries.size());
                const auto design = design_type1(cfg.array, target, cfg.grid, cfg.delays, opt);
                w = design.weights;
                out << "objective = " << format_number(design.objective) << '\n';
            }
            else
            {
                logger()->info("designing Type-2 beam, spread {} deg", cfg.type2_spread_deg);
                w = design_type2(cfg.array, cfg.rainbow(), cfg.grid, cfg.type2_reference);
                if (quantize)
                    w = quantize_delays(w, cfg.delays);
            }
            out << "max_delay_ns = " << format_number(w.max_delay() * 1e9) << '\n';
            auto f = open_output(out_path);
            write_codebook_csv(f, w);
            return kExitOk;
        }

        int cmd_pattern(const std::string &config_path, const std::string &codebook_path,
                        const std::string &angles_spec, const std::string &out_path)
        {
            const auto cfg = load_config(config_path);
            std::ifstream cb(codebook_path);
            if (!cb)
                throw ConfigError(codebook_path, "cannot open codebook file");
            PhaseTimeWeights w;
            try
            {
                w = read_codebook_csv(cb);
            }
            catch (const std::exception &ex)
            {
                throw ConfigError(codebook_path, ex.what());
            }
            if (w.size() != cfg.array.num_elements)
                throw ConfigError(codebook_path, "codebook has " + std::to_string(w.size()) +
                                                     " antennas, array.num_elements is " +
                                                     std::to_string(cfg.array.num_elements));

            const auto angles_deg = parse_angle_range(angles_spec);
            std::vector<double> thetas;
            for (const double a : angles_deg)
                thetas.push_back(from_boresight(deg_to_rad(a)));
            const auto pm = pattern_map(cfg.array, w, thetas, cfg.grid);

            auto f = open_output(out_path);
            f << "angle_deg,rb,gain_db\n";
            for (std::size_t i = 0; i < angles_deg.size(); ++i)
                for (std::size_t r = 0; r < pm.num_rbs; ++r)
                    f << format_number(angles_deg[i]) << ',' << r << ',' << format_number(pm.at(i, r)) << '\n';
            return kExitOk;
        }

        ScenarioResult simulate(const RunConfig &cfg)
        {
            const auto dep = cfg.deployment();
            logger()->info("simulating {} UEs over {} rings", dep.ue_angles_rad.size(), dep.ring_distances_m.size());
            return throughput_sweep(dep, cfg.scenario());
        }

        int cmd_simulate(const std::string &config_path, const std::string &out_dir)
        {
            const auto cfg = load_config(config_path);
            const auto res = simulate(cfg);
            std::error_code ec;
            std::filesystem::create_directories(out_dir, ec);
            if (ec)
                throw ConfigError(out_dir, "cannot create output directory: " + ec.message());
            auto results = open_output(std::filesystem::path(out_dir) / "results.csv");
            write_results_csv(results, res);
            auto summary = open_output(std::filesystem::path(out_dir) / "summary.csv");
            write_summary_csv(summary, res);
            return kExitOk;
        }

        std::string describe(const Coverage &c)
        {
            if (!c.distance_m)
                return "none";
            return format_number(*c.distance_m) + " m" + (c.censored ? " (censored)" : "");
        }

        int cmd_coverage(const std::string &config_path, double threshold, const std::string &out_path,
                         std::ostream &out)
        {
            if (!(threshold > 0.0))
                throw ConfigError("--threshold", "must be > 0");
            const auto cfg = load_config(config_path);
            const auto res = simulate(cfg);
            const auto paa = coverage_distance(res.paa, threshold);
            const auto jpta = coverage_distance(res.jpta, threshold);

            out << "PAA coverage: " << describe(paa) << '\n';
            out << "JPTA coverage: " << describe(jpta) << '\n';
            if (paa.distance_m && jpta.distance_m)
                out << "JPTA/PAA ratio: " << format_number(*jpta.distance_m / *paa.distance_m) << '\n';
            else
                out << "JPTA/PAA ratio: none\n";

            if (!out_path.empty())
            {
                auto f = open_output(out_path);
                f << "scheme,coverage_m,censored\n";
                for (const auto &[name, c] : {std::pair{"PAA", paa}, std::pair{"JPTA", jpta}})
                    f << name << ',' << (c.distance_m ? format_number(*c.distance_m) : std::string("none")) << ','
                      << (c.censored ? 1 : 0) << '\n';
            }
            return kExitOk;
        }
    }

    std::vector<double> parse_angle_range(const std::string &spec)
    {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw ConfigError("--angles", "expected start:stop:step, got '" + spec + "'");
        double v[3];
        for (int i = 0; i < 3; ++i)
        {
            try
            {
                v[i] = parse_double(parts[i], 0, "--angles");
            }
            catch (const FormatError &)
            {
                throw ConfigError("--angles", "'" + parts[i] + "' is not a number");
            }
        }
        const double start = v[0], stop = v[1], step = v[2];
        if (!(step > 0.0))
            throw ConfigError("--angles", "step must be > 0");
        if (!(stop >= start))
            throw ConfigError("--angles", "stop must be >= start");
        if (start < -90.0 || stop > 90.0)
            throw ConfigError("--angles", "angles must lie within [-90, 90]");
        const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> angles(n);
        for (std::size_t i = 0; i < n; ++i)
            angles[i] = start + static_cast<double>(i) * step;
        return angles;
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Joint phase-time array beam design and uplink evaluation"};
        app.require_subcommand(1);

        std::string config, out_path, codebook, angles = "-90:90:0.25";
        int type = 1;
        bool quantize = false;
        double threshold = 1e6;

        auto *design = app.add_subcommand("design", "Design a Type-1 or Type-2 codebook entry");
        design->add_option("config", config, "Configuration file")->required();
        design->add_option("--type", type, "Beam type")->check(CLI::IsMember({1, 2}))->default_val(1);
        design->add_flag("--quantize", quantize, "Round Type-2 delays to the delay grid");
        design->add_option("--out", out_path, "Codebook CSV")->required();

        auto *pattern = app.add_subcommand("pattern", "Evaluate a codebook on an angle x RB grid");
        pattern->add_option("config", config, "Configuration file")->required();
        pattern->add_option("--codebook", codebook, "Codebook CSV")->required();
        pattern->add_option("--angles", angles, "start:stop:step in degrees from boresight")->default_val(angles);
        pattern->add_option("--out", out_path, "Pattern CSV")->required();

        auto *simulate_cmd = app.add_subcommand("simulate", "Throughput vs distance for PAA and JPTA");
        simulate_cmd->add_option("config", config, "Configuration file")->required();
        simulate_cmd->add_option("--out", out_path, "Output directory")->required();

        auto *coverage = app.add_subcommand("coverage", "Throughput coverage distance of both schemes");
        coverage->add_option("config", config, "Configuration file")->required();
        coverage->add_option("--threshold", threshold, "Throughput threshold [bit/s]")->default_val(1e6);
        coverage->add_option("--out", out_path, "Coverage CSV");

        auto *defaults = app.add_subcommand("defaults", "Print the default configuration");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try
        {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return kExitConfig;
        }

        try
        {
            if (*design)
                return cmd_design(config, type, quantize, out_path, out);
            if (*pattern)
                return cmd_pattern(config, codebook, angles, out_path);
            if (*simulate_cmd)
                return cmd_simulate(config, out_path);
            if (*coverage)
                return cmd_coverage(config, threshold, out_path, out);
            if (*defaults)
            {
                out << default_config_text();
                return kExitOk;
            }
        }
        catch (const ConfigError &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitConfig;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitConfig;
        }
        catch (const std::exception &e)
        {
            err << "internal error: " << e.what() << '\n';
            return kExitInternal;
        }
        return kExitInternal;
    }
}
