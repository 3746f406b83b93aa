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

#include "jpta/sysim.hpp"
#include "jpta/csv.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace jpta
{
    namespace
    {
        // Runs fn(i) for i in [0, n) on a few worker threads. Each index is written by exactly one worker.
        template <typename Fn>
        void parallel_for(std::size_t n, Fn &&fn)
        {
            const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
            if (workers <= 1)
            {
                for (std::size_t i = 0; i < n; ++i)
                    fn(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < n; i = next++)
                        fn(i);
                });
        }
    }

    void Deployment::validate() const
    {
        if (ue_angles_rad.empty())
            throw std::invalid_argument("Deployment: at least one UE is required");
        for (const double a : ue_angles_rad)
            if (!(a >= -kPi / 2.0 && a <= kPi / 2.0))
                throw std::invalid_argument("Deployment: UE angles must lie within +-90 degrees of boresight");
        for (std::size_t i = 0; i < ring_distances_m.size(); ++i)
        {
            if (!(ring_distances_m[i] > 0.0))
                throw std::invalid_argument("Deployment: ring distances must be > 0");
            if (i > 0 && !(ring_distances_m[i] > ring_distances_m[i - 1]))
                throw std::invalid_argument("Deployment: ring distances must be strictly increasing");
        }
    }

    std::vector<double> log_ring_grid(double lo_m, double hi_m, std::size_t n)
    {
        if (!(lo_m > 0.0) || !(hi_m > lo_m) || n < 2)
            throw std::invalid_argument("log_ring_grid: need 0 < lo < hi and at least 2 points");
        std::vector<double> d(n);
        const double ratio = std::log(hi_m / lo_m) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = lo_m * std::exp(ratio * static_cast<double>(i));
        d.front() = lo_m;
        d.back() = hi_m;
        return d;
    }

    std::string_view scheme_name(Scheme s)
    {
        return s == Scheme::kPaa ? "PAA" : "JPTA";
    }

    std::vector<double> SchemeResult::distances() const
    {
        std::vector<double> d;
        for (const auto &r : rings)
            d.push_back(r.distance_m);
        return d;
    }

    std::vector<double> SchemeResult::mean_curve() const
    {
        std::vector<double> t;
        for (const auto &r : rings)
            t.push_back(r.mean_throughput_bps);
        return t;
    }

    SchemeResult paa_links(const Deployment &dep, const ArrayConfig &cfg, std::span<const PhaseTimeWeights> codebook,
                           const FrequencyGrid &grid)
    {
        dep.validate();
        if (codebook.empty())
            throw std::invalid_argument("run_paa: codebook is empty");

        SchemeResult res;
        res.scheme = Scheme::kPaa;
        const double duty = 1.0 / static_cast<double>(dep.ue_angles_rad.size());
        std::vector<std::size_t> all(grid.num_rbs);
        std::iota(all.begin(), all.end(), std::size_t{0});

        for (const double ue_angle : dep.ue_angles_rad)
        {
            const double theta = from_boresight(ue_angle);
            std::size_t beam = 0;
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < codebook.size(); ++b)
            {
                const double g = beam_gain_db(cfg, codebook[b], theta, cfg.carrier_hz);
                if (g > best)
                {
                    best = g;
                    beam = b;
                }
            }
            UeLink link{all, std::vector<double>(grid.num_rbs), duty};
            for (std::size_t r = 0; r < grid.num_rbs; ++r)
                link.gains_db[r] = beam_gain_db(cfg, codebook[beam], theta, grid.rb_center_hz(r));
            res.links.push_back(std::move(link));
            res.serving_beam.push_back(beam);
        }
        return res;
    }

    SchemeResult jpta_links(const Deployment &dep, const ArrayConfig &cfg, const FrequencyGrid &grid,
                            const DelayConstraint &dc, Type1Design *design_out)
    {
        dep.validate();
        const std::size_t n = dep.ue_angles_rad.size();

        // Subbands go to UEs in ascending angle order; stable for equal angles
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return dep.ue_angles_rad[a] < dep.ue_angles_rad[b]; });
        std::vector<double> thetas(n);
        for (std::size_t i = 0; i < n; ++i)
            thetas[i] = from_boresight(dep.ue_angles_rad[order[i]]);

        const auto target = Type1Target::equal_split(thetas, grid.num_rbs);
        auto design = design_type1(cfg, target, grid, dc);

        SchemeResult res;
        res.scheme = Scheme::kJpta;
        res.links.resize(n);
        std::vector<int> owner(grid.num_rbs, -1);
        for (std::size_t i = 0; i < n; ++i)
        {
            const std::size_t ue = order[i];
            const auto &entry = target.entries[i];
            UeLink &link = res.links[ue];
            link.slot_duty = 1.0;
            for (std::size_t r = entry.rbs.begin; r < entry.rbs.end; ++r)
            {
                if (owner[r] >= 0)
                    throw std::logic_error("jpta_links: RB " + std::to_string(r) + " allocated to two UEs");
                owner[r] = static_cast<int>(ue);
                link.rbs.push_back(r);
                link.gains_db.push_back(beam_gain_db(cfg, design.weights, entry.theta_rad, grid.rb_center_hz(r)));
            }
        }
        if (design_out)
            *design_out = std::move(design);
        return res;
    }

    void evaluate_rings(SchemeResult &res, std::span<const double> distances, const LinkModel &lm,
                        const McsTable &mcs, double scs_hz)
    {
        lm.validate();
        res.rings.assign(distances.size(), RingResult{});
        parallel_for(distances.size(), [&](std::size_t d) {
            RingResult ring;
            ring.distance_m = distances[d];
            double sum = 0.0;
            for (const auto &link : res.links)
            {
                ring.ues.push_back(select_rate(lm, distances[d], link.gains_db, mcs, scs_hz, link.slot_duty));
                sum += ring.ues.back().throughput_bps;
            }
            ring.mean_throughput_bps = res.links.empty() ? 0.0 : sum / static_cast<double>(res.links.size());
            res.rings[d] = std::move(ring);
        });
    }

    SchemeResult run_paa(const Deployment &dep, const ArrayConfig &cfg, const LinkModel &lm,
                         std::span<const PhaseTimeWeights> codebook, const FrequencyGrid &grid, const McsTable &mcs)
    {
        auto res = paa_links(dep, cfg, codebook, grid);
        evaluate_rings(res, dep.ring_distances_m, lm, mcs, grid.scs_hz);
        return res;
    }

    SchemeResult run_jpta(const Deployment &dep, const ArrayConfig &cfg, const LinkModel &lm, const FrequencyGrid &grid,
                          const McsTable &mcs, const DelayConstraint &dc)
    {
        auto res = jpta_links(dep, cfg, grid, dc);
        evaluate_rings(res, dep.ring_distances_m, lm, mcs, grid.scs_hz);
        return res;
    }

    ScenarioResult throughput_sweep(const Deployment &dep, const Scenario &sc)
    {
        ScenarioResult out;
        out.ue_angles_rad = dep.ue_angles_rad;
        out.paa = run_paa(dep, sc.array, sc.link, sc.paa_codebook, sc.grid, sc.mcs);
        out.jpta = run_jpta(dep, sc.array, sc.link, sc.grid, sc.mcs, sc.delays);
        return out;
    }

    Coverage coverage_distance(std::span<const double> distances_m, std::span<const double> mean_throughput_bps,
                               double threshold_bps)
    {
        if (!(threshold_bps > 0.0))
            throw std::invalid_argument("coverage_distance: threshold must be > 0");
        if (distances_m.size() != mean_throughput_bps.size())
            throw std::invalid_argument("coverage_distance: distance and throughput lengths differ");

        std::optional<std::size_t> last;
        for (std::size_t i = 0; i < distances_m.size(); ++i)
            if (mean_throughput_bps[i] >= threshold_bps)
                last = i;
        if (!last)
            return {};
        const std::size_t i = *last;
        if (i + 1 == distances_m.size())
            return {distances_m[i], true};

        const double t0 = mean_throughput_bps[i], t1 = mean_throughput_bps[i + 1];
        const double frac = (t0 - threshold_bps) / (t0 - t1);
        return {distances_m[i] + frac * (distances_m[i + 1] - distances_m[i]), false};
    }

    Coverage coverage_distance(const SchemeResult &res, double threshold_bps)
    {
        const auto d = res.distances();
        const auto t = res.mean_curve();
        return coverage_distance(d, t, threshold_bps);
    }

    namespace
    {
        void write_rows(std::ostream &os, const SchemeResult &s, std::span<const double> angles)
        {
            for (const auto &ring : s.rings)
                for (std::size_t u = 0; u < ring.ues.size(); ++u)
                {
                    const auto &d = ring.ues[u];
                    os << scheme_name(s.scheme) << ',' << format_number(ring.distance_m) << ',' << u << ','
                       << format_number(rad_to_deg(angles[u])) << ',' << (d.mcs_index ? *d.mcs_index : -1) << ','
                       << d.num_rbs << ',' << format_number(d.effective_snr_db) << ','
                       << format_number(d.throughput_bps) << '\n';
                }
        }
    }

    void write_results_csv(std::ostream &os, const ScenarioResult &res)
    {
        os << "scheme,distance_m,ue_index,ue_angle_deg,mcs,num_rbs,eff_snr_db,throughput_bps\n";
        write_rows(os, res.paa, res.ue_angles_rad);
        write_rows(os, res.jpta, res.ue_angles_rad);
    }

    void write_summary_csv(std::ostream &os, const ScenarioResult &res)
    {
        os << "scheme,distance_m,mean_throughput_bps\n";
        for (const auto *s : {&res.paa, &res.jpta})
            for (const auto &ring : s->rings)
                os << scheme_name(s->scheme) << ',' << format_number(ring.distance_m) << ','
                   << format_number(ring.mean_throughput_bps) << '\n';
    }
}
