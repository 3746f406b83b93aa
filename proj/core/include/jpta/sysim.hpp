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

#ifndef JPTA_SYSIM_HPP
#define JPTA_SYSIM_HPP

#include "jpta/array.hpp"
#include "jpta/codebook.hpp"
#include "jpta/link.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace jpta
{
    // UEs on one ring; rings are evaluated one at a time
    struct Deployment
    {
        std::vector<double> ue_angles_rad;    // boresight-relative
        std::vector<double> ring_distances_m; // strictly increasing

        void validate() const;
    };

    // n log-spaced distances over [lo, hi]
    std::vector<double> log_ring_grid(double lo_m, double hi_m, std::size_t n);

    enum class Scheme
    {
        kPaa,  // phased array, one beam per slot, TDM across UEs
        kJpta, // joint phase-time array, one Type-1 beam, FDM across UEs
    };
    std::string_view scheme_name(Scheme s);

    // What one UE sees through its serving beam: gain on each available RB and its slot share
    struct UeLink
    {
        std::vector<std::size_t> rbs;
        std::vector<double> gains_db; // parallel to rbs
        double slot_duty = 1.0;
    };

    struct RingResult
    {
        double distance_m = 0.0;
        std::vector<RateDecision> ues;
        double mean_throughput_bps = 0.0;
    };

    struct SchemeResult
    {
        Scheme scheme = Scheme::kPaa;
        std::vector<UeLink> links;
        std::vector<std::size_t> serving_beam; // PAA only: codebook index per UE
        std::vector<RingResult> rings;

        std::vector<double> distances() const;
        std::vector<double> mean_curve() const;
    };

    struct ScenarioResult
    {
        std::vector<double> ue_angles_rad;
        SchemeResult paa;
        SchemeResult jpta;
    };

    // Everything a run needs besides the deployment
    struct Scenario
    {
        ArrayConfig array;
        FrequencyGrid grid;
        LinkModel link;
        McsTable mcs = McsTable::standard();
        DelayConstraint delays;
        std::vector<PhaseTimeWeights> paa_codebook;
    };

    // Serving-beam selection and per-RB gains
    SchemeResult paa_links(const Deployment &dep, const ArrayConfig &cfg, std::span<const PhaseTimeWeights> codebook,
                           const FrequencyGrid &grid);
    SchemeResult jpta_links(const Deployment &dep, const ArrayConfig &cfg, const FrequencyGrid &grid,
                            const DelayConstraint &dc, Type1Design *design_out = nullptr);

    // Rate selection for every UE link at every ring distance; rings may run concurrently
    void evaluate_rings(SchemeResult &res, std::span<const double> distances, const LinkModel &lm,
                        const McsTable &mcs, double scs_hz);

    SchemeResult run_paa(const Deployment &dep, const ArrayConfig &cfg, const LinkModel &lm,
                         std::span<const PhaseTimeWeights> codebook, const FrequencyGrid &grid, const McsTable &mcs);
    SchemeResult run_jpta(const Deployment &dep, const ArrayConfig &cfg, const LinkModel &lm, const FrequencyGrid &grid,
                          const McsTable &mcs, const DelayConstraint &dc);
    ScenarioResult throughput_sweep(const Deployment &dep, const Scenario &sc);

    struct Coverage
    {
        std::optional<double> distance_m; // empty: threshold never met
        bool censored = false;            // met at the farthest ring, true coverage may be larger
    };

    // Largest distance with mean throughput >= threshold, linearly interpolated between rings
    Coverage coverage_distance(std::span<const double> distances_m, std::span<const double> mean_throughput_bps,
                               double threshold_bps);
    Coverage coverage_distance(const SchemeResult &res, double threshold_bps);

    // "scheme,distance_m,ue_index,ue_angle_deg,mcs,num_rbs,eff_snr_db,throughput_bps"
    // Rows: PAA then JPTA, distance ascending, UE index ascending. Outage rows carry mcs = -1.
    void write_results_csv(std::ostream &os, const ScenarioResult &res);
    // "scheme,distance_m,mean_throughput_bps", same ordering
    void write_summary_csv(std::ostream &os, const ScenarioResult &res);
}

#endif
