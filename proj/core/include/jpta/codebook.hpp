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

#ifndef JPTA_CODEBOOK_HPP
#define JPTA_CODEBOOK_HPP

#include "jpta/array.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace jpta
{
    // Half-open RB interval [begin, end)
    struct RbRange
    {
        std::size_t begin = 0;
        std::size_t end = 0;

        std::size_t size() const { return end - begin; }
        bool contains(std::size_t rb) const { return rb >= begin && rb < end; }
    };

    // Discrete multi-direction target: each entry steers one RB range toward one angle.
    struct Type1Target
    {
        struct Entry
        {
            double theta_rad; // array-axis convention
            RbRange rbs;
        };
        std::vector<Entry> entries;

        // Ranges must be disjoint and tile [0, num_rbs); angles in [0, pi]
        void validate(std::size_t num_rbs) const;

        // Target angle of every RB
        std::vector<double> theta_per_rb(std::size_t num_rbs) const;

        // Equal RB shares in list order, remainder to the last entry
        static Type1Target equal_split(std::span<const double> thetas_rad, std::size_t num_rbs);
    };

    // Rainbow beam covering (center - spread/2, center + spread/2) across the band
    struct RainbowSpec
    {
        double center_rad = kPi / 2.0;
        double spread_rad = 0.0;

        void validate() const;
    };

    // Realizable delays: {0, step, 2*step, ...} up to max_delay_s
    struct DelayConstraint
    {
        double step_s = 2.5e-9;
        double max_delay_s = 63 * 2.5e-9;

        void validate() const;
        std::size_t grid_size() const;
        double grid_delay(std::size_t i) const { return static_cast<double>(i) * step_s; }
    };

    struct Type1Options
    {
        bool per_subcarrier = false; // Evaluate the objective on every subcarrier instead of RB centers
    };

    struct Type1Design
    {
        PhaseTimeWeights weights;
        double objective = 0.0; // sum_k ||p_k - b_k||^2 at the evaluation frequencies
    };

    // Frequencies and target angles the Type-1 objective is evaluated on
    struct Type1Samples
    {
        std::vector<double> freqs_hz;
        std::vector<double> thetas_rad;
    };
    Type1Samples type1_samples(const Type1Target &target, const FrequencyGrid &grid, const Type1Options &opt = {});

    // sum_k ||jpta_response(w, f_k) - steering_vector(theta_k, f_k)||^2
    double type1_objective(const ArrayConfig &cfg, const Type1Samples &samples, const PhaseTimeWeights &w);

    // |S_m(tau)| = |sum_k b_{k,m} exp(-j 2 pi f_k tau)| for every antenna (rows) and grid delay (columns)
    std::vector<std::vector<double>> type1_correlation_table(const ArrayConfig &cfg, const Type1Samples &samples,
                                                             const DelayConstraint &dc);

    // Exact minimizer of the Type-1 objective over the quantized delay grid. The objective separates
    // per antenna; for each antenna the best delay maximizes |S_m(tau)| (ties -> smaller delay) and
    // the phase is arg S_m(tau_m).
    Type1Design design_type1(const ArrayConfig &cfg, const Type1Target &target, const FrequencyGrid &grid,
                             const DelayConstraint &dc, const Type1Options &opt = {});

    // Phase reference of the rainbow design.
    // kCarrier subtracts 2*pi*f_c*tau_m from the phases so the carrier points at the center angle;
    // kAbsolute uses the bare closed form (the carrier then points wherever f_c*tau_m wraps to).
    enum class RainbowReference
    {
        kCarrier,
        kAbsolute
    };

    // Closed-form rainbow beam: tau_m = m/W * sin(spread/2), phi_m = 2*pi*m*d*cos(center)/lambda
    // (m 0-based, W = grid bandwidth). Delays are unquantized.
    PhaseTimeWeights design_type2(const ArrayConfig &cfg, const RainbowSpec &spec, const FrequencyGrid &grid,
                                  RainbowReference ref = RainbowReference::kCarrier);

    // Round to the nearest grid delay (ties down) and clamp into [0, max_delay_s]
    PhaseTimeWeights quantize_delays(const PhaseTimeWeights &w, const DelayConstraint &dc);

    // Sector [lo, hi] in array-axis radians
    struct AngleInterval
    {
        double lo_rad;
        double hi_rad;
    };

    // Frequency-flat phased-array beams toward the midpoints of equal sector slices
    std::vector<PhaseTimeWeights> paa_codebook(const ArrayConfig &cfg, std::size_t num_beams, AngleInterval sector);
    std::vector<double> paa_beam_angles(std::size_t num_beams, AngleInterval sector);

    // CSV codebook exchange: header "antenna,delay_ns,phase_deg", antennas numbered from 1,
    // 6 significant digits
    void write_codebook_csv(std::ostream &os, const PhaseTimeWeights &w);
    PhaseTimeWeights read_codebook_csv(std::istream &is);
}

#endif
