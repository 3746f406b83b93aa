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

#ifndef JPTA_LINK_HPP
#define JPTA_LINK_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace jpta
{
    // Uplink budget (large-scale fading only)
    struct LinkModel
    {
        double path_loss_exponent = 3.0;
        double carrier_hz = 28e9;
        double ue_tx_power_dbm = 23.0;
        double ue_beam_gain_db = 0.0;
        double bs_noise_figure_db = 5.0;
        double thermal_noise_dbm_per_hz = -174.0;

        void validate() const;

        // Noise power in one RB of 12 subcarriers, including the noise figure [dBm]
        double rb_noise_dbm(double scs_hz) const;
    };

    struct McsEntry
    {
        int index = 0;
        double spectral_efficiency = 0.0; // [bit/s/Hz]
        double snr_threshold_db = 0.0;    // Effective SNR at which BLER <= 10%
        double eesm_beta = 1.0;
    };

    class McsTable
    {
    public:
        explicit McsTable(std::vector<McsEntry> entries);

        // 15-level ladder with Shannon-gap thresholds 10*log10(2^SE - 1) + margin_db
        static McsTable standard(double margin_db = 2.0, double eesm_beta = 1.0);

        // CSV "index,spectral_efficiency,snr_threshold_db"
        static McsTable read_csv(std::istream &is);

        // CSV "index,beta": overrides the EESM beta of listed indices
        void apply_beta_csv(std::istream &is);

        std::span<const McsEntry> entries() const { return entries_; }
        const McsEntry &operator[](std::size_t i) const { return entries_[i]; }
        std::size_t size() const { return entries_.size(); }
        const McsEntry &lowest() const { return entries_.front(); }
        const McsEntry &highest() const { return entries_.back(); }

    private:
        void validate() const;
        std::vector<McsEntry> entries_;
    };

    // Outcome of rate selection for one UE. outage == true means no MCS is feasible on >= 4 RBs;
    // then mcs_index is empty, num_rbs is 0 and throughput_bps is 0.
    struct RateDecision
    {
        std::optional<int> mcs_index;
        std::size_t num_rbs = 0;
        double effective_snr_db = 0.0;
        double bler = 1.0;
        double throughput_bps = 0.0;
        bool outage = true;
    };

    inline constexpr std::size_t kMinRbs = 4;
    inline constexpr double kTargetBler = 0.1;

    // 20*log10(c / (4 pi f_c)) - 10*beta*log10(d)
    double path_gain_db(const LinkModel &lm, double distance_m);

    // Per-RB SNR when the total UE power is split evenly over the allocated RBs.
    // gains_db_per_rb is indexed by RB; the result follows the order of allocated_rbs.
    std::vector<double> snr_per_rb_db(const LinkModel &lm, double distance_m, std::span<const double> gains_db_per_rb,
                                      std::span<const std::size_t> allocated_rbs, double scs_hz);

    // -beta * ln(mean(exp(-snr_lin / beta))), returned in dB
    double eesm_effective_snr_db(std::span<const double> snrs_db, double beta);

    // Hard threshold: 0 at or above the MCS threshold, 1 below
    double bler(const McsEntry &mcs, double effective_snr_db);

    // Best (MCS, RB count) over n in [4, |available|] using the n highest-gain RBs.
    // available_gains_db holds the beam gain of each available RB.
    RateDecision select_rate(const LinkModel &lm, double distance_m, std::span<const double> available_gains_db,
                             const McsTable &mcs, double scs_hz, double slot_duty);
}

#endif
