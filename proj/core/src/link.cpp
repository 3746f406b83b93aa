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

#include "jpta/link.hpp"
#include "jpta/array.hpp"
#include "jpta/csv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jpta
{
    namespace
    {
        // Spectral efficiencies of the 256QAM CQI ladder
        constexpr double kStandardSe[] = {0.1523, 0.3770, 0.8770, 1.4766, 1.9141, 2.4063, 2.7305, 3.3223,
                                          3.9023, 4.5234, 5.1152, 5.5547, 6.2266, 6.9141, 7.4063};

        constexpr double kRelTie = 1e-12;

        double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
        double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

        // -beta * ln(mean(exp(-x_i / beta))) in linear units, via log-sum-exp
        double eesm_linear(std::span<const double> lin, double beta)
        {
            double top = -std::numeric_limits<double>::infinity();
            for (const double x : lin)
                top = std::max(top, -x / beta);
            double acc = 0.0;
            for (const double x : lin)
                acc += std::exp(-x / beta - top);
            return -beta * (top + std::log(acc / static_cast<double>(lin.size())));
        }
    }

    void LinkModel::validate() const
    {
        if (!(path_loss_exponent > 0.0))
            throw std::invalid_argument("LinkModel: path_loss_exponent must be > 0");
        if (!(carrier_hz > 0.0))
            throw std::invalid_argument("LinkModel: carrier_hz must be > 0");
    }

    double LinkModel::rb_noise_dbm(double scs_hz) const
    {
        return thermal_noise_dbm_per_hz + 10.0 * std::log10(12.0 * scs_hz) + bs_noise_figure_db;
    }

    McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries))
    {
        validate();
    }

    void McsTable::validate() const
    {
        if (entries_.empty())
            throw std::invalid_argument("McsTable: table is empty");
        if (entries_.front().index != 0)
            throw std::invalid_argument("McsTable: first entry must have index 0");
        for (std::size_t i = 0; i < entries_.size(); ++i)
        {
            const auto &e = entries_[i];
            if (!(e.spectral_efficiency > 0.0))
                throw std::invalid_argument("McsTable: spectral efficiency of index " + std::to_string(e.index) +
                                            " must be > 0");
            if (!(e.eesm_beta > 0.0))
                throw std::invalid_argument("McsTable: EESM beta of index " + std::to_string(e.index) + " must be > 0");
            if (i == 0)
                continue;
            const auto &p = entries_[i - 1];
            if (e.index != p.index + 1)
                throw std::invalid_argument("McsTable: indices must be consecutive from 0");
            if (!(e.spectral_efficiency > p.spectral_efficiency))
                throw std::invalid_argument("McsTable: spectral efficiency must increase with index");
            if (!(e.snr_threshold_db > p.snr_threshold_db))
                throw std::invalid_argument("McsTable: SNR threshold must increase with index");
        }
    }

    McsTable McsTable::standard(double margin_db, double eesm_beta)
    {
        std::vector<McsEntry> e;
        int index = 0;
        for (const double se : kStandardSe)
            e.push_back({index++, se, lin_to_db(std::pow(2.0, se) - 1.0) + margin_db, eesm_beta});
        return McsTable(std::move(e));
    }

    McsTable McsTable::read_csv(std::istream &is)
    {
        const auto rows = jpta::read_csv(is, {"index", "spectral_efficiency", "snr_threshold_db"});
        std::vector<McsEntry> e;
        for (const auto &r : rows)
            e.push_back({static_cast<int>(parse_integer(r.fields[0], r.line, "index")),
                         parse_double(r.fields[1], r.line, "spectral_efficiency"),
                         parse_double(r.fields[2], r.line, "snr_threshold_db"), 1.0});
        try
        {
            return McsTable(std::move(e));
        }
        catch (const std::invalid_argument &ex)
        {
            throw FormatError(ex.what());
        }
    }

    void McsTable::apply_beta_csv(std::istream &is)
    {
        const auto rows = jpta::read_csv(is, {"index", "beta"});
        for (const auto &r : rows)
        {
            const long index = parse_integer(r.fields[0], r.line, "index");
            const double beta = parse_double(r.fields[1], r.line, "beta");
            if (index < 0 || index >= static_cast<long>(entries_.size()))
                throw FormatError("line " + std::to_string(r.line) + ": no MCS with index " + std::to_string(index));
            if (!(beta > 0.0))
                throw FormatError("line " + std::to_string(r.line) + ": beta must be > 0");
            entries_[static_cast<std::size_t>(index)].eesm_beta = beta;
        }
    }

    double path_gain_db(const LinkModel &lm, double distance_m)
    {
        if (!(distance_m > 0.0))
            throw std::invalid_argument("path_gain_db: distance must be > 0");
        return 20.0 * std::log10(kSpeedOfLight / (4.0 * kPi * lm.carrier_hz)) -
               10.0 * lm.path_loss_exponent * std::log10(distance_m);
    }

    std::vector<double> snr_per_rb_db(const LinkModel &lm, double distance_m, std::span<const double> gains_db_per_rb,
                                      std::span<const std::size_t> allocated_rbs, double scs_hz)
    {
        if (allocated_rbs.empty())
            throw std::invalid_argument("snr_per_rb_db: allocation is empty");
        const double base = lm.ue_tx_power_dbm - 10.0 * std::log10(static_cast<double>(allocated_rbs.size())) +
                            lm.ue_beam_gain_db + path_gain_db(lm, distance_m) - lm.rb_noise_dbm(scs_hz);
        std::vector<double> snr;
        snr.reserve(allocated_rbs.size());
        for (const std::size_t rb : allocated_rbs)
        {
            if (rb >= gains_db_per_rb.size())
                throw std::invalid_argument("snr_per_rb_db: RB " + std::to_string(rb) + " has no beam gain");
            snr.push_back(base + gains_db_per_rb[rb]);
        }
        return snr;
    }

    double eesm_effective_snr_db(std::span<const double> snrs_db, double beta)
    {
        if (snrs_db.empty())
            throw std::invalid_argument("eesm_effective_snr_db: no SNR values");
        if (!(beta > 0.0))
            throw std::invalid_argument("eesm_effective_snr_db: beta must be > 0");
        std::vector<double> lin(snrs_db.size());
        std::transform(snrs_db.begin(), snrs_db.end(), lin.begin(), db_to_lin);
        return lin_to_db(eesm_linear(lin, beta));
    }

    double bler(const McsEntry &mcs, double effective_snr_db)
    {
        return effective_snr_db >= mcs.snr_threshold_db ? 0.0 : 1.0;
    }

    RateDecision select_rate(const LinkModel &lm, double distance_m, std::span<const double> available_gains_db,
                             const McsTable &mcs, double scs_hz, double slot_duty)
    {
        if (available_gains_db.empty())
            throw std::invalid_argument("select_rate: no available RBs");
        if (!(slot_duty > 0.0 && slot_duty <= 1.0))
            throw std::invalid_argument("select_rate: slot duty must be in (0, 1]");

        // Best-gain-first ordering; equal gains keep RB order
        std::vector<double> gains(available_gains_db.begin(), available_gains_db.end());
        std::stable_sort(gains.begin(), gains.end(), std::greater<>());

        // Full-power linear SNR per RB; splitting over n RBs divides by n
        const double base_db =
            lm.ue_tx_power_dbm + lm.ue_beam_gain_db + path_gain_db(lm, distance_m) - lm.rb_noise_dbm(scs_hz);
        std::vector<double> full_power(gains.size());
        for (std::size_t i = 0; i < gains.size(); ++i)
            full_power[i] = db_to_lin(base_db + gains[i]);

        std::vector<double> betas;
        for (const auto &e : mcs.entries())
            if (std::find(betas.begin(), betas.end(), e.eesm_beta) == betas.end())
                betas.push_back(e.eesm_beta);

        const double rb_hz = 12.0 * scs_hz;
        std::vector<double> lin;
        std::vector<double> eff_by_beta(betas.size());
        auto effective = [&](std::size_t n) {
            lin.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                lin[i] = full_power[i] / static_cast<double>(n);
            for (std::size_t b = 0; b < betas.size(); ++b)
                eff_by_beta[b] = lin_to_db(eesm_linear(lin, betas[b]));
        };
        auto eff_for = [&](const McsEntry &e) {
            const auto it = std::find(betas.begin(), betas.end(), e.eesm_beta);
            return eff_by_beta[static_cast<std::size_t>(it - betas.begin())];
        };

        RateDecision best;
        for (std::size_t n = kMinRbs; n <= gains.size(); ++n)
        {
            effective(n);
            for (std::size_t i = mcs.size(); i-- > 0;)
            {
                const auto &e = mcs[i];
                const double eff = eff_for(e);
                if (bler(e, eff) > kTargetBler)
                    continue;
                const double tput = e.spectral_efficiency * static_cast<double>(n) * rb_hz * slot_duty;
                const bool better = best.outage || tput > best.throughput_bps * (1.0 + kRelTie) ||
                                    (tput >= best.throughput_bps * (1.0 - kRelTie) && e.index > *best.mcs_index);
                if (better)
                    best = RateDecision{e.index, n, eff, bler(e, eff), tput, false};
                break; // lower MCS on the same RBs cannot do better
            }
        }

        if (best.outage)
        {
            effective(std::min(kMinRbs, gains.size()));
            best.effective_snr_db = eff_for(mcs.lowest());
        }
        return best;
    }
}
