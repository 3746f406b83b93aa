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

#include "jpta/array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jpta
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * kPi;
        constexpr double kDelayGridTolerance = 1e-15; // [s]

        double wrap_phase(double phi)
        {
            double r = std::fmod(phi, kTwoPi);
            if (r < 0.0)
                r += kTwoPi;
            if (r >= kTwoPi) // fmod of tiny negatives can round up to 2*pi
                r = 0.0;
            return r;
        }
    }

    void ArrayConfig::validate() const
    {
        if (num_elements < 1)
            throw std::invalid_argument("ArrayConfig: num_elements must be >= 1");
        if (!(spacing_m > 0.0))
            throw std::invalid_argument("ArrayConfig: spacing_m must be > 0");
        if (!(carrier_hz > 0.0))
            throw std::invalid_argument("ArrayConfig: carrier_hz must be > 0");
    }

    ArrayConfig ArrayConfig::half_wavelength(std::size_t num_elements, double carrier_hz, double peak_gain_db)
    {
        ArrayConfig cfg;
        cfg.num_elements = num_elements;
        cfg.carrier_hz = carrier_hz;
        cfg.spacing_m = kSpeedOfLight / carrier_hz / 2.0;
        cfg.peak_gain_db = peak_gain_db;
        cfg.validate();
        return cfg;
    }

    double FrequencyGrid::subcarrier_hz(std::size_t k) const
    {
        const double n = static_cast<double>(num_subcarriers());
        return center_hz - (n / 2.0 - static_cast<double>(k) - 0.5) * scs_hz;
    }

    double FrequencyGrid::rb_center_hz(std::size_t rb) const
    {
        // Mean of the 12 subcarriers of the RB
        const double n = static_cast<double>(num_subcarriers());
        const double mid = static_cast<double>(kSubcarriersPerRb * rb) + (kSubcarriersPerRb - 1) / 2.0;
        return center_hz - (n / 2.0 - mid - 0.5) * scs_hz;
    }

    std::vector<double> FrequencyGrid::rb_centers_hz() const
    {
        std::vector<double> f(num_rbs);
        for (std::size_t r = 0; r < num_rbs; ++r)
            f[r] = rb_center_hz(r);
        return f;
    }

    std::vector<double> FrequencyGrid::subcarriers_hz() const
    {
        std::vector<double> f(num_subcarriers());
        for (std::size_t k = 0; k < f.size(); ++k)
            f[k] = subcarrier_hz(k);
        return f;
    }

    void FrequencyGrid::validate() const
    {
        if (!(center_hz > 0.0))
            throw std::invalid_argument("FrequencyGrid: center_hz must be > 0");
        if (!(scs_hz > 0.0))
            throw std::invalid_argument("FrequencyGrid: scs_hz must be > 0");
        if (num_rbs < 1)
            throw std::invalid_argument("FrequencyGrid: num_rbs must be >= 1");
        if (static_cast<double>(num_subcarriers()) * scs_hz > bandwidth_hz * (1.0 + 1e-12))
            throw std::invalid_argument("FrequencyGrid: num_rbs * 12 * scs_hz exceeds bandwidth_hz");
    }

    PhaseTimeWeights::PhaseTimeWeights(std::vector<double> delays_s, std::vector<double> phases_rad, double delay_step_s)
        : delays_(std::move(delays_s)), phases_(std::move(phases_rad)), delay_step_(delay_step_s)
    {
        if (delays_.size() != phases_.size())
            throw std::invalid_argument("PhaseTimeWeights: delays and phases differ in length (" +
                                        std::to_string(delays_.size()) + " vs " + std::to_string(phases_.size()) + ")");
        if (delay_step_ < 0.0 || !std::isfinite(delay_step_))
            throw std::invalid_argument("PhaseTimeWeights: delay step must be finite and >= 0");
        for (std::size_t m = 0; m < delays_.size(); ++m)
        {
            const double tau = delays_[m];
            if (!std::isfinite(tau) || tau < 0.0)
                throw std::invalid_argument("PhaseTimeWeights: delay of element " + std::to_string(m + 1) +
                                            " must be finite and >= 0");
            if (delay_step_ > 0.0)
            {
                const double snapped = std::round(tau / delay_step_) * delay_step_;
                if (std::abs(tau - snapped) > kDelayGridTolerance)
                    throw std::invalid_argument("PhaseTimeWeights: delay of element " + std::to_string(m + 1) +
                                                " is not a multiple of the delay step");
            }
            if (!std::isfinite(phases_[m]))
                throw std::invalid_argument("PhaseTimeWeights: phase of element " + std::to_string(m + 1) +
                                            " is not finite");
            phases_[m] = wrap_phase(phases_[m]);
        }
    }

    PhaseTimeWeights PhaseTimeWeights::zeros(std::size_t num_elements)
    {
        return PhaseTimeWeights(std::vector<double>(num_elements, 0.0), std::vector<double>(num_elements, 0.0));
    }

    double PhaseTimeWeights::max_delay() const
    {
        return delays_.empty() ? 0.0 : *std::max_element(delays_.begin(), delays_.end());
    }

    double WeightVector::norm() const
    {
        double s = 0.0;
        for (const auto &v : entries_)
            s += std::norm(v);
        return std::sqrt(s);
    }

    std::complex<double> inner(const WeightVector &a, const WeightVector &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("inner: vector lengths differ");
        std::complex<double> s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += std::conj(a[i]) * b[i];
        return s;
    }

    WeightVector steering_vector(const ArrayConfig &cfg, double theta_rad, double freq_hz)
    {
        if (!(freq_hz > 0.0))
            throw std::invalid_argument("steering_vector: frequency must be > 0");
        const std::size_t M = cfg.num_elements;
        const double scale = 1.0 / std::sqrt(static_cast<double>(M));
        const double k = kTwoPi * cfg.spacing_m * freq_hz * std::cos(theta_rad) / kSpeedOfLight;

        std::vector<std::complex<double>> a(M);
        for (std::size_t m = 0; m < M; ++m)
            a[m] = std::polar(scale, k * static_cast<double>(m));
        return WeightVector(std::move(a));
    }

    WeightVector jpta_response(const ArrayConfig &cfg, const PhaseTimeWeights &w, double freq_hz)
    {
        const std::size_t M = cfg.num_elements;
        if (w.size() != M)
            throw std::invalid_argument("jpta_response: weights have " + std::to_string(w.size()) +
                                        " elements, array has " + std::to_string(M));
        const double scale = 1.0 / std::sqrt(static_cast<double>(M));
        const auto tau = w.delays();
        const auto phi = w.phases();

        std::vector<std::complex<double>> p(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            // Delay phase reduced mod 2*pi first: f*tau can be O(1e3) turns
            const double turns = freq_hz * tau[m];
            const double delay_phase = kTwoPi * (turns - std::floor(turns));
            p[m] = std::polar(scale, phi[m] + delay_phase);
        }
        return WeightVector(std::move(p));
    }

    double beam_gain_db(const ArrayConfig &cfg, const PhaseTimeWeights &w, double theta_rad, double freq_hz)
    {
        const double corr = std::abs(inner(steering_vector(cfg, theta_rad, freq_hz), jpta_response(cfg, w, freq_hz)));
        return cfg.peak_gain_db + 20.0 * std::log10(std::clamp(corr, kGainFloorCorrelation, 1.0));
    }

    std::span<const double> PatternMap::row(std::size_t angle_idx) const
    {
        return std::span<const double>(gains_db).subspan(angle_idx * num_rbs, num_rbs);
    }

    std::size_t PatternMap::argmax_angle(std::size_t rb) const
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < angles_rad.size(); ++i)
            if (at(i, rb) > at(best, rb))
                best = i;
        return best;
    }

    double PatternMap::max_over_angles(std::size_t rb) const
    {
        return at(argmax_angle(rb), rb);
    }

    PatternMap pattern_map(const ArrayConfig &cfg, const PhaseTimeWeights &w, std::span<const double> angles_rad,
                           const FrequencyGrid &grid)
    {
        if (angles_rad.empty())
            throw std::invalid_argument("pattern_map: angle grid is empty");
        if (grid.num_rbs == 0)
            throw std::invalid_argument("pattern_map: frequency grid has no RBs");
        for (std::size_t i = 1; i < angles_rad.size(); ++i)
            if (!(angles_rad[i] > angles_rad[i - 1]))
                throw std::invalid_argument("pattern_map: angle grid must be strictly increasing");

        PatternMap out;
        out.angles_rad.assign(angles_rad.begin(), angles_rad.end());
        out.num_rbs = grid.num_rbs;
        out.gains_db.resize(angles_rad.size() * grid.num_rbs);

        for (std::size_t r = 0; r < grid.num_rbs; ++r)
        {
            const double f = grid.rb_center_hz(r);
            const WeightVector p = jpta_response(cfg, w, f);
            for (std::size_t i = 0; i < angles_rad.size(); ++i)
            {
                const double corr = std::abs(inner(steering_vector(cfg, angles_rad[i], f), p));
                out.gains_db[i * grid.num_rbs + r] =
                    cfg.peak_gain_db + 20.0 * std::log10(std::clamp(corr, kGainFloorCorrelation, 1.0));
            }
        }
        return out;
    }
}
