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

#ifndef JPTA_ARRAY_HPP
#define JPTA_ARRAY_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Angle convention
// ----------------
// All angles inside the library are measured from the array axis, theta in [0, pi], with
// boresight at theta = pi/2. The steering phase of element m (0-based) is
//     +2*pi * m * d * f * cos(theta) / c
// and a joint phase-time branch applies exp(+j*(phi_m + 2*pi*f*tau_m)) to the receive signal.
// Because the branch weight multiplies the incoming wave without conjugation, a weight that
// equals the steering vector of theta is matched to the mirrored arrival direction. User-facing
// angles (config files, CLI, CSV) are therefore boresight-relative degrees with
//     theta = pi/2 + angle_from_boresight
// so that positive user angles map to cos(theta) < 0. Use from_boresight()/to_boresight().

namespace jpta
{
    inline constexpr double kSpeedOfLight = 299792458.0; // [m/s]
    inline constexpr double kPi = 3.14159265358979323846;

    // Boresight-relative angle [rad] -> array-axis angle [rad]
    constexpr double from_boresight(double angle_rad) { return kPi / 2.0 + angle_rad; }
    constexpr double to_boresight(double theta_rad) { return theta_rad - kPi / 2.0; }
    constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
    constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

    // Horizontal uniform linear array. One delay element and one phase shifter per branch.
    struct ArrayConfig
    {
        std::size_t num_elements = 16;
        double spacing_m = kSpeedOfLight / 28e9 / 2.0;
        double carrier_hz = 28e9;
        double peak_gain_db = 28.0; // Boresight gain of the full (vertical x horizontal) panel

        double wavelength() const { return kSpeedOfLight / carrier_hz; }
        void validate() const;

        // Half-wavelength spacing at the carrier
        static ArrayConfig half_wavelength(std::size_t num_elements, double carrier_hz, double peak_gain_db);
    };

    // OFDM frequency axis. RB r covers subcarriers [12r, 12r + 12).
    struct FrequencyGrid
    {
        static constexpr std::size_t kSubcarriersPerRb = 12;

        double center_hz = 28e9;
        double bandwidth_hz = 400e6;
        double scs_hz = 120e3;
        std::size_t num_rbs = 264;

        std::size_t num_subcarriers() const { return kSubcarriersPerRb * num_rbs; }
        double rb_bandwidth_hz() const { return kSubcarriersPerRb * scs_hz; }
        double subcarrier_hz(std::size_t k) const;
        double rb_center_hz(std::size_t rb) const;
        std::vector<double> rb_centers_hz() const;
        std::vector<double> subcarriers_hz() const;
        void validate() const;
    };

    // Per-branch delay and phase of a joint phase-time array.
    // Phases are wrapped to [0, 2*pi); delay_step_s == 0 marks unquantized delays.
    class PhaseTimeWeights
    {
    public:
        PhaseTimeWeights() = default;
        PhaseTimeWeights(std::vector<double> delays_s, std::vector<double> phases_rad, double delay_step_s = 0.0);

        static PhaseTimeWeights zeros(std::size_t num_elements);

        std::size_t size() const { return delays_.size(); }
        std::span<const double> delays() const { return delays_; }
        std::span<const double> phases() const { return phases_; }
        double delay_step() const { return delay_step_; }
        double max_delay() const;

    private:
        std::vector<double> delays_;
        std::vector<double> phases_;
        double delay_step_ = 0.0;
    };

    // Unit-norm vector of equal-magnitude coefficients (1/sqrt(M) each)
    class WeightVector
    {
    public:
        explicit WeightVector(std::vector<std::complex<double>> entries) : entries_(std::move(entries)) {}

        std::size_t size() const { return entries_.size(); }
        std::complex<double> operator[](std::size_t i) const { return entries_[i]; }
        std::span<const std::complex<double>> entries() const { return entries_; }
        double norm() const;

    private:
        std::vector<std::complex<double>> entries_;
    };

    // Conjugated inner product sum(conj(a_i) * b_i)
    std::complex<double> inner(const WeightVector &a, const WeightVector &b);

    WeightVector steering_vector(const ArrayConfig &cfg, double theta_rad, double freq_hz);
    WeightVector jpta_response(const ArrayConfig &cfg, const PhaseTimeWeights &w, double freq_hz);

    // Correlation magnitude below this value is reported as the floor
    inline constexpr double kGainFloorCorrelation = 1e-4; // -80 dB relative to peak

    // peak_gain_db + 20*log10(|<steering(theta, f), response(w, f)>|), floored at peak - 80 dB
    double beam_gain_db(const ArrayConfig &cfg, const PhaseTimeWeights &w, double theta_rad, double freq_hz);

    // Gains on an angle x RB grid, evaluated at the RB center frequencies.
    // Storage is row-major: row = angle index, column = RB index.
    struct PatternMap
    {
        std::vector<double> angles_rad;
        std::size_t num_rbs = 0;
        std::vector<double> gains_db;

        double at(std::size_t angle_idx, std::size_t rb) const { return gains_db[angle_idx * num_rbs + rb]; }
        std::span<const double> row(std::size_t angle_idx) const;
        std::size_t argmax_angle(std::size_t rb) const; // Index of the best angle for one RB (first on ties)
        double max_over_angles(std::size_t rb) const;
    };

    PatternMap pattern_map(const ArrayConfig &cfg, const PhaseTimeWeights &w, std::span<const double> angles_rad,
                           const FrequencyGrid &grid);
}

#endif
