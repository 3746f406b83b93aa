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

#include "jpta/codebook.hpp"
#include "jpta/csv.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jpta
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * kPi;

        // Relative margin a candidate delay must beat the incumbent by; keeps the smaller delay on ties
        constexpr double kTieMargin = 1e-12;

        std::complex<double> unit(double phase) { return std::polar(1.0, phase); }

        // exp(-j 2 pi f tau) with the turn count reduced before scaling
        std::complex<double> delay_rotation(double f, double tau)
        {
            const double turns = f * tau;
            return unit(-kTwoPi * (turns - std::floor(turns)));
        }
    }

    void Type1Target::validate(std::size_t num_rbs) const
    {
        if (entries.empty())
            throw std::invalid_argument("Type1Target: at least one entry is required");
        std::vector<int> owner(num_rbs, -1);
        for (std::size_t i = 0; i < entries.size(); ++i)
        {
            const auto &e = entries[i];
            if (!(e.theta_rad >= 0.0 && e.theta_rad <= kPi))
                throw std::invalid_argument("Type1Target: entry " + std::to_string(i) + " angle outside [0, pi]");
            if (e.rbs.begin >= e.rbs.end)
                throw std::invalid_argument("Type1Target: entry " + std::to_string(i) + " has an empty RB range");
            if (e.rbs.end > num_rbs)
                throw std::invalid_argument("Type1Target: entry " + std::to_string(i) + " RB range exceeds " +
                                            std::to_string(num_rbs) + " RBs");
            for (std::size_t r = e.rbs.begin; r < e.rbs.end; ++r)
            {
                if (owner[r] >= 0)
                    throw std::invalid_argument("Type1Target: RB " + std::to_string(r) + " assigned twice");
                owner[r] = static_cast<int>(i);
            }
        }
        for (std::size_t r = 0; r < num_rbs; ++r)
            if (owner[r] < 0)
                throw std::invalid_argument("Type1Target: RB " + std::to_string(r) + " is not covered");
    }

    std::vector<double> Type1Target::theta_per_rb(std::size_t num_rbs) const
    {
        validate(num_rbs);
        std::vector<double> theta(num_rbs);
        for (const auto &e : entries)
            for (std::size_t r = e.rbs.begin; r < e.rbs.end; ++r)
                theta[r] = e.theta_rad;
        return theta;
    }

    Type1Target Type1Target::equal_split(std::span<const double> thetas_rad, std::size_t num_rbs)
    {
        if (thetas_rad.empty())
            throw std::invalid_argument("Type1Target: at least one angle is required");
        if (thetas_rad.size() > num_rbs)
            throw std::invalid_argument("Type1Target: more targets than RBs");
        const std::size_t share = num_rbs / thetas_rad.size();
        Type1Target t;
        for (std::size_t i = 0; i < thetas_rad.size(); ++i)
        {
            const std::size_t end = (i + 1 == thetas_rad.size()) ? num_rbs : (i + 1) * share;
            t.entries.push_back({thetas_rad[i], {i * share, end}});
        }
        return t;
    }

    void RainbowSpec::validate() const
    {
        if (!(spread_rad >= 0.0))
            throw std::invalid_argument("RainbowSpec: spread must be >= 0");
        if (center_rad - spread_rad / 2.0 < -1e-12 || center_rad + spread_rad / 2.0 > kPi + 1e-12)
            throw std::invalid_argument("RainbowSpec: center +- spread/2 leaves [0, pi]");
    }

    void DelayConstraint::validate() const
    {
        if (!(step_s > 0.0))
            throw std::invalid_argument("DelayConstraint: step must be > 0");
        if (!(max_delay_s >= step_s))
            throw std::invalid_argument("DelayConstraint: max delay must be >= step");
    }

    std::size_t DelayConstraint::grid_size() const
    {
        if (!(step_s > 0.0) || !(max_delay_s >= 0.0))
            return 0;
        return static_cast<std::size_t>(std::floor(max_delay_s / step_s + 1e-9)) + 1;
    }

    Type1Samples type1_samples(const Type1Target &target, const FrequencyGrid &grid, const Type1Options &opt)
    {
        const auto theta_rb = target.theta_per_rb(grid.num_rbs);
        Type1Samples s;
        if (opt.per_subcarrier)
        {
            s.freqs_hz = grid.subcarriers_hz();
            s.thetas_rad.resize(s.freqs_hz.size());
            for (std::size_t k = 0; k < s.freqs_hz.size(); ++k)
                s.thetas_rad[k] = theta_rb[k / FrequencyGrid::kSubcarriersPerRb];
        }
        else
        {
            s.freqs_hz = grid.rb_centers_hz();
            s.thetas_rad = theta_rb;
        }
        return s;
    }

    double type1_objective(const ArrayConfig &cfg, const Type1Samples &samples, const PhaseTimeWeights &w)
    {
        double total = 0.0;
        for (std::size_t k = 0; k < samples.freqs_hz.size(); ++k)
        {
            const auto p = jpta_response(cfg, w, samples.freqs_hz[k]);
            const auto b = steering_vector(cfg, samples.thetas_rad[k], samples.freqs_hz[k]);
            for (std::size_t m = 0; m < p.size(); ++m)
                total += std::norm(p[m] - b[m]);
        }
        return total;
    }

    namespace
    {
        // S[m][g] = sum_k b_{k,m} exp(-j 2 pi f_k tau_g)
        std::vector<std::vector<std::complex<double>>> correlation_sums(const ArrayConfig &cfg,
                                                                        const Type1Samples &samples,
                                                                        const DelayConstraint &dc)
        {
            const std::size_t M = cfg.num_elements;
            const std::size_t G = dc.grid_size();
            std::vector<std::vector<std::complex<double>>> S(M, std::vector<std::complex<double>>(G));
            std::vector<std::complex<double>> rot(G);
            for (std::size_t k = 0; k < samples.freqs_hz.size(); ++k)
            {
                const double f = samples.freqs_hz[k];
                for (std::size_t g = 0; g < G; ++g)
                    rot[g] = delay_rotation(f, dc.grid_delay(g));
                const auto b = steering_vector(cfg, samples.thetas_rad[k], f);
                for (std::size_t m = 0; m < M; ++m)
                    for (std::size_t g = 0; g < G; ++g)
                        S[m][g] += b[m] * rot[g];
            }
            return S;
        }
    }

    std::vector<std::vector<double>> type1_correlation_table(const ArrayConfig &cfg, const Type1Samples &samples,
                                                             const DelayConstraint &dc)
    {
        const auto S = correlation_sums(cfg, samples, dc);
        std::vector<std::vector<double>> mag(S.size());
        for (std::size_t m = 0; m < S.size(); ++m)
        {
            mag[m].resize(S[m].size());
            for (std::size_t g = 0; g < S[m].size(); ++g)
                mag[m][g] = std::abs(S[m][g]);
        }
        return mag;
    }

    Type1Design design_type1(const ArrayConfig &cfg, const Type1Target &target, const FrequencyGrid &grid,
                             const DelayConstraint &dc, const Type1Options &opt)
    {
        cfg.validate();
        grid.validate();
        target.validate(grid.num_rbs);
        dc.validate();

        const auto samples = type1_samples(target, grid, opt);
        const auto S = correlation_sums(cfg, samples, dc);

        const std::size_t M = cfg.num_elements;
        std::vector<double> tau(M), phi(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            std::size_t best = 0;
            double best_mag = std::abs(S[m][0]);
            for (std::size_t g = 1; g < S[m].size(); ++g)
            {
                const double mag = std::abs(S[m][g]);
                if (mag > best_mag * (1.0 + kTieMargin))
                {
                    best = g;
                    best_mag = mag;
                }
            }
            tau[m] = dc.grid_delay(best);
            phi[m] = std::arg(S[m][best]);
        }

        Type1Design out{PhaseTimeWeights(std::move(tau), std::move(phi), dc.step_s), 0.0};
        out.objective = type1_objective(cfg, samples, out.weights);
        return out;
    }

    PhaseTimeWeights design_type2(const ArrayConfig &cfg, const RainbowSpec &spec, const FrequencyGrid &grid,
                                  RainbowReference ref)
    {
        cfg.validate();
        spec.validate();
        if (!(grid.bandwidth_hz > 0.0))
            throw std::invalid_argument("design_type2: bandwidth must be > 0");

        const std::size_t M = cfg.num_elements;
        const double slope = std::sin(spec.spread_rad / 2.0) / grid.bandwidth_hz;
        const double phase_step = kTwoPi * cfg.spacing_m * std::cos(spec.center_rad) / cfg.wavelength();

        std::vector<double> tau(M), phi(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            tau[m] = static_cast<double>(m) * slope;
            phi[m] = static_cast<double>(m) * phase_step;
            if (ref == RainbowReference::kCarrier)
            {
                const double turns = cfg.carrier_hz * tau[m];
                phi[m] -= kTwoPi * (turns - std::floor(turns));
            }
        }
        return PhaseTimeWeights(std::move(tau), std::move(phi));
    }

    PhaseTimeWeights quantize_delays(const PhaseTimeWeights &w, const DelayConstraint &dc)
    {
        dc.validate();
        const double top = static_cast<double>(dc.grid_size() - 1);
        std::vector<double> tau(w.size());
        for (std::size_t m = 0; m < w.size(); ++m)
        {
            // Nearest grid index, exact halves go down
            double n = std::ceil(w.delays()[m] / dc.step_s - 0.5);
            n = std::clamp(n, 0.0, top);
            tau[m] = n * dc.step_s;
        }
        const auto phases = w.phases();
        return PhaseTimeWeights(std::move(tau), std::vector<double>(phases.begin(), phases.end()), dc.step_s);
    }

    std::vector<double> paa_beam_angles(std::size_t num_beams, AngleInterval sector)
    {
        if (num_beams < 1)
            throw std::invalid_argument("paa_codebook: num_beams must be >= 1");
        const double width = (sector.hi_rad - sector.lo_rad) / static_cast<double>(num_beams);
        std::vector<double> angles(num_beams);
        for (std::size_t i = 0; i < num_beams; ++i)
            angles[i] = sector.lo_rad + (static_cast<double>(i) + 0.5) * width;
        return angles;
    }

    std::vector<PhaseTimeWeights> paa_codebook(const ArrayConfig &cfg, std::size_t num_beams, AngleInterval sector)
    {
        cfg.validate();
        std::vector<PhaseTimeWeights> book;
        for (const double theta : paa_beam_angles(num_beams, sector))
        {
            const double phase_step = kTwoPi * cfg.spacing_m * std::cos(theta) / cfg.wavelength();
            std::vector<double> phi(cfg.num_elements);
            for (std::size_t m = 0; m < cfg.num_elements; ++m)
                phi[m] = static_cast<double>(m) * phase_step;
            book.emplace_back(std::vector<double>(cfg.num_elements, 0.0), std::move(phi));
        }
        return book;
    }

    void write_codebook_csv(std::ostream &os, const PhaseTimeWeights &w)
    {
        os << "antenna,delay_ns,phase_deg\n";
        for (std::size_t m = 0; m < w.size(); ++m)
            os << (m + 1) << ',' << format_number(w.delays()[m] * 1e9) << ','
               << format_number(rad_to_deg(w.phases()[m])) << '\n';
    }

    PhaseTimeWeights read_codebook_csv(std::istream &is)
    {
        const auto rows = read_csv(is, {"antenna", "delay_ns", "phase_deg"});
        if (rows.empty())
            throw FormatError("codebook has no antenna rows");
        std::vector<double> tau(rows.size()), phi(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            const auto &r = rows[i];
            const long antenna = parse_integer(r.fields[0], r.line, "antenna");
            if (antenna != static_cast<long>(i + 1))
                throw FormatError("line " + std::to_string(r.line) + ": expected antenna " + std::to_string(i + 1));
            const double delay_ns = parse_double(r.fields[1], r.line, "delay_ns");
            if (!(delay_ns >= 0.0))
                throw FormatError("line " + std::to_string(r.line) + ": delay_ns must be >= 0");
            tau[i] = delay_ns * 1e-9;
            phi[i] = deg_to_rad(parse_double(r.fields[2], r.line, "phase_deg"));
        }
        return PhaseTimeWeights(std::move(tau), std::move(phi));
    }
}
