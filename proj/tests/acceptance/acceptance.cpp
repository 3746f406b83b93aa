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

// Reproduction checks against the published results. Prints one PASS/FAIL line per criterion;
// pass a criterion number to run only that one. Exit status is nonzero if any selected check fails.

#include <jpta/jpta.hpp>

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace jpta;

namespace
{
    // Tolerances
    constexpr double kDelayToleranceS = 2.5e-9;     // one quantization step
    constexpr double kRippleDb = 3.0;               // in-band Type-1 gain stays within peak - 3 dB
    constexpr double kNearRingAgreement = 0.01;     // 1 % at the nearest ring
    constexpr double kCoverageRatioTarget = 2.0;    // 8^(1/3)
    constexpr double kCoverageRatioTolerance = 0.15;
    constexpr double kExponentTolerance = 0.05;     // relative, on 1/beta
    constexpr double kLargeGainRatio = 5.0;
    constexpr double kRainbowSpanFraction = 0.9;
    constexpr double kRainbowPeakFlatnessDb = 1.0;
    constexpr double kUnitNormTolerance = 1e-12;

    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    ArrayConfig reference_array() { return ArrayConfig::half_wavelength(16, 28e9, 28.0); }

    Scenario reference_scenario()
    {
        Scenario sc;
        sc.array = reference_array();
        sc.paa_codebook =
            paa_codebook(sc.array, 16, {from_boresight(deg_to_rad(-60.0)), from_boresight(deg_to_rad(60.0))});
        return sc;
    }

    // UE placements: 2 and 4 UEs at fixed angles, 8 and 16 spread evenly over [-55, 55] (slice centers)
    std::vector<double> placement_deg(std::size_t n)
    {
        if (n == 2)
            return {-30.0, 30.0};
        if (n == 4)
            return {-30.0, -10.0, 10.0, 30.0};
        std::vector<double> out(n);
        const double width = 110.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = -55.0 + (static_cast<double>(i) + 0.5) * width;
        return out;
    }

    Deployment deployment(std::size_t n, std::vector<double> distances)
    {
        Deployment dep;
        for (const double d : placement_deg(n))
            dep.ue_angles_rad.push_back(deg_to_rad(d));
        dep.ring_distances_m = std::move(distances);
        return dep;
    }

    Type1Target target_for(std::size_t n, const FrequencyGrid &grid)
    {
        std::vector<double> thetas;
        for (const double d : placement_deg(n))
            thetas.push_back(from_boresight(deg_to_rad(d)));
        return Type1Target::equal_split(thetas, grid.num_rbs);
    }

    std::vector<double> scan_angles(double step_deg)
    {
        std::vector<double> out;
        for (double a = -90.0; a <= 90.0 + 1e-9; a += step_deg)
            out.push_back(from_boresight(deg_to_rad(a)));
        return out;
    }

    Outcome max_delay()
    {
        const auto cfg = reference_array();
        const FrequencyGrid grid;
        const DelayConstraint dc;
        const std::pair<std::size_t, double> cases[] = {{2, 2.5e-9}, {4, 7.5e-9}, {8, 17.5e-9}, {16, 35e-9}};
        bool pass = true;
        std::string detail;
        for (const auto &[n, expected] : cases)
        {
            const double got = design_type1(cfg, target_for(n, grid), grid, dc).weights.max_delay();
            pass = pass && std::abs(got - expected) <= kDelayToleranceS + 1e-15;
            detail += fmt::format("{}{} UEs {:.1f} ns (published {:.1f})", detail.empty() ? "" : ", ", n, got * 1e9,
                                  expected * 1e9);
        }
        return {pass, detail};
    }

    Outcome type1_ripple()
    {
        const auto cfg = reference_array();
        const FrequencyGrid grid;
        const DelayConstraint dc;
        bool pass = true;
        std::string detail;
        for (const std::size_t n : {2, 4})
        {
            const auto target = target_for(n, grid);
            const auto w = design_type1(cfg, target, grid, dc).weights;
            double worst = 0.0;
            for (const auto &e : target.entries)
                for (std::size_t r = e.rbs.begin; r < e.rbs.end; ++r)
                    worst = std::max(worst, cfg.peak_gain_db - beam_gain_db(cfg, w, e.theta_rad, grid.rb_center_hz(r)));
            pass = pass && worst <= kRippleDb;
            detail += fmt::format("{}{} UEs worst ripple {:.3f} dB", detail.empty() ? "" : ", ", n, worst);
        }
        return {pass, detail + fmt::format(" (limit {:.1f} dB)", kRippleDb)};
    }

    bool at_cell_edge(const RateDecision &d) { return !d.outage && *d.mcs_index == 0 && d.num_rbs == kMinRbs; }

    Outcome regime_equalities()
    {
        const auto sc = reference_scenario();
        const std::size_t n = 4;

        // Nearest ring of the reference sweep
        const auto near = throughput_sweep(deployment(n, log_ring_grid(30.0, 1500.0, 40)), sc);
        double worst_near = 0.0;
        for (std::size_t u = 0; u < n; ++u)
        {
            const double p = near.paa.rings[0].ues[u].throughput_bps;
            const double j = near.jpta.rings[0].ues[u].throughput_bps;
            worst_near = std::max(worst_near, std::abs(j - p) / p);
        }

        // The cell-edge window at MCS 0 / 4 RBs is under 1 dB wide, so scan densely far enough out to
        // reach outage in both schemes
        const auto far = throughput_sweep(deployment(n, log_ring_grid(30.0, 3000.0, 600)), sc);
        bool edge_ok = true;
        std::string edge;
        for (std::size_t u = 0; u < n; ++u)
        {
            std::optional<std::size_t> last;
            for (std::size_t i = 0; i < far.paa.rings.size(); ++i)
                if (at_cell_edge(far.paa.rings[i].ues[u]) && at_cell_edge(far.jpta.rings[i].ues[u]))
                    last = i;
            if (!last)
            {
                edge_ok = false;
                edge += fmt::format(" UE{}: never both at MCS 0/4 RBs;", u);
                continue;
            }
            const double ratio =
                far.jpta.rings[*last].ues[u].throughput_bps / far.paa.rings[*last].ues[u].throughput_bps;
            edge_ok = edge_ok && ratio == static_cast<double>(n);
            edge += fmt::format(" UE{} {:.4g} at {:.0f} m;", u, ratio, far.paa.rings[*last].distance_m);
        }
        edge.pop_back();
        const bool pass = worst_near <= kNearRingAgreement && edge_ok;
        return {pass, fmt::format("nearest ring worst per-UE gap {:.3f}% (limit 1%); cell-edge JPTA:PAA{}",
                                  100 * worst_near, edge)};
    }

    // Noise-limited coverage with equal beam gains, isolating the k-fold per-RB SNR advantage
    double flat_coverage_ratio(std::size_t n_ue, double beta, double threshold)
    {
        LinkModel lm;
        lm.path_loss_exponent = beta;
        const FrequencyGrid grid;
        const auto mcs = McsTable::standard();
        const double gain = reference_array().peak_gain_db;
        const auto distances = log_ring_grid(10.0, 2e5, 3000);

        // Every UE sees the same link within a scheme (8 divides 264), so one UE per scheme gives the ring mean
        SchemeResult paa, jpta;
        paa.links.push_back({{}, std::vector<double>(grid.num_rbs, gain), 1.0 / static_cast<double>(n_ue)});
        jpta.links.push_back({{}, std::vector<double>(grid.num_rbs / n_ue, gain), 1.0});
        evaluate_rings(paa, distances, lm, mcs, grid.scs_hz);
        evaluate_rings(jpta, distances, lm, mcs, grid.scs_hz);
        const auto a = coverage_distance(paa, threshold), b = coverage_distance(jpta, threshold);
        if (!a.distance_m || !b.distance_m || a.censored || b.censored)
            return std::nan("");
        return *b.distance_m / *a.distance_m;
    }

    Outcome coverage_ratio()
    {
        const auto sc = reference_scenario();
        const double threshold = 1e6;
        const auto res = throughput_sweep(deployment(8, log_ring_grid(30.0, 1500.0, 40)), sc);
        const auto paa = coverage_distance(res.paa, threshold);
        const auto jpta = coverage_distance(res.jpta, threshold);
        bool pass = paa.distance_m && jpta.distance_m && !paa.censored && !jpta.censored;
        const double ratio = pass ? *jpta.distance_m / *paa.distance_m : std::nan("");
        pass = pass && std::abs(ratio - kCoverageRatioTarget) <= kCoverageRatioTolerance * kCoverageRatioTarget;
        std::string detail = fmt::format("8 UEs PAA {:.0f} m, JPTA {:.0f} m, ratio {:.3f} (target 2 +- 15%)",
                                         paa.distance_m.value_or(0), jpta.distance_m.value_or(0), ratio);

        for (const double beta : {2.0, 3.0, 4.0})
        {
            const double r = flat_coverage_ratio(8, beta, threshold);
            const double exponent = std::log(r) / std::log(8.0);
            const bool ok = std::isfinite(exponent) && std::abs(exponent * beta - 1.0) <= kExponentTolerance;
            pass = pass && ok;
            detail += fmt::format("; beta {:.0f}: exponent {:.4f} vs {:.4f}", beta, exponent, 1.0 / beta);
        }
        return {pass, detail};
    }

    Outcome large_gain_regime()
    {
        const auto sc = reference_scenario();
        const auto res = throughput_sweep(deployment(16, log_ring_grid(30.0, 1500.0, 40)), sc);
        const auto a = res.paa.mean_curve(), b = res.jpta.mean_curve();
        const auto d = res.paa.distances();

        std::optional<std::size_t> last;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0)
                last = i;
        if (!last)
            return {false, "PAA is in outage at every ring"};

        std::size_t drops = 0;
        double worst_drop = 1.0;
        std::string where;
        for (std::size_t i = 1; i <= *last; ++i)
        {
            const double prev = b[i - 1] / a[i - 1], cur = b[i] / a[i];
            if (cur < prev * (1 - 1e-12))
            {
                ++drops;
                worst_drop = std::min(worst_drop, cur / prev);
                if (where.size() < 60)
                    where += fmt::format(" {:.0f}m", d[i]);
            }
        }
        const double final_ratio = b[*last] / a[*last];
        const bool pass = drops == 0 && final_ratio > kLargeGainRatio;
        return {pass, fmt::format("ratio {:.2f}x at {:.0f} m (limit > 5x); {} decreases in ratio{}{}", final_ratio,
                                  d[*last], drops, drops ? fmt::format(" (worst x{:.3f}) at", worst_drop) : "",
                                  where)};
    }

    Outcome optimizer_certificate()
    {
        const auto cfg = reference_array();
        const FrequencyGrid grid;
        const DelayConstraint dc;
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> angle(-55.0, 55.0);
        std::size_t violations = 0, checked = 0;
        for (int trial = 0; trial < 20; ++trial)
        {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
            std::vector<std::size_t> cuts{0, grid.num_rbs};
            while (cuts.size() < n + 1)
            {
                const std::size_t c = std::uniform_int_distribution<std::size_t>(1, grid.num_rbs - 1)(rng);
                if (std::find(cuts.begin(), cuts.end(), c) == cuts.end())
                    cuts.push_back(c);
            }
            std::sort(cuts.begin(), cuts.end());
            Type1Target t;
            for (std::size_t i = 0; i < n; ++i)
                t.entries.push_back({from_boresight(deg_to_rad(angle(rng))), {cuts[i], cuts[i + 1]}});

            const auto w = design_type1(cfg, t, grid, dc).weights;

            // Independent scan: recompute |S_m(tau)| from the steering vectors directly
            const auto samples = type1_samples(t, grid);
            std::vector<WeightVector> b;
            for (std::size_t k = 0; k < samples.freqs_hz.size(); ++k)
                b.push_back(steering_vector(cfg, samples.thetas_rad[k], samples.freqs_hz[k]));
            for (std::size_t m = 0; m < cfg.num_elements; ++m)
            {
                auto s_abs = [&](double tau) {
                    std::complex<double> s{};
                    for (std::size_t k = 0; k < b.size(); ++k)
                        s += b[k][m] * std::polar(1.0, -2 * kPi * samples.freqs_hz[k] * tau);
                    return std::abs(s);
                };
                const double chosen = s_abs(w.delays()[m]);
                for (std::size_t g = 0; g < dc.grid_size(); ++g)
                {
                    ++checked;
                    if (s_abs(dc.grid_delay(g)) > chosen * (1 + 1e-9))
                        ++violations;
                }
            }
        }
        return {violations == 0, fmt::format("{} violations in {} antenna/delay checks over 20 targets", violations,
                                              checked)};
    }

    Outcome rainbow_properties()
    {
        const auto cfg = reference_array();
        const FrequencyGrid grid;
        const auto angles = scan_angles(0.25);
        bool pass = true;
        std::string detail;
        for (const double spread : {30.0, 60.0, 110.0})
        {
            const auto w = design_type2(cfg, {kPi / 2, deg_to_rad(spread)}, grid);
            const auto pm = pattern_map(cfg, w, angles, grid);
            bool rising = true, falling = true;
            double lo = 1e9, hi = -1e9;
            for (std::size_t r = 0; r < grid.num_rbs; ++r)
            {
                if (r > 0)
                {
                    rising = rising && pm.argmax_angle(r) >= pm.argmax_angle(r - 1);
                    falling = falling && pm.argmax_angle(r) <= pm.argmax_angle(r - 1);
                }
                lo = std::min(lo, pm.max_over_angles(r));
                hi = std::max(hi, pm.max_over_angles(r));
            }
            const double span = std::abs(pm.angles_rad[pm.argmax_angle(grid.num_rbs - 1)] -
                                         pm.angles_rad[pm.argmax_angle(0)]) /
                                deg_to_rad(spread);
            const bool ok = (rising || falling) && span >= kRainbowSpanFraction && hi - lo < kRainbowPeakFlatnessDb;
            pass = pass && ok;
            detail += fmt::format("{}{:.0f} deg: {}, span {:.1f}%, peak variation {:.3f} dB", detail.empty() ? "" : "; ",
                                  spread, rising || falling ? "monotone" : "NOT monotone", 100 * span, hi - lo);
        }
        return {pass, detail};
    }

    Outcome numerical_hygiene()
    {
        std::mt19937_64 rng(8);
        auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
        const int cases = 2000;
        std::size_t failures = 0;
        for (int i = 0; i < cases; ++i)
        {
            const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
            const auto cfg = ArrayConfig::half_wavelength(m, uni(1e9, 100e9), 28.0);
            const double f1 = uni(0.5, 1.5) * cfg.carrier_hz, f2 = uni(0.5, 1.5) * cfg.carrier_hz;

            std::vector<double> tau(m), phi(m);
            for (std::size_t k = 0; k < m; ++k)
            {
                tau[k] = uni(0, 200e-9);
                phi[k] = uni(-10, 10);
            }
            failures += std::abs(steering_vector(cfg, uni(0, kPi), f1).norm() - 1) > kUnitNormTolerance;
            failures += std::abs(jpta_response(cfg, PhaseTimeWeights(tau, phi), f1).norm() - 1) > kUnitNormTolerance;

            const PhaseTimeWeights flat(std::vector<double>(m, 0.0), phi);
            const auto p1 = jpta_response(cfg, flat, f1), p2 = jpta_response(cfg, flat, f2);
            failures += !std::equal(p1.entries().begin(), p1.entries().end(), p2.entries().begin());

            std::vector<double> snr(std::uniform_int_distribution<std::size_t>(1, 64)(rng));
            for (auto &s : snr)
                s = uni(-20, 40);
            const double beta = uni(0.1, 50);
            const double e = eesm_effective_snr_db(snr, beta);
            const auto [lo, hi] = std::minmax_element(snr.begin(), snr.end());
            failures += e < *lo - 1e-9 || e > *hi + 1e-9;
            const std::vector<double> same(snr.size(), snr.front());
            failures += std::abs(eesm_effective_snr_db(same, beta) - snr.front()) > 1e-9;
        }
        return {failures == 0, fmt::format("{} failures over {} random cases (5 checks each)", failures, cases)};
    }

    struct Criterion
    {
        int id;
        const char *name;
        std::function<Outcome()> run;
    };
}

int main(int argc, char **argv)
{
    const Criterion criteria[] = {
        {1, "maximum Type-1 delay for 2/4/8/16 UEs", max_delay},
        {2, "Type-1 in-band gain within 3 dB of peak", type1_ripple},
        {3, "JPTA/PAA equal near the BS and N_UE apart at the cell edge", regime_equalities},
        {4, "coverage ratio near N_UE^(1/beta)", coverage_ratio},
        {5, "16-UE gain ratio non-decreasing and above 5x", large_gain_regime},
        {6, "Type-1 per-antenna optimality certificate", optimizer_certificate},
        {7, "rainbow beam sweep, span and flat peak", rainbow_properties},
        {8, "unit norm, frequency-flat and EESM identities", numerical_hygiene},
    };

    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_pass = true;
    for (const auto &c : criteria)
    {
        if (only != 0 && c.id != only)
            continue;
        const auto o = c.run();
        all_pass = all_pass && o.pass;
        fmt::print("{} criterion {}: {} | {}\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail);
    }
    return all_pass ? 0 : 1;
}
