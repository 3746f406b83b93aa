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

#include <benchmark/benchmark.h>

#include <jpta/jpta.hpp>

using namespace jpta;

namespace
{
    ArrayConfig array() { return ArrayConfig::half_wavelength(16, 28e9, 28.0); }

    Type1Target spread_target(std::size_t n, const FrequencyGrid &grid)
    {
        std::vector<double> thetas(n);
        for (std::size_t i = 0; i < n; ++i)
            thetas[i] = from_boresight(deg_to_rad(-55.0 + (static_cast<double>(i) + 0.5) * 110.0 / static_cast<double>(n)));
        return Type1Target::equal_split(thetas, grid.num_rbs);
    }
}

static void DesignType1(benchmark::State &state)
{
    const auto cfg = array();
    const FrequencyGrid grid;
    const auto target = spread_target(static_cast<std::size_t>(state.range(0)), grid);
    Type1Options opt;
    opt.per_subcarrier = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(design_type1(cfg, target, grid, DelayConstraint{}, opt));
}
BENCHMARK(DesignType1)->Args({4, 0})->Args({16, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

static void PatternMapType2(benchmark::State &state)
{
    const auto cfg = array();
    const FrequencyGrid grid;
    const auto w = design_type2(cfg, {kPi / 2, deg_to_rad(110.0)}, grid);
    std::vector<double> angles;
    for (double a = -90.0; a <= 90.0; a += 0.25)
        angles.push_back(from_boresight(deg_to_rad(a)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pattern_map(cfg, w, angles, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(angles.size() * grid.num_rbs));
}
BENCHMARK(PatternMapType2)->Unit(benchmark::kMillisecond);

static void SelectRate(benchmark::State &state)
{
    const LinkModel lm;
    const auto mcs = McsTable::standard();
    std::vector<double> gains(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < gains.size(); ++i)
        gains[i] = 25.0 + 3.0 * std::sin(0.1 * static_cast<double>(i));
    for (auto _ : state)
        benchmark::DoNotOptimize(select_rate(lm, 400.0, gains, mcs, 120e3, 1.0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SelectRate)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void ThroughputSweep(benchmark::State &state)
{
    Scenario sc;
    sc.array = array();
    sc.paa_codebook = paa_codebook(sc.array, 16, {from_boresight(deg_to_rad(-60.0)), from_boresight(deg_to_rad(60.0))});
    Deployment dep;
    for (std::int64_t i = 0; i < state.range(0); ++i)
        dep.ue_angles_rad.push_back(deg_to_rad(-55.0 + (static_cast<double>(i) + 0.5) * 110.0 / static_cast<double>(state.range(0))));
    dep.ring_distances_m = log_ring_grid(30.0, 1500.0, 40);
    for (auto _ : state)
        benchmark::DoNotOptimize(throughput_sweep(dep, sc));
}
BENCHMARK(ThroughputSweep)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
