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

#ifndef JPTA_TESTS_HELPERS_HPP
#define JPTA_TESTS_HELPERS_HPP

#include <jpta/jpta.hpp>

#include <random>

namespace jpta::test
{
    inline ArrayConfig default_array() { return ArrayConfig::half_wavelength(16, 28e9, 28.0); }

    // Fixed seed so failures reproduce
    inline std::mt19937_64 &rng()
    {
        static std::mt19937_64 gen(20260101);
        return gen;
    }

    inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

    inline std::size_t uniform_index(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
    }

    inline PhaseTimeWeights random_weights(std::size_t m, double max_delay_s)
    {
        std::vector<double> tau(m), phi(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            tau[i] = uniform(0.0, max_delay_s);
            phi[i] = uniform(-10.0, 10.0);
        }
        return {tau, phi};
    }

    inline std::vector<double> boresight_degrees_to_theta(std::initializer_list<double> degs)
    {
        std::vector<double> out;
        for (double d : degs)
            out.push_back(from_boresight(deg_to_rad(d)));
        return out;
    }
}

#endif
