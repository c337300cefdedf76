/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The ltelab Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ltelab/detector.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ltelab {

void PmCounterOptions::validate() const
{
    if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd))
        throw std::invalid_argument("noise_sd must be finite and >= 0");
    if (!std::isfinite(pucch_threshold_db))
        throw std::invalid_argument("pucch_threshold_db must be finite");
    if (!(failure_slope_db > 0.0) || !std::isfinite(failure_slope_db))
        throw std::invalid_argument("failure_slope_db must be positive");
}

FeatureVector synth_pm_counters(const ThroughputReport& report, std::uint64_t noise_seed,
                                const PmCounterOptions& options)
{
    options.validate();
    const double failure =
        1.0 / (1.0 + std::exp((report.pucch_sinr_db - options.pucch_threshold_db) /
                              options.failure_slope_db));
    FeatureVector x{failure, report.ul_degradation};
    if (options.noise_sd > 0.0) {
        std::mt19937_64 rng(noise_seed);
        std::normal_distribution<double> noise(0.0, options.noise_sd);
        for (auto& v : x)
            v += noise(rng);
    }
    return x;
}

}  // namespace ltelab
