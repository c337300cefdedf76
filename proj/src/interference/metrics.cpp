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

#include "ltelab/interference.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ltelab {

namespace {

void check_fraction(double fraction)
{
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("footprint fraction must lie in (0, 1]");
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double isr_f(double isr_re_db, double fraction)
{
    check_fraction(fraction);
    return isr_re_db + 10.0 * std::log10(fraction);
}

double isr_re_for_target(double isr_f_db, double fraction)
{
    check_fraction(fraction);
    return isr_f_db - 10.0 * std::log10(fraction);
}

IsrMetrics make_isr_metrics(double isr_re_db, double fraction)
{
    return {isr_re_db, isr_f(isr_re_db, fraction), fraction};
}

double InterferenceMap::total_energy() const
{
    return std::accumulate(power.begin(), power.end(), 0.0);
}

InterferenceMap no_interference(const ResourceGrid& grid)
{
    return {grid.direction(), grid.num_subcarriers(), std::vector<double>(grid.size(), 0.0)};
}

InterferenceMap apply_interference(const ResourceGrid& grid, const Footprint& footprint,
                                   double isr_re_db)
{
    if (!footprint.matches(grid))
        throw std::invalid_argument("footprint was not derived from this grid");
    if (!std::isfinite(isr_re_db))
        throw std::invalid_argument("isr_re_db must be finite");
    auto map = no_interference(grid);
    const double ratio = db_to_linear(isr_re_db);
    const auto signal = grid.power();
    for (auto flat : footprint.indices())
        map.power[flat] = ratio * signal[flat];
    return map;
}

}  // namespace ltelab
