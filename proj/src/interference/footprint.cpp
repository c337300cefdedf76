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

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

namespace ltelab {

Footprint::Footprint(Direction direction, int num_subcarriers,
                     std::vector<std::uint32_t> flat_indices)
    : direction_(direction), num_subcarriers_(num_subcarriers), indices_(std::move(flat_indices))
{
    if (num_subcarriers_ <= 0)
        throw std::invalid_argument("footprint needs a positive subcarrier count");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= n_total())
        throw std::out_of_range("footprint RE lies outside the grid");
}

Footprint Footprint::empty(const ResourceGrid& grid)
{
    return Footprint(grid.direction(), grid.num_subcarriers(), {});
}

bool Footprint::contains(ReIndex re) const
{
    if (re.subcarrier < 0 || re.subcarrier >= num_subcarriers_ || re.symbol < 0 ||
        re.symbol >= kSymbolsPerFrame)
        return false;
    const auto flat = static_cast<std::uint32_t>(re.symbol * num_subcarriers_ + re.subcarrier);
    return std::binary_search(indices_.begin(), indices_.end(), flat);
}

std::vector<ReIndex> Footprint::res() const
{
    std::vector<ReIndex> out;
    out.reserve(indices_.size());
    for (auto flat : indices_)
        out.push_back({static_cast<int>(flat % num_subcarriers_),
                       static_cast<int>(flat / num_subcarriers_)});
    return out;
}

Footprint Footprint::shifted_symbols(int symbol_shift) const
{
    const int shift = ((symbol_shift % kSymbolsPerFrame) + kSymbolsPerFrame) % kSymbolsPerFrame;
    std::vector<std::uint32_t> out;
    out.reserve(indices_.size());
    for (auto flat : indices_) {
        const int k = static_cast<int>(flat % num_subcarriers_);
        const int s = (static_cast<int>(flat / num_subcarriers_) + shift) % kSymbolsPerFrame;
        out.push_back(static_cast<std::uint32_t>(s * num_subcarriers_ + k));
    }
    return Footprint(direction_, num_subcarriers_, std::move(out));
}

bool Footprint::matches(const ResourceGrid& grid) const
{
    return direction_ == grid.direction() && num_subcarriers_ == grid.num_subcarriers();
}

std::size_t Footprint::overlap(const Footprint& other) const
{
    std::vector<std::uint32_t> common;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(common));
    return common.size();
}

Footprint sync_window(const ResourceGrid& grid, const FootprintOptions& options)
{
    options.validate();
    const int n_sc = grid.num_subcarriers();
    const int central = grid.config().central_start();
    const std::size_t n_total = grid.size();
    constexpr int kHalfFrame = kSymbolsPerFrame / 2;
    constexpr int kSss = 5;
    constexpr int kPss = 6;

    std::size_t target = 4 * kCentralSubcarriers;
    if (options.sync_mode == SyncFootprintMode::PaperFraction) {
        target = static_cast<std::size_t>(std::llround(options.paper_fraction * n_total));
        if (target == 0)
            throw std::invalid_argument("paper_fraction is below one RE on this grid");
        if (target > static_cast<std::size_t>(kCentralSubcarriers) * kSymbolsPerFrame)
            throw std::invalid_argument("paper_fraction exceeds the central 72-subcarrier band");
    }

    // Column order: the PSS/SSS symbols of both half-frames, then one symbol
    // earlier and one later at a time, alternating between half-frames.
    std::vector<int> columns{kSss, kPss, kSss + kHalfFrame, kPss + kHalfFrame};
    std::vector<bool> used(kSymbolsPerFrame, false);
    for (int c : columns)
        used[c] = true;
    for (int w = 1; w < kHalfFrame; ++w) {
        for (int c : {kSss - w, kSss + kHalfFrame - w, kPss + w, kPss + kHalfFrame + w}) {
            const int s = ((c % kSymbolsPerFrame) + kSymbolsPerFrame) % kSymbolsPerFrame;
            if (!used[s]) {
                used[s] = true;
                columns.push_back(s);
            }
        }
    }

    std::vector<std::uint32_t> res;
    res.reserve(target);
    for (int s : columns) {
        for (int k = central; k < central + kCentralSubcarriers && res.size() < target; ++k)
            res.push_back(static_cast<std::uint32_t>(s * n_sc + k));
        if (res.size() == target)
            break;
    }
    return Footprint(grid.direction(), n_sc, std::move(res));
}

namespace {

bool symbol_active(int symbol, double duty_cycle)
{
    if (duty_cycle >= 1.0)
        return true;
    return std::floor((symbol + 1) * duty_cycle) > std::floor(symbol * duty_cycle);
}

}  // namespace

Footprint footprint_for_scenario(const InterferenceScenario& scenario, const ResourceGrid& grid,
                                 const FootprintOptions& options)
{
    scenario.validate();
    if (scenario.kind == ScenarioKind::None)
        throw std::invalid_argument("the no-interference scenario has no footprint");
    if (!scenario.targets(grid.direction()))
        throw std::invalid_argument("scenario '" + std::string(to_string(scenario.kind)) +
                                    "' does not target the " +
                                    std::string(to_string(grid.direction())) + " grid");

    const int n_sc = grid.num_subcarriers();
    auto select = [&](auto&& predicate) {
        std::vector<std::uint32_t> res;
        for (std::size_t flat = 0; flat < grid.size(); ++flat) {
            const int k = static_cast<int>(flat % n_sc);
            const int s = static_cast<int>(flat / n_sc);
            if (symbol_active(s, scenario.duty_cycle) && predicate(k, s, grid.labels()[flat]))
                res.push_back(static_cast<std::uint32_t>(flat));
        }
        return res;
    };

    std::vector<std::uint32_t> res;
    switch (scenario.kind) {
    case ScenarioKind::FullBand:
        res = select([](int, int, ChannelKind) { return true; });
        break;
    case ScenarioKind::HalfBand:
        res = select([n_sc](int k, int, ChannelKind) { return k < n_sc / 2; });
        break;
    case ScenarioKind::PucchTarget:
        res = select([](int, int, ChannelKind c) { return c == ChannelKind::Pucch; });
        break;
    case ScenarioKind::PuschTarget:
        res = select([](int, int, ChannelKind c) { return c == ChannelKind::Pusch; });
        break;
    case ScenarioKind::PssSssInterference:
        return sync_window(grid, options);
    case ScenarioKind::PssSssSpoof: {
        const auto burst = sync_window(grid, options).shifted_symbols(options.spoof_symbol_shift);
        for (auto flat : burst.indices())
            if (symbol_active(static_cast<int>(flat) / n_sc, scenario.duty_cycle))
                res.push_back(flat);
        break;
    }
    case ScenarioKind::None:
        break;
    }
    if (res.empty())
        throw std::invalid_argument("duty_cycle leaves the footprint without any RE");
    return Footprint(grid.direction(), n_sc, std::move(res));
}

}  // namespace ltelab
