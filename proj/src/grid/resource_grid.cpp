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

#include "ltelab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ltelab {

ResourceGrid::ResourceGrid(CellConfig config, Direction direction,
                           std::vector<ChannelKind> labels, std::vector<double> power)
    : config_(config),
      direction_(direction),
      num_subcarriers_(config.num_subcarriers()),
      labels_(std::move(labels)),
      power_(std::move(power))
{
    const auto expected = static_cast<std::size_t>(num_subcarriers_) * kSymbolsPerFrame;
    if (labels_.size() != expected || power_.size() != expected)
        throw std::invalid_argument("resource grid storage does not match the cell bandwidth");
}

std::size_t ResourceGrid::flat_index(ReIndex re) const
{
    if (!contains(re))
        throw std::out_of_range("RE (" + std::to_string(re.subcarrier) + ", " +
                                std::to_string(re.symbol) + ") is outside the grid");
    return static_cast<std::size_t>(re.symbol) * num_subcarriers_ + re.subcarrier;
}

ReIndex ResourceGrid::re_at(std::size_t flat) const
{
    if (flat >= size())
        throw std::out_of_range("flat RE index outside the grid");
    return {static_cast<int>(flat % num_subcarriers_), static_cast<int>(flat / num_subcarriers_)};
}

bool ResourceGrid::contains(ReIndex re) const
{
    return re.subcarrier >= 0 && re.subcarrier < num_subcarriers_ && re.symbol >= 0 &&
           re.symbol < kSymbolsPerFrame;
}

std::size_t ResourceGrid::count(ChannelKind kind) const
{
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), kind));
}

double ResourceGrid::total_energy() const
{
    return std::accumulate(power_.begin(), power_.end(), 0.0);
}

bool is_crs(const CellConfig& config, int subcarrier, int symbol)
{
    const int l = symbol_in_slot(symbol);
    if (l != 0 && l != 4)
        return false;
    const int v_shift = config.cell_id % 6;
    const int offset = (v_shift + (l == 4 ? 3 : 0)) % 6;
    return subcarrier % 6 == offset;
}

std::vector<int> pcfich_subcarriers(const CellConfig& config)
{
    // Four REGs of four non-CRS REs on symbol 0, a quarter band apart and
    // rotated by the cell identity.
    const int n_sc = config.num_subcarriers();
    const int rotation = config.cell_id % 12;
    std::vector<int> out;
    out.reserve(16);
    for (int group = 0; group < 4; ++group) {
        int k = (rotation + group * n_sc / 4) % n_sc;
        int taken = 0;
        while (taken < 4) {
            if (!is_crs(config, k, 0)) {
                out.push_back(k);
                ++taken;
            }
            k = (k + 1) % n_sc;
        }
    }
    return out;
}

ResourceGrid build_dl_grid(const CellConfig& config)
{
    config.validate();
    const int n_sc = config.num_subcarriers();
    const int central = config.central_start();
    const int sync_lo = central + (kCentralSubcarriers - kSyncSequenceLength) / 2;
    const int sync_hi = sync_lo + kSyncSequenceLength;

    std::vector<bool> pcfich_mask(n_sc, false);
    for (int k : pcfich_subcarriers(config))
        pcfich_mask[k] = true;

    std::vector<ChannelKind> labels(static_cast<std::size_t>(n_sc) * kSymbolsPerFrame,
                                    ChannelKind::Pdsch);
    for (int s = 0; s < kSymbolsPerFrame; ++s) {
        const int slot = slot_of(s);
        const int l = symbol_in_slot(s);
        const int l_subframe = s % kSymbolsPerSubframe;
        const bool sync_slot = slot == 0 || slot == 10;
        for (int k = 0; k < n_sc; ++k) {
            ChannelKind& label = labels[static_cast<std::size_t>(s) * n_sc + k];
            const bool in_central = k >= central && k < central + kCentralSubcarriers;
            const bool in_sync = k >= sync_lo && k < sync_hi;
            if (is_crs(config, k, s))
                label = ChannelKind::Crs;
            else if (sync_slot && l == 6 && in_sync)
                label = ChannelKind::Pss;
            else if (sync_slot && l == 5 && in_sync)
                label = ChannelKind::Sss;
            else if (slot == 1 && l < 4 && in_central)
                label = ChannelKind::Pbch;
            else if (l_subframe == 0 && pcfich_mask[k])
                label = ChannelKind::Pcfich;
            else if (l_subframe < config.cfi)
                label = ChannelKind::Pdcch;
        }
    }
    std::vector<double> power(labels.size(), 1.0);
    return ResourceGrid(config, Direction::Downlink, std::move(labels), std::move(power));
}

ResourceGrid build_ul_grid(const CellConfig& config)
{
    config.validate();
    const int n_sc = config.num_subcarriers();
    const int per_edge = static_cast<int>(std::lround(n_sc * config.pucch_fraction / 2.0));
    std::vector<ChannelKind> labels(static_cast<std::size_t>(n_sc) * kSymbolsPerFrame);
    for (int s = 0; s < kSymbolsPerFrame; ++s)
        for (int k = 0; k < n_sc; ++k)
            labels[static_cast<std::size_t>(s) * n_sc + k] =
                (k < per_edge || k >= n_sc - per_edge) ? ChannelKind::Pucch : ChannelKind::Pusch;
    std::vector<double> power(labels.size(), 1.0);
    return ResourceGrid(config, Direction::Uplink, std::move(labels), std::move(power));
}

double channel_occupancy(const ResourceGrid& grid, ChannelKind kind)
{
    if (direction_of(kind) != grid.direction())
        throw std::invalid_argument(std::string(to_string(kind)) + " is not carried on the " +
                                    std::string(to_string(grid.direction())) + " grid");
    return static_cast<double>(grid.count(kind)) / static_cast<double>(grid.size());
}

}  // namespace ltelab
