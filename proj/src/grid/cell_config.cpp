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
#include <stdexcept>
#include <string>

namespace ltelab {

namespace {

constexpr std::array<int, 6> kValidBandwidths{6, 15, 25, 50, 75, 100};

}  // namespace

void CellConfig::validate() const
{
    if (std::find(kValidBandwidths.begin(), kValidBandwidths.end(), bandwidth_rb) ==
        kValidBandwidths.end())
        throw std::invalid_argument("bandwidth_rb must be one of 6, 15, 25, 50, 75, 100 (got " +
                                    std::to_string(bandwidth_rb) + ")");
    if (cell_id < 0 || cell_id > 503)
        throw std::invalid_argument("cell_id must be in [0, 503] (got " +
                                    std::to_string(cell_id) + ")");
    if (cfi < 1 || cfi > 3)
        throw std::invalid_argument("cfi must be in [1, 3] (got " + std::to_string(cfi) + ")");
    if (!std::isfinite(pucch_fraction) || pucch_fraction <= 0.0 || pucch_fraction >= 1.0)
        throw std::invalid_argument("pucch_fraction must lie strictly between 0 and 1");
    const long per_edge = std::lround(num_subcarriers() * pucch_fraction / 2.0);
    if (per_edge < 1 || 2 * per_edge >= num_subcarriers())
        throw std::invalid_argument("pucch_fraction leaves an empty PUCCH or PUSCH region");
}

std::string_view to_string(Direction direction)
{
    return direction == Direction::Downlink ? "DL" : "UL";
}

Direction direction_from_string(std::string_view text)
{
    if (text == "DL")
        return Direction::Downlink;
    if (text == "UL")
        return Direction::Uplink;
    throw std::invalid_argument("unknown direction '" + std::string(text) + "'");
}

std::string_view to_string(ChannelKind kind)
{
    switch (kind) {
    case ChannelKind::Pss:
        return "PSS";
    case ChannelKind::Sss:
        return "SSS";
    case ChannelKind::Pbch:
        return "PBCH";
    case ChannelKind::Pcfich:
        return "PCFICH";
    case ChannelKind::Pdcch:
        return "PDCCH";
    case ChannelKind::Crs:
        return "CRS";
    case ChannelKind::Pdsch:
        return "PDSCH";
    case ChannelKind::Pucch:
        return "PUCCH";
    case ChannelKind::Pusch:
        return "PUSCH";
    }
    return "?";
}

ChannelKind channel_from_string(std::string_view text)
{
    for (auto kind : kDownlinkChannels)
        if (to_string(kind) == text)
            return kind;
    for (auto kind : kUplinkChannels)
        if (to_string(kind) == text)
            return kind;
    throw std::invalid_argument("unknown channel '" + std::string(text) + "'");
}

Direction direction_of(ChannelKind kind)
{
    return (kind == ChannelKind::Pucch || kind == ChannelKind::Pusch) ? Direction::Uplink
                                                                      : Direction::Downlink;
}

}  // namespace ltelab
