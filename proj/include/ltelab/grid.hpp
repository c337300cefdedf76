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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ltelab {

inline constexpr int kSubcarriersPerRb = 12;
inline constexpr int kSymbolsPerSlot = 7;  // normal cyclic prefix
inline constexpr int kSlotsPerSubframe = 2;
inline constexpr int kSymbolsPerSubframe = kSymbolsPerSlot * kSlotsPerSubframe;
inline constexpr int kSubframesPerFrame = 10;
inline constexpr int kSlotsPerFrame = kSlotsPerSubframe * kSubframesPerFrame;
inline constexpr int kSymbolsPerFrame = kSymbolsPerSubframe * kSubframesPerFrame;
inline constexpr int kCentralSubcarriers = 72;
inline constexpr int kSyncSequenceLength = 62;

enum class Direction : std::uint8_t { Downlink, Uplink };

std::string_view to_string(Direction direction);
Direction direction_from_string(std::string_view text);

enum class ChannelKind : std::uint8_t { Pss, Sss, Pbch, Pcfich, Pdcch, Crs, Pdsch, Pucch, Pusch };

inline constexpr std::array<ChannelKind, 7> kDownlinkChannels{
    ChannelKind::Pss,   ChannelKind::Sss, ChannelKind::Pbch, ChannelKind::Pcfich,
    ChannelKind::Pdcch, ChannelKind::Crs, ChannelKind::Pdsch};
inline constexpr std::array<ChannelKind, 2> kUplinkChannels{ChannelKind::Pucch,
                                                            ChannelKind::Pusch};

std::string_view to_string(ChannelKind kind);
ChannelKind channel_from_string(std::string_view text);
Direction direction_of(ChannelKind kind);

/// FDD, normal cyclic prefix, single antenna port (port 0).
struct CellConfig {
    int bandwidth_rb = 50;
    int cell_id = 0;
    int cfi = 2;
    /// Share of uplink subcarriers given to PUCCH, split evenly between the band edges.
    double pucch_fraction = 0.25;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    int num_subcarriers() const { return bandwidth_rb * kSubcarriersPerRb; }
    int n_id_1() const { return cell_id / 3; }
    int n_id_2() const { return cell_id % 3; }
    /// First subcarrier of the central 72.
    int central_start() const { return num_subcarriers() / 2 - kCentralSubcarriers / 2; }

    bool operator==(const CellConfig&) const = default;
};

struct ReIndex {
    int subcarrier = 0;
    int symbol = 0;  // 0..139 within the frame
    bool operator==(const ReIndex&) const = default;
};

inline int slot_of(int symbol) { return symbol / kSymbolsPerSlot; }
inline int subframe_of(int symbol) { return symbol / kSymbolsPerSubframe; }
inline int symbol_in_slot(int symbol) { return symbol % kSymbolsPerSlot; }

/// One frame of resource elements with a channel label and a linear signal
/// power on each. Immutable once built; safe to share between threads.
class ResourceGrid {
public:
    ResourceGrid(CellConfig config, Direction direction, std::vector<ChannelKind> labels,
                 std::vector<double> power);

    const CellConfig& config() const { return config_; }
    Direction direction() const { return direction_; }
    int num_subcarriers() const { return num_subcarriers_; }
    int num_symbols() const { return kSymbolsPerFrame; }
    std::size_t size() const { return labels_.size(); }

    std::size_t flat_index(ReIndex re) const;
    ReIndex re_at(std::size_t flat) const;
    bool contains(ReIndex re) const;

    ChannelKind label(ReIndex re) const { return labels_[flat_index(re)]; }
    double power(ReIndex re) const { return power_[flat_index(re)]; }

    /// Row-major by symbol: flat = symbol * num_subcarriers + subcarrier.
    std::span<const ChannelKind> labels() const { return labels_; }
    std::span<const double> power() const { return power_; }

    std::size_t count(ChannelKind kind) const;
    double total_energy() const;

    bool operator==(const ResourceGrid&) const = default;

private:
    CellConfig config_;
    Direction direction_;
    int num_subcarriers_;
    std::vector<ChannelKind> labels_;
    std::vector<double> power_;
};

ResourceGrid build_dl_grid(const CellConfig& config);
ResourceGrid build_ul_grid(const CellConfig& config);

/// Fraction of the frame's REs carrying `kind`. Throws if `kind` belongs to
/// the other link direction.
double channel_occupancy(const ResourceGrid& grid, ChannelKind kind);

/// Subcarriers of the PCFICH REs on symbol 0 of a subframe (16 entries).
std::vector<int> pcfich_subcarriers(const CellConfig& config);

/// True when port-0 CRS occupies (subcarrier, symbol).
bool is_crs(const CellConfig& config, int subcarrier, int symbol);

// Serialized form: config echo plus a run-length-encoded label map in flat
// order. Field order is fixed so equal grids serialize to equal bytes.
std::string grid_to_json(const ResourceGrid& grid);
std::vector<ChannelKind> labels_from_json(std::string_view json_text);

}  // namespace ltelab
