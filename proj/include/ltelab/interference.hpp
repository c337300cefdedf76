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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltelab/grid.hpp"

namespace ltelab {

/// Interference test cases, numbered as rows 0..6 of the scenario catalog.
enum class ScenarioKind : std::uint8_t {
    None = 0,
    FullBand = 1,
    HalfBand = 2,
    PucchTarget = 3,
    PuschTarget = 4,
    PssSssSpoof = 5,
    PssSssInterference = 6,
};

/// Which link(s) a scenario hits. Full-band and half-band jam both.
enum class LinkScope : std::uint8_t { None, Downlink, Uplink, Both };

std::string_view to_string(ScenarioKind kind);
std::string_view to_string(LinkScope scope);
ScenarioKind scenario_kind_from_string(std::string_view text);
LinkScope link_scope_from_string(std::string_view text);
ScenarioKind scenario_kind_from_row(int row);
int catalog_row(ScenarioKind kind);

struct InterferenceScenario {
    ScenarioKind kind = ScenarioKind::None;
    LinkScope scope = LinkScope::None;
    bool synchronous = false;
    double isr_re_db = 0.0;
    /// Extra delay, in samples, applied after frame alignment (synchronous only).
    std::int64_t timing_offset_samples = 0;
    /// Fraction of OFDM symbols on which an asynchronous interferer transmits.
    double duty_cycle = 1.0;

    /// Canonical direction and synchronism for `kind`.
    static InterferenceScenario make(ScenarioKind kind, double isr_re_db = 0.0);

    /// Checks that kind, scope and synchronism agree with the catalog and
    /// that the numeric fields are usable.
    void validate() const;

    bool targets(Direction direction) const;

    bool operator==(const InterferenceScenario&) const = default;
};

enum class SyncFootprintMode : std::uint8_t {
    /// Central 72 subcarriers on the PSS and SSS symbols only (288 REs).
    GridExact,
    /// Same window widened in time until it covers a configured fraction.
    PaperFraction,
};

std::string_view to_string(SyncFootprintMode mode);
SyncFootprintMode sync_footprint_mode_from_string(std::string_view text);

struct FootprintOptions {
    SyncFootprintMode sync_mode = SyncFootprintMode::PaperFraction;
    double paper_fraction = 0.0123;
    /// Symbol offset of the spoofer's burst relative to the victim's own
    /// PSS/SSS symbols. Must not be a multiple of 70 (that would align it).
    int spoof_symbol_shift = 35;

    void validate() const;
    bool operator==(const FootprintOptions&) const = default;
};

/// Set of targeted REs within one frame of a grid.
class Footprint {
public:
    Footprint(Direction direction, int num_subcarriers, std::vector<std::uint32_t> flat_indices);

    static Footprint empty(const ResourceGrid& grid);

    Direction direction() const { return direction_; }
    int num_subcarriers() const { return num_subcarriers_; }
    std::size_t n_target() const { return indices_.size(); }
    std::size_t n_total() const
    {
        return static_cast<std::size_t>(num_subcarriers_) * kSymbolsPerFrame;
    }
    double fraction() const
    {
        return static_cast<double>(n_target()) / static_cast<double>(n_total());
    }
    bool is_empty() const { return indices_.empty(); }

    /// Sorted, unique, symbol-major flat indices.
    std::span<const std::uint32_t> indices() const { return indices_; }
    bool contains(ReIndex re) const;
    std::vector<ReIndex> res() const;

    /// Cyclic shift in time by whole OFDM symbols.
    Footprint shifted_symbols(int symbol_shift) const;

    /// True when the footprint was laid out over `grid` (same link and size).
    bool matches(const ResourceGrid& grid) const;

    std::size_t overlap(const Footprint& other) const;

    bool operator==(const Footprint&) const = default;

private:
    Direction direction_;
    int num_subcarriers_;
    std::vector<std::uint32_t> indices_;
};

/// REs a scenario targets on `grid`. Throws for the no-interference case and
/// when the scenario does not hit the grid's link direction.
Footprint footprint_for_scenario(const InterferenceScenario& scenario, const ResourceGrid& grid,
                                 const FootprintOptions& options = {});

/// Central-band window around the victim's PSS/SSS symbols.
Footprint sync_window(const ResourceGrid& grid, const FootprintOptions& options);

double db_to_linear(double db);
double linear_to_db(double linear);

/// Frame-level ratio in dB: isr_re_db + 10 log10(fraction).
double isr_f(double isr_re_db, double fraction);

/// Inverse of isr_f: per-RE ratio needed to reach a frame-level target.
double isr_re_for_target(double isr_f_db, double fraction);

struct IsrMetrics {
    double isr_re_db = 0.0;
    double isr_f_db = 0.0;
    double fraction = 0.0;

    bool operator==(const IsrMetrics&) const = default;
};

IsrMetrics make_isr_metrics(double isr_re_db, double fraction);

/// Per-RE interference power over one frame, same layout as the grid.
struct InterferenceMap {
    Direction direction = Direction::Downlink;
    int num_subcarriers = 0;
    std::vector<double> power;

    double total_energy() const;
};

InterferenceMap no_interference(const ResourceGrid& grid);

/// Interference power = 10^(isr_re_db/10) x signal power on targeted REs,
/// zero elsewhere.
InterferenceMap apply_interference(const ResourceGrid& grid, const Footprint& footprint,
                                   double isr_re_db);

}  // namespace ltelab
