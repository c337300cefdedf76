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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltelab/grid.hpp"
#include "ltelab/interference.hpp"
#include "ltelab/sync.hpp"

namespace ltelab {

/// Threshold-gate link abstraction. All powers are relative to a unit
/// signal RE; thresholds are in dB.
struct LinkConfig {
    double noise_floor_db = -20.0;
    double data_sinr_threshold_db = 3.0;
    double pcfich_sinr_threshold_db = 0.0;
    double pdcch_sinr_threshold_db = 0.0;
    double pbch_sinr_threshold_db = 0.0;
    double pucch_sinr_threshold_db = 0.0;
    /// Scales the channel-estimation error caused by interference on CRS.
    double crs_penalty_gain = 1.0;
    /// Scales the throughput penalty from interference on PSS/SSS.
    double sync_penalty_gain = 0.1;
    /// Mean PSS/SSS SINR below which the UE loses synchronization.
    double sync_loss_floor_db = -10.5;
    /// Spoof-to-legit PSS power ratio at which cell search locks onto the spoofer.
    double spoof_capture_margin_db = 3.0;
    /// Whether the spoofed cell broadcasts a usable SIB1 (normally not).
    bool spoof_cell_has_sib1 = false;
    double nominal_dl_mbps = 12.0;
    double nominal_ul_mbps = 8.0;

    void validate() const;
    double noise_linear() const;

    bool operator==(const LinkConfig&) const = default;
};

/// SINR(re) = signal / (noise + interference), linear.
std::vector<double> per_re_sinr(const ResourceGrid& grid, const InterferenceMap& interference,
                                const LinkConfig& config);

/// Mean linear SINR of each control channel within one subframe. DL
/// subframes fill pcfich/pdcch, UL subframes fill pucch.
struct ControlMeasurement {
    std::optional<double> pcfich_sinr;
    std::optional<double> pdcch_sinr;
    std::optional<double> pucch_sinr;
};

std::vector<ControlMeasurement> measure_control(const ResourceGrid& grid,
                                                std::span<const double> sinr);

/// control_ok per subframe: every measured channel meets its threshold.
std::vector<bool> control_gate(std::span<const ControlMeasurement> measurements,
                               const LinkConfig& config);

struct SubframeOutcome {
    int subframe_index = 0;
    bool control_ok = true;
    double decodable_fraction = 1.0;
    /// Mean PSS/SSS SINR (linear) in subframes 0 and 5 of the downlink.
    std::optional<double> sync_quality;

    bool operator==(const SubframeOutcome&) const = default;
};

struct SyncTracking {
    bool sync_lost = false;
    /// Mean linear SINR over all PSS/SSS REs of the frame.
    double sync_quality = 0.0;
};

/// Downlink only; throws std::invalid_argument for an uplink grid.
SyncTracking sync_tracking(const ResourceGrid& grid, const InterferenceMap& interference,
                           const LinkConfig& config);

/// Continuous penalty in (0, 1] from the interference seen on PSS/SSS.
double sync_penalty(double sync_quality, const LinkConfig& config);

struct GateCounts {
    int pcfich = 0;
    int pdcch = 0;
    int pucch = 0;

    bool operator==(const GateCounts&) const = default;
};

/// Throughput of one link direction.
struct LinkEstimate {
    Direction direction = Direction::Downlink;
    double nominal_mbps = 0.0;
    double achieved_mbps = 0.0;
    std::vector<SubframeOutcome> subframes;
    GateCounts gates;
    bool sync_lost = false;
    double sync_quality = 0.0;      // downlink
    double sync_penalty = 1.0;      // downlink
    double pucch_sinr_db = 0.0;     // uplink, frame mean
};

LinkEstimate estimate_link(const ResourceGrid& grid, const InterferenceMap& interference,
                           const LinkConfig& config);

struct ThroughputReport {
    InterferenceScenario scenario;
    /// Empty for the no-interference scenario.
    std::optional<double> isr_f_db;
    double dl_mbps = 0.0;
    double ul_mbps = 0.0;
    double dl_degradation = 0.0;
    double ul_degradation = 0.0;
    /// 1 - (dl + ul) / (nominal dl + nominal ul)
    double degradation_fraction = 0.0;
    GateCounts gates_tripped;
    bool sync_lost = false;
    double sync_quality_db = 0.0;
    double pucch_sinr_db = 0.0;

    bool operator==(const ThroughputReport&) const = default;
};

ThroughputReport estimate_throughput(const ResourceGrid& dl_grid, const InterferenceMap& dl_map,
                                     const ResourceGrid& ul_grid, const InterferenceMap& ul_map,
                                     const LinkConfig& config);

enum class CellSearchOutcome { AttachLegit, AttachFake, NoAttach };

std::string_view to_string(CellSearchOutcome outcome);

/// Initial cell selection in the presence of an optional PSS/SSS spoofer.
/// `interference`, when given, gates attachment on PBCH decodability.
CellSearchOutcome cell_search_outcome(const ResourceGrid& legit_grid,
                                      const std::optional<InterferenceScenario>& spoof,
                                      const LinkConfig& config,
                                      const InterferenceMap* interference = nullptr);

/// Grid -> footprint -> interference map -> link model for one scenario.
struct ScenarioEvaluation {
    ThroughputReport report;
    /// Targeted share of the frame on the scenario's primary link, 0 for none.
    double fraction = 0.0;
};

/// Synchronous scenarios are aligned through `sync` (perfect acquisition
/// when null) plus the scenario's own timing offset.
ScenarioEvaluation evaluate_scenario(const CellConfig& cell, const LinkConfig& link,
                                     const InterferenceScenario& scenario,
                                     const FootprintOptions& options = {},
                                     const SyncState* sync = nullptr,
                                     std::int64_t victim_frame_start = 0);

// Serialization (JSON object / CSV row in a fixed column order).
std::string report_to_json(const ThroughputReport& report);
ThroughputReport report_from_json(std::string_view text);
std::string report_csv_header();
std::string report_csv_row(const ThroughputReport& report);

}  // namespace ltelab
