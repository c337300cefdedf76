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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltelab/grid.hpp"
#include "ltelab/interference.hpp"
#include "ltelab/linkmodel.hpp"

namespace ltelab {

std::string_view tool_version();

/// One row of the built-in test-case table.
struct CatalogEntry {
    int row = 0;
    ScenarioKind kind = ScenarioKind::None;
    std::string_view description;
    LinkScope scope = LinkScope::None;
    bool synchronous = false;
};

/// Rows 0..6 in order.
std::span<const CatalogEntry> scenario_catalog();

enum class SyncSource : std::uint8_t {
    /// Interferer knows the victim's frame timing exactly.
    Perfect,
    /// Interferer runs PSS/SSS acquisition over synthesized victim IQ.
    Acquire,
};

std::string_view to_string(SyncSource source);
SyncSource sync_source_from_string(std::string_view text);

struct OutputPaths {
    /// Empty paths are skipped.
    std::string csv;
    std::string json;
    std::string plotdata;

    bool operator==(const OutputPaths&) const = default;
};

struct RunConfig {
    CellConfig cell;
    LinkConfig link;
    FootprintOptions footprint;
    std::vector<InterferenceScenario> scenarios;
    std::vector<double> isr_re_sweep_db{0.0, 5.0};
    std::uint64_t seed = 1;
    SyncSource sync = SyncSource::Perfect;
    /// 0 uses the hardware concurrency.
    unsigned threads = 0;
    /// Off by default so repeated runs produce identical bytes.
    bool timestamps = false;
    OutputPaths outputs;

    /// Catalog rows 0..6 at the two default ISR points.
    static RunConfig defaults();
    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

/// 21 points from -10 to 10 dB.
std::vector<double> dense_isr_sweep();

/// Missing fields keep their defaults.
RunConfig run_config_from_json(std::string_view text);
std::string run_config_to_json(const RunConfig& config);

struct ExperimentRecord {
    ThroughputReport report;
    /// Absent for the no-interference scenario.
    std::optional<IsrMetrics> metrics;
    std::string tool_version;
    std::optional<std::string> timestamp;

    bool operator==(const ExperimentRecord&) const = default;
};

/// The SyncState synchronous scenarios use under `config`.
SyncState run_sync_state(const RunConfig& config);

/// Grid, footprint, interference map and link model for one point.
ExperimentRecord run_scenario(const RunConfig& config, const InterferenceScenario& scenario,
                              double isr_re_db);

/// Frame-level to per-RE ratio for each footprint in the run.
struct IsrRelationRow {
    ScenarioKind kind = ScenarioKind::None;
    double fraction = 0.0;
    double isr_f_minus_isr_re_db = 0.0;

    bool operator==(const IsrRelationRow&) const = default;
};

std::vector<IsrRelationRow> isr_relation_table(const RunConfig& config);

struct SweepResult {
    RunConfig config;
    std::vector<ExperimentRecord> records;
    std::vector<IsrRelationRow> isr_table;

    bool operator==(const SweepResult&) const = default;
};

/// Scenarios x ISR points, the no-interference row once. Points are
/// evaluated concurrently; records come back in scenario-major order.
SweepResult sweep(const RunConfig& config);

enum class ExportFormat : std::uint8_t { Csv, Json, Plotdata };

std::string_view to_string(ExportFormat format);
ExportFormat export_format_from_string(std::string_view text);

std::string records_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);
SweepResult sweep_from_json(std::string_view text);
/// One bar-chart series group per ISR point: DL and UL throughput per scenario.
std::string plotdata_to_json(const SweepResult& result);
/// Fixed-width text table of the sweep, for terminals.
std::string sweep_table(const SweepResult& result);

std::string render(const SweepResult& result, ExportFormat format);
void export_records(const SweepResult& result, ExportFormat format,
                    const std::filesystem::path& path);
/// Writes every non-empty path in config.outputs.
void export_all(const SweepResult& result);

}  // namespace ltelab
