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

#include "ltelab/harness.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ltelab {

std::string_view tool_version() { return LTELAB_VERSION; }

std::span<const CatalogEntry> scenario_catalog()
{
    static constexpr std::array<CatalogEntry, 7> rows{{
        {0, ScenarioKind::None, "No interference", LinkScope::None, false},
        {1, ScenarioKind::FullBand, "Full-band interference", LinkScope::Both, false},
        {2, ScenarioKind::HalfBand, "Half-band interference", LinkScope::Both, false},
        {3, ScenarioKind::PucchTarget, "PUCCH interference", LinkScope::Uplink, false},
        {4, ScenarioKind::PuschTarget, "PUSCH interference", LinkScope::Uplink, false},
        {5, ScenarioKind::PssSssSpoof, "PSS/SSS spoofing", LinkScope::Downlink, false},
        {6, ScenarioKind::PssSssInterference, "PSS/SSS interference", LinkScope::Downlink, true},
    }};
    return rows;
}

std::string_view to_string(SyncSource source)
{
    return source == SyncSource::Perfect ? "perfect" : "acquire";
}

SyncSource sync_source_from_string(std::string_view text)
{
    if (text == "perfect")
        return SyncSource::Perfect;
    if (text == "acquire")
        return SyncSource::Acquire;
    throw std::invalid_argument("unknown sync source '" + std::string(text) +
                                "' (expected perfect or acquire)");
}

std::string_view to_string(ExportFormat format)
{
    switch (format) {
    case ExportFormat::Csv:
        return "csv";
    case ExportFormat::Json:
        return "json";
    case ExportFormat::Plotdata:
        return "plotdata";
    }
    return "?";
}

ExportFormat export_format_from_string(std::string_view text)
{
    for (auto f : {ExportFormat::Csv, ExportFormat::Json, ExportFormat::Plotdata})
        if (to_string(f) == text)
            return f;
    throw std::invalid_argument("unknown export format '" + std::string(text) + "'");
}

RunConfig RunConfig::defaults()
{
    RunConfig c;
    for (const auto& row : scenario_catalog())
        c.scenarios.push_back(InterferenceScenario::make(row.kind));
    return c;
}

void RunConfig::validate() const
{
    cell.validate();
    link.validate();
    footprint.validate();
    if (scenarios.empty())
        throw std::invalid_argument("run configuration lists no scenarios");
    for (const auto& s : scenarios)
        s.validate();
    if (isr_re_sweep_db.empty())
        throw std::invalid_argument("ISR sweep has no points");
    for (double p : isr_re_sweep_db)
        if (!std::isfinite(p))
            throw std::invalid_argument("ISR sweep points must be finite");
}

std::vector<double> dense_isr_sweep()
{
    std::vector<double> points;
    for (int i = -10; i <= 10; ++i)
        points.push_back(static_cast<double>(i));
    return points;
}

}  // namespace ltelab
