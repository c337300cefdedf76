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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ltelab {

namespace {

struct KindInfo {
    ScenarioKind kind;
    std::string_view name;
    LinkScope scope;
    bool synchronous;
};

constexpr std::array<KindInfo, 7> kKinds{{
    {ScenarioKind::None, "none", LinkScope::None, false},
    {ScenarioKind::FullBand, "full_band", LinkScope::Both, false},
    {ScenarioKind::HalfBand, "half_band", LinkScope::Both, false},
    {ScenarioKind::PucchTarget, "pucch", LinkScope::Uplink, false},
    {ScenarioKind::PuschTarget, "pusch", LinkScope::Uplink, false},
    {ScenarioKind::PssSssSpoof, "pss_sss_spoof", LinkScope::Downlink, false},
    {ScenarioKind::PssSssInterference, "pss_sss_interference", LinkScope::Downlink, true},
}};

const KindInfo& info(ScenarioKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

}  // namespace

std::string_view to_string(ScenarioKind kind) { return info(kind).name; }

std::string_view to_string(LinkScope scope)
{
    switch (scope) {
    case LinkScope::None:
        return "-";
    case LinkScope::Downlink:
        return "DL";
    case LinkScope::Uplink:
        return "UL";
    case LinkScope::Both:
        return "UL/DL";
    }
    return "?";
}

ScenarioKind scenario_kind_from_string(std::string_view text)
{
    for (const auto& k : kKinds)
        if (k.name == text)
            return k.kind;
    throw std::invalid_argument("unknown scenario '" + std::string(text) + "'");
}

LinkScope link_scope_from_string(std::string_view text)
{
    for (auto scope : {LinkScope::None, LinkScope::Downlink, LinkScope::Uplink, LinkScope::Both})
        if (to_string(scope) == text)
            return scope;
    throw std::invalid_argument("unknown link scope '" + std::string(text) + "'");
}

ScenarioKind scenario_kind_from_row(int row)
{
    if (row < 0 || row >= static_cast<int>(kKinds.size()))
        throw std::invalid_argument("scenario number must be 0..6 (got " + std::to_string(row) +
                                    ")");
    return kKinds[static_cast<std::size_t>(row)].kind;
}

int catalog_row(ScenarioKind kind) { return static_cast<int>(kind); }

InterferenceScenario InterferenceScenario::make(ScenarioKind kind, double isr_re_db)
{
    const auto& k = info(kind);
    InterferenceScenario s;
    s.kind = kind;
    s.scope = k.scope;
    s.synchronous = k.synchronous;
    s.isr_re_db = isr_re_db;
    return s;
}

void InterferenceScenario::validate() const
{
    const auto& k = info(kind);
    const std::string name(k.name);
    if (synchronous != k.synchronous)
        throw std::invalid_argument("scenario '" + name + "' must be " +
                                    (k.synchronous ? "synchronous" : "asynchronous"));
    const bool wideband = kind == ScenarioKind::FullBand || kind == ScenarioKind::HalfBand;
    if (wideband ? scope == LinkScope::None : scope != k.scope)
        throw std::invalid_argument("scenario '" + name + "' cannot target link scope " +
                                    std::string(to_string(scope)));
    if (!std::isfinite(isr_re_db))
        throw std::invalid_argument("isr_re_db must be finite");
    if (!(duty_cycle > 0.0 && duty_cycle <= 1.0))
        throw std::invalid_argument("duty_cycle must lie in (0, 1]");
    if (synchronous && duty_cycle != 1.0)
        throw std::invalid_argument("duty_cycle applies to asynchronous scenarios only");
    if (!synchronous && timing_offset_samples != 0)
        throw std::invalid_argument("timing_offset_samples applies to synchronous scenarios only");
}

bool InterferenceScenario::targets(Direction direction) const
{
    switch (scope) {
    case LinkScope::None:
        return false;
    case LinkScope::Both:
        return true;
    case LinkScope::Downlink:
        return direction == Direction::Downlink;
    case LinkScope::Uplink:
        return direction == Direction::Uplink;
    }
    return false;
}

std::string_view to_string(SyncFootprintMode mode)
{
    return mode == SyncFootprintMode::GridExact ? "grid_exact" : "paper_fraction";
}

SyncFootprintMode sync_footprint_mode_from_string(std::string_view text)
{
    if (text == "grid_exact")
        return SyncFootprintMode::GridExact;
    if (text == "paper_fraction")
        return SyncFootprintMode::PaperFraction;
    throw std::invalid_argument("unknown sync footprint mode '" + std::string(text) + "'");
}

void FootprintOptions::validate() const
{
    if (!(paper_fraction > 0.0 && paper_fraction <= 1.0))
        throw std::invalid_argument("paper_fraction must lie in (0, 1]");
    if (spoof_symbol_shift % (kSymbolsPerFrame / 2) == 0)
        throw std::invalid_argument(
            "spoof_symbol_shift must not align the spoofed burst with the victim's PSS/SSS");
}

}  // namespace ltelab
