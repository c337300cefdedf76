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

#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ltelab::detail {

namespace {

template <typename T>
void read(const ordered_json& j, const char* key, T& field)
{
    if (auto it = j.find(key); it != j.end())
        field = it->get<T>();
}

double read_number(const ordered_json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nan("");
    return v.get<double>();
}

}  // namespace

std::string format_double(double value)
{
    char buf[40];
    for (int precision = 6; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value)
            break;
    }
    return buf;
}

ordered_json to_json(const CellConfig& cell)
{
    return {{"bandwidth_rb", cell.bandwidth_rb},
            {"cell_id", cell.cell_id},
            {"cfi", cell.cfi},
            {"pucch_fraction", cell.pucch_fraction}};
}

CellConfig cell_from_json(const ordered_json& j, CellConfig base)
{
    read(j, "bandwidth_rb", base.bandwidth_rb);
    read(j, "cell_id", base.cell_id);
    read(j, "cfi", base.cfi);
    read(j, "pucch_fraction", base.pucch_fraction);
    return base;
}

ordered_json to_json(const LinkConfig& link)
{
    return {{"noise_floor_db", link.noise_floor_db},
            {"data_sinr_threshold_db", link.data_sinr_threshold_db},
            {"pcfich_sinr_threshold_db", link.pcfich_sinr_threshold_db},
            {"pdcch_sinr_threshold_db", link.pdcch_sinr_threshold_db},
            {"pbch_sinr_threshold_db", link.pbch_sinr_threshold_db},
            {"pucch_sinr_threshold_db", link.pucch_sinr_threshold_db},
            {"crs_penalty_gain", link.crs_penalty_gain},
            {"sync_penalty_gain", link.sync_penalty_gain},
            {"sync_loss_floor_db", link.sync_loss_floor_db},
            {"spoof_capture_margin_db", link.spoof_capture_margin_db},
            {"spoof_cell_has_sib1", link.spoof_cell_has_sib1},
            {"nominal_dl_mbps", link.nominal_dl_mbps},
            {"nominal_ul_mbps", link.nominal_ul_mbps}};
}

LinkConfig link_from_json(const ordered_json& j, LinkConfig base)
{
    read(j, "noise_floor_db", base.noise_floor_db);
    read(j, "data_sinr_threshold_db", base.data_sinr_threshold_db);
    if (auto it = j.find("control_sinr_threshold_db"); it != j.end()) {
        const double t = it->get<double>();
        base.pcfich_sinr_threshold_db = base.pdcch_sinr_threshold_db =
            base.pbch_sinr_threshold_db = base.pucch_sinr_threshold_db = t;
    }
    read(j, "pcfich_sinr_threshold_db", base.pcfich_sinr_threshold_db);
    read(j, "pdcch_sinr_threshold_db", base.pdcch_sinr_threshold_db);
    read(j, "pbch_sinr_threshold_db", base.pbch_sinr_threshold_db);
    read(j, "pucch_sinr_threshold_db", base.pucch_sinr_threshold_db);
    read(j, "crs_penalty_gain", base.crs_penalty_gain);
    read(j, "sync_penalty_gain", base.sync_penalty_gain);
    read(j, "sync_loss_floor_db", base.sync_loss_floor_db);
    read(j, "spoof_capture_margin_db", base.spoof_capture_margin_db);
    read(j, "spoof_cell_has_sib1", base.spoof_cell_has_sib1);
    read(j, "nominal_dl_mbps", base.nominal_dl_mbps);
    read(j, "nominal_ul_mbps", base.nominal_ul_mbps);
    return base;
}

ordered_json to_json(const FootprintOptions& options)
{
    return {{"sync_mode", to_string(options.sync_mode)},
            {"paper_fraction", options.paper_fraction},
            {"spoof_symbol_shift", options.spoof_symbol_shift}};
}

FootprintOptions footprint_options_from_json(const ordered_json& j, FootprintOptions base)
{
    if (auto it = j.find("sync_mode"); it != j.end())
        base.sync_mode = sync_footprint_mode_from_string(it->get<std::string>());
    read(j, "paper_fraction", base.paper_fraction);
    read(j, "spoof_symbol_shift", base.spoof_symbol_shift);
    return base;
}

ordered_json to_json(const InterferenceScenario& scenario)
{
    return {{"kind", to_string(scenario.kind)},
            {"row", catalog_row(scenario.kind)},
            {"scope", to_string(scenario.scope)},
            {"synchronous", scenario.synchronous},
            {"isr_re_db", scenario.isr_re_db},
            {"timing_offset_samples", scenario.timing_offset_samples},
            {"duty_cycle", scenario.duty_cycle}};
}

InterferenceScenario scenario_from_json(const ordered_json& j)
{
    const auto& kind = j.at("kind");
    const ScenarioKind k = kind.is_number_integer()
                               ? scenario_kind_from_row(kind.get<int>())
                               : scenario_kind_from_string(kind.get<std::string>());
    auto s = InterferenceScenario::make(k, j.value("isr_re_db", 0.0));
    if (auto it = j.find("scope"); it != j.end())
        s.scope = link_scope_from_string(it->get<std::string>());
    read(j, "synchronous", s.synchronous);
    read(j, "timing_offset_samples", s.timing_offset_samples);
    read(j, "duty_cycle", s.duty_cycle);
    return s;
}

ordered_json to_json(const IsrMetrics& metrics)
{
    return {{"isr_re_db", metrics.isr_re_db},
            {"isr_f_db", metrics.isr_f_db},
            {"fraction", metrics.fraction}};
}

IsrMetrics isr_metrics_from_json(const ordered_json& j)
{
    return {j.at("isr_re_db").get<double>(), j.at("isr_f_db").get<double>(),
            j.at("fraction").get<double>()};
}

ordered_json to_json(const ThroughputReport& r)
{
    ordered_json j;
    j["scenario"] = to_json(r.scenario);
    j["isr_f_db"] = r.isr_f_db ? ordered_json(*r.isr_f_db) : ordered_json(nullptr);
    j["dl_mbps"] = r.dl_mbps;
    j["ul_mbps"] = r.ul_mbps;
    j["dl_degradation"] = r.dl_degradation;
    j["ul_degradation"] = r.ul_degradation;
    j["degradation_fraction"] = r.degradation_fraction;
    j["gates_tripped"] = {{"pcfich", r.gates_tripped.pcfich},
                          {"pdcch", r.gates_tripped.pdcch},
                          {"pucch", r.gates_tripped.pucch}};
    j["sync_lost"] = r.sync_lost;
    j["sync_quality_db"] = r.sync_quality_db;
    j["pucch_sinr_db"] = r.pucch_sinr_db;
    return j;
}

ThroughputReport report_from_json(const ordered_json& j)
{
    ThroughputReport r;
    r.scenario = scenario_from_json(j.at("scenario"));
    if (const auto& f = j.at("isr_f_db"); !f.is_null())
        r.isr_f_db = f.get<double>();
    r.dl_mbps = j.at("dl_mbps").get<double>();
    r.ul_mbps = j.at("ul_mbps").get<double>();
    r.dl_degradation = j.at("dl_degradation").get<double>();
    r.ul_degradation = j.at("ul_degradation").get<double>();
    r.degradation_fraction = j.at("degradation_fraction").get<double>();
    const auto& g = j.at("gates_tripped");
    r.gates_tripped = {g.at("pcfich").get<int>(), g.at("pdcch").get<int>(),
                       g.at("pucch").get<int>()};
    r.sync_lost = j.at("sync_lost").get<bool>();
    r.sync_quality_db = read_number(j, "sync_quality_db");
    r.pucch_sinr_db = read_number(j, "pucch_sinr_db");
    return r;
}

}  // namespace ltelab::detail
