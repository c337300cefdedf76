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

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "../common/json_io.hpp"

namespace ltelab {

using detail::ordered_json;

namespace {

ordered_json record_to_json(const ExperimentRecord& r)
{
    ordered_json j;
    j["report"] = detail::to_json(r.report);
    j["isr_metrics"] = r.metrics ? detail::to_json(*r.metrics) : ordered_json(nullptr);
    j["tool_version"] = r.tool_version;
    if (r.timestamp)
        j["timestamp"] = *r.timestamp;
    return j;
}

ExperimentRecord record_from_json(const ordered_json& j)
{
    ExperimentRecord r;
    r.report = detail::report_from_json(j.at("report"));
    if (const auto& m = j.at("isr_metrics"); !m.is_null())
        r.metrics = detail::isr_metrics_from_json(m);
    r.tool_version = j.at("tool_version").get<std::string>();
    if (auto it = j.find("timestamp"); it != j.end())
        r.timestamp = it->get<std::string>();
    return r;
}

ordered_json provenance(const SweepResult& result)
{
    ordered_json j;
    j["tool"] = "ltelab";
    j["tool_version"] = tool_version();
    j["config"] = ordered_json::parse(run_config_to_json(result.config));
    return j;
}

}  // namespace

std::string records_to_csv(const SweepResult& result)
{
    std::string out = report_csv_header() + "\n";
    for (const auto& r : result.records)
        out += report_csv_row(r.report) + "\n";
    return out;
}

std::string sweep_to_json(const SweepResult& result)
{
    auto doc = provenance(result);
    ordered_json table = ordered_json::array();
    for (const auto& row : result.isr_table)
        table.push_back({{"scenario", to_string(row.kind)},
                         {"row", catalog_row(row.kind)},
                         {"fraction", row.fraction},
                         {"isr_f_minus_isr_re_db", row.isr_f_minus_isr_re_db}});
    doc["isr_relation"] = std::move(table);
    ordered_json records = ordered_json::array();
    for (const auto& r : result.records)
        records.push_back(record_to_json(r));
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

SweepResult sweep_from_json(std::string_view text)
{
    const auto doc = ordered_json::parse(text);
    SweepResult result;
    result.config = run_config_from_json(doc.at("config").dump());
    for (const auto& row : doc.at("isr_relation"))
        result.isr_table.push_back({scenario_kind_from_string(row.at("scenario").get<std::string>()),
                                    row.at("fraction").get<double>(),
                                    row.at("isr_f_minus_isr_re_db").get<double>()});
    for (const auto& r : doc.at("records"))
        result.records.push_back(record_from_json(r));
    return result;
}

std::string plotdata_to_json(const SweepResult& result)
{
    auto doc = provenance(result);
    doc.erase("config");
    ordered_json figures = ordered_json::array();
    for (double p : result.config.isr_re_sweep_db) {
        ordered_json names = ordered_json::array();
        ordered_json rows = ordered_json::array();
        ordered_json dl = ordered_json::array();
        ordered_json ul = ordered_json::array();
        for (const auto& r : result.records) {
            const auto& s = r.report.scenario;
            if (s.kind != ScenarioKind::None && s.isr_re_db != p)
                continue;
            names.push_back(to_string(s.kind));
            rows.push_back(catalog_row(s.kind));
            dl.push_back(r.report.dl_mbps);
            ul.push_back(r.report.ul_mbps);
        }
        figures.push_back({{"isr_re_db", p},
                           {"scenarios", std::move(names)},
                           {"rows", std::move(rows)},
                           {"series", {{"dl_mbps", std::move(dl)}, {"ul_mbps", std::move(ul)}}}});
    }
    doc["figures"] = std::move(figures);
    return doc.dump(2) + "\n";
}

std::string sweep_table(const SweepResult& result)
{
    std::string out;
    char line[200];
    std::snprintf(line, sizeof line, "%-3s %-22s %-6s %8s %9s %9s %8s %8s %8s %s\n", "row",
                  "scenario", "link", "isr_re", "fraction", "isr_f", "dl_mbps", "ul_mbps", "degr",
                  "sync_lost");
    out += line;
    for (const auto& r : result.records) {
        const auto& s = r.report.scenario;
        char f[16] = "-", isrf[16] = "-";
        if (r.metrics) {
            std::snprintf(f, sizeof f, "%.4f", r.metrics->fraction);
            std::snprintf(isrf, sizeof isrf, "%.2f", r.metrics->isr_f_db);
        }
        std::snprintf(line, sizeof line, "%-3d %-22s %-6s %8.2f %9s %9s %8.3f %8.3f %8.4f %s\n",
                      catalog_row(s.kind), std::string(to_string(s.kind)).c_str(),
                      std::string(to_string(s.scope)).c_str(), s.isr_re_db, f, isrf,
                      r.report.dl_mbps, r.report.ul_mbps, r.report.degradation_fraction,
                      r.report.sync_lost ? "yes" : "no");
        out += line;
    }
    out += "\nISR_F - ISR_RE per footprint\n";
    for (const auto& row : result.isr_table) {
        std::snprintf(line, sizeof line, "%-3d %-22s fraction %.4f  %+.2f dB\n",
                      catalog_row(row.kind), std::string(to_string(row.kind)).c_str(),
                      row.fraction, row.isr_f_minus_isr_re_db);
        out += line;
    }
    return out;
}

std::string render(const SweepResult& result, ExportFormat format)
{
    switch (format) {
    case ExportFormat::Csv:
        return records_to_csv(result);
    case ExportFormat::Json:
        return sweep_to_json(result);
    case ExportFormat::Plotdata:
        return plotdata_to_json(result);
    }
    throw std::invalid_argument("unknown export format");
}

void export_records(const SweepResult& result, ExportFormat format,
                    const std::filesystem::path& path)
{
    const auto text = render(result, format);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    os << text;
    if (!os)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

void export_all(const SweepResult& result)
{
    const auto& o = result.config.outputs;
    if (!o.csv.empty())
        export_records(result, ExportFormat::Csv, o.csv);
    if (!o.json.empty())
        export_records(result, ExportFormat::Json, o.json);
    if (!o.plotdata.empty())
        export_records(result, ExportFormat::Plotdata, o.plotdata);
}

}  // namespace ltelab
