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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <stdexcept>
#include <thread>

#include "../common/json_io.hpp"
#include "ltelab/ofdm.hpp"
#include "ltelab/sync.hpp"

namespace ltelab {

using detail::ordered_json;

namespace {

std::string utc_now()
{
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ExperimentRecord run_point(const RunConfig& config, InterferenceScenario scenario,
                           double isr_re_db, const SyncState& sync)
{
    scenario.isr_re_db = isr_re_db;
    const auto ev = evaluate_scenario(config.cell, config.link, scenario, config.footprint, &sync);
    ExperimentRecord rec;
    rec.report = ev.report;
    if (ev.fraction > 0.0)
        rec.metrics = make_isr_metrics(isr_re_db, ev.fraction);
    rec.tool_version = std::string(tool_version());
    if (config.timestamps)
        rec.timestamp = utc_now();
    return rec;
}

}  // namespace

RunConfig run_config_from_json(std::string_view text)
{
    const auto doc = ordered_json::parse(text);
    if (!doc.is_object())
        throw std::invalid_argument("run configuration must be a JSON object");
    auto c = RunConfig::defaults();
    if (auto it = doc.find("cell"); it != doc.end())
        c.cell = detail::cell_from_json(*it, c.cell);
    if (auto it = doc.find("link"); it != doc.end())
        c.link = detail::link_from_json(*it, c.link);
    if (auto it = doc.find("footprint"); it != doc.end())
        c.footprint = detail::footprint_options_from_json(*it, c.footprint);
    if (auto it = doc.find("scenarios"); it != doc.end()) {
        c.scenarios.clear();
        for (const auto& s : *it)
            c.scenarios.push_back(s.is_object() ? detail::scenario_from_json(s)
                                  : s.is_number_integer()
                                      ? InterferenceScenario::make(scenario_kind_from_row(s.get<int>()))
                                      : InterferenceScenario::make(
                                            scenario_kind_from_string(s.get<std::string>())));
    }
    if (auto it = doc.find("isr_re_sweep_db"); it != doc.end()) {
        if (it->is_string()) {
            if (it->get<std::string>() != "dense")
                throw std::invalid_argument("isr_re_sweep_db must be a list or \"dense\"");
            c.isr_re_sweep_db = dense_isr_sweep();
        } else {
            c.isr_re_sweep_db = it->get<std::vector<double>>();
        }
    }
    c.seed = doc.value("seed", c.seed);
    if (auto it = doc.find("sync"); it != doc.end())
        c.sync = sync_source_from_string(it->get<std::string>());
    c.threads = doc.value("threads", c.threads);
    c.timestamps = doc.value("timestamps", c.timestamps);
    if (auto it = doc.find("outputs"); it != doc.end()) {
        c.outputs.csv = it->value("csv", c.outputs.csv);
        c.outputs.json = it->value("json", c.outputs.json);
        c.outputs.plotdata = it->value("plotdata", c.outputs.plotdata);
    }
    c.validate();
    return c;
}

std::string run_config_to_json(const RunConfig& c)
{
    ordered_json doc;
    doc["cell"] = detail::to_json(c.cell);
    doc["link"] = detail::to_json(c.link);
    doc["footprint"] = detail::to_json(c.footprint);
    ordered_json scenarios = ordered_json::array();
    for (const auto& s : c.scenarios)
        scenarios.push_back(detail::to_json(s));
    doc["scenarios"] = std::move(scenarios);
    doc["isr_re_sweep_db"] = c.isr_re_sweep_db;
    doc["seed"] = c.seed;
    doc["sync"] = to_string(c.sync);
    doc["threads"] = c.threads;
    doc["timestamps"] = c.timestamps;
    doc["outputs"] = {{"csv", c.outputs.csv},
                      {"json", c.outputs.json},
                      {"plotdata", c.outputs.plotdata}};
    return doc.dump(2);
}

SyncState run_sync_state(const RunConfig& config)
{
    if (config.sync == SyncSource::Perfect)
        return SyncState::perfect(config.cell);
    const auto numerology = numerology_for(config.cell.bandwidth_rb);
    const auto iq = synthesize_iq(modulate_grid(build_dl_grid(config.cell)), 2, numerology);
    return acquire_sync(iq, config.cell.bandwidth_rb, numerology);
}

ExperimentRecord run_scenario(const RunConfig& config, const InterferenceScenario& scenario,
                              double isr_re_db)
{
    config.cell.validate();
    config.link.validate();
    config.footprint.validate();
    const auto sync = scenario.synchronous ? run_sync_state(config)
                                           : SyncState::perfect(config.cell);
    return run_point(config, scenario, isr_re_db, sync);
}

std::vector<IsrRelationRow> isr_relation_table(const RunConfig& config)
{
    const auto dl = build_dl_grid(config.cell);
    const auto ul = build_ul_grid(config.cell);
    std::vector<IsrRelationRow> rows;
    for (const auto& entry : scenario_catalog()) {
        const auto used = std::find_if(config.scenarios.begin(), config.scenarios.end(),
                                       [&](const auto& s) { return s.kind == entry.kind; });
        if (entry.kind == ScenarioKind::None || used == config.scenarios.end())
            continue;
        const auto& grid = used->targets(Direction::Downlink) ? dl : ul;
        const double f = footprint_for_scenario(*used, grid, config.footprint).fraction();
        rows.push_back({entry.kind, f, isr_f(0.0, f)});
    }
    return rows;
}

SweepResult sweep(const RunConfig& config)
{
    config.validate();
    struct Task {
        const InterferenceScenario* scenario;
        double isr;
    };
    std::vector<Task> tasks;
    bool synchronous = false;
    for (const auto& s : config.scenarios) {
        synchronous = synchronous || s.synchronous;
        if (s.kind == ScenarioKind::None) {
            tasks.push_back({&s, s.isr_re_db});
            continue;
        }
        for (double p : config.isr_re_sweep_db)
            tasks.push_back({&s, p});
    }
    const auto sync = synchronous ? run_sync_state(config) : SyncState::perfect(config.cell);

    std::vector<ExperimentRecord> records(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                records[i] = run_point(config, *tasks[i].scenario, tasks[i].isr, sync);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, tasks.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    return {config, std::move(records), isr_relation_table(config)};
}

}  // namespace ltelab
