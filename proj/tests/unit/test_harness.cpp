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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "ltelab/harness.hpp"

using namespace ltelab;

namespace {

std::size_t line_count(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("catalog has the seven test-case rows")
{
    const auto cat = scenario_catalog();
    REQUIRE(cat.size() == 7);
    const LinkScope scope[] = {LinkScope::None,   LinkScope::Both,     LinkScope::Both,
                               LinkScope::Uplink, LinkScope::Uplink,   LinkScope::Downlink,
                               LinkScope::Downlink};
    for (int i = 0; i < 7; ++i) {
        const auto& e = cat[static_cast<std::size_t>(i)];
        CHECK(e.row == i);
        CHECK(catalog_row(e.kind) == i);
        CHECK(e.scope == scope[i]);
        CHECK(e.synchronous == (i == 6));
        CHECK_FALSE(e.description.empty());
        const auto s = InterferenceScenario::make(e.kind);
        CHECK(s.scope == e.scope);
        CHECK(s.synchronous == e.synchronous);
    }
}

TEST_CASE("default sweep: 13 records in deterministic order")
{
    const auto result = sweep(RunConfig::defaults());
    REQUIRE(result.records.size() == 13);
    CHECK(result.records[0].report.scenario.kind == ScenarioKind::None);
    CHECK_FALSE(result.records[0].metrics.has_value());
    std::size_t i = 1;
    for (int row = 1; row <= 6; ++row) {
        for (double isr : {0.0, 5.0}) {
            const auto& r = result.records[i++];
            CHECK(catalog_row(r.report.scenario.kind) == row);
            CHECK(r.report.scenario.isr_re_db == isr);
            REQUIRE(r.metrics.has_value());
            CHECK(r.metrics->isr_f_db == doctest::Approx(isr_f(isr, r.metrics->fraction)).epsilon(1e-15));
            CHECK(*r.report.isr_f_db == r.metrics->isr_f_db);
            CHECK(r.tool_version == tool_version());
            CHECK_FALSE(r.timestamp.has_value());
        }
    }
    const auto csv = records_to_csv(result);
    CHECK(line_count(csv) == 14);
    CHECK(csv.rfind(report_csv_header(), 0) == 0);
}

TEST_CASE("ISR relation table")
{
    const auto rows = isr_relation_table(RunConfig::defaults());
    REQUIRE(rows.size() == 6);
    const double expect[] = {0.0, -3.01, -6.02, -1.25, -19.10, -19.10};
    for (std::size_t i = 0; i < 6; ++i) {
        CAPTURE(i);
        CHECK(std::fabs(rows[i].isr_f_minus_isr_re_db - expect[i]) <= 0.02);
    }
    CHECK(rows[0].fraction == 1.0);
    CHECK(rows[1].fraction == 0.5);
    CHECK(rows[2].fraction == 0.25);
    CHECK(rows[3].fraction == 0.75);
    CHECK(rows[4].fraction == rows[5].fraction);
}

TEST_CASE("sweep JSON round-trips to identical records")
{
    const auto a = sweep(RunConfig::defaults());
    const auto text = sweep_to_json(a);
    const auto b = sweep_from_json(text);
    CHECK(b.records == a.records);
    CHECK(b.isr_table == a.isr_table);
    CHECK(b.config == a.config);
    CHECK(sweep_to_json(b) == text);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["tool_version"] == std::string(tool_version()));
    CHECK(doc.contains("config"));
}

TEST_CASE("outputs are byte-identical across runs and thread counts")
{
    auto c = RunConfig::defaults();
    c.isr_re_sweep_db = dense_isr_sweep();
    c.threads = 1;
    const auto one = sweep(c);
    c.threads = 4;
    const auto four = sweep(c);
    const auto again = sweep(c);
    CHECK(one.records == four.records);
    CHECK(records_to_csv(four) == records_to_csv(again));
    CHECK(sweep_to_json(four) == sweep_to_json(again));
    CHECK(plotdata_to_json(four) == plotdata_to_json(again));
    CHECK(four.records.size() == 1 + 6 * 21);
}

TEST_CASE("timestamps are opt-in")
{
    auto c = RunConfig::defaults();
    c.timestamps = true;
    const auto r = sweep(c);
    for (const auto& rec : r.records)
        CHECK(rec.timestamp.has_value());
}

TEST_CASE("plotdata carries one DL/UL series group per ISR point")
{
    const auto doc = nlohmann::json::parse(plotdata_to_json(sweep(RunConfig::defaults())));
    REQUIRE(doc["figures"].size() == 2);
    for (const auto& fig : doc["figures"]) {
        CHECK(fig["scenarios"].size() == 7);
        CHECK(fig["series"]["dl_mbps"].size() == 7);
        CHECK(fig["series"]["ul_mbps"].size() == 7);
        CHECK(fig["series"]["dl_mbps"][0] == 12.0);
    }
}

TEST_CASE("run_scenario examples")
{
    const auto c = RunConfig::defaults();
    const auto none = run_scenario(c, InterferenceScenario::make(ScenarioKind::None), 0.0);
    CHECK(none.report.dl_mbps == 12.0);
    CHECK(none.report.ul_mbps == 8.0);
    CHECK_FALSE(none.metrics.has_value());
    const auto sync = run_scenario(c, InterferenceScenario::make(ScenarioKind::PssSssInterference), 5.0);
    CHECK(sync.report.dl_degradation > 0.0);
    CHECK_FALSE(sync.report.sync_lost);
    for (double isr : {-10.0, 0.0, 10.0}) {
        const auto pucch = run_scenario(c, InterferenceScenario::make(ScenarioKind::PucchTarget), isr);
        CHECK(pucch.report.dl_mbps == 12.0);
    }
    CHECK(run_scenario(c, InterferenceScenario::make(ScenarioKind::PucchTarget), 5.0).report.ul_mbps < 8.0);
}

TEST_CASE("acquired sync reproduces perfect-sync results")
{
    auto c = RunConfig::defaults();
    const auto perfect = run_scenario(c, InterferenceScenario::make(ScenarioKind::PssSssInterference), 5.0);
    c.sync = SyncSource::Acquire;
    const auto state = run_sync_state(c);
    CHECK(state.locked);
    CHECK(state.detected_cell_id == c.cell.cell_id);
    const auto acquired = run_scenario(c, InterferenceScenario::make(ScenarioKind::PssSssInterference), 5.0);
    CHECK(acquired.report == perfect.report);
}

TEST_CASE("run config JSON")
{
    auto c = RunConfig::defaults();
    c.seed = 99;
    c.cell.cell_id = 123;
    c.link.noise_floor_db = -25.0;
    c.footprint.sync_mode = SyncFootprintMode::GridExact;
    c.isr_re_sweep_db = {-3.0, 2.5};
    c.threads = 2;
    c.outputs.csv = "out.csv";
    CHECK(run_config_from_json(run_config_to_json(c)) == c);
    CHECK(run_config_from_json("{}") == RunConfig::defaults());
    CHECK(run_config_from_json(R"({"isr_re_sweep_db":"dense"})").isr_re_sweep_db == dense_isr_sweep());
    const auto partial = run_config_from_json(R"({"cell":{"cell_id":7}})");
    CHECK(partial.cell.cell_id == 7);
    CHECK(partial.cell.bandwidth_rb == 50);
    CHECK_THROWS(run_config_from_json(R"({"cell":{"cell_id":999}})"));
    CHECK_THROWS(run_config_from_json("not json"));
    CHECK(dense_isr_sweep().size() == 21);
    CHECK(dense_isr_sweep().front() == -10.0);
    CHECK(dense_isr_sweep().back() == 10.0);
}

TEST_CASE("export writes files and rejects unwritable paths")
{
    const auto dir = std::filesystem::temp_directory_path() / "ltelab_test_export";
    std::filesystem::create_directories(dir);
    auto c = RunConfig::defaults();
    c.outputs = {(dir / "r.csv").string(), (dir / "r.json").string(), (dir / "p.json").string()};
    const auto r = sweep(c);
    export_all(r);
    CHECK(slurp(dir / "r.csv") == records_to_csv(r));
    CHECK(slurp(dir / "r.json") == sweep_to_json(r));
    CHECK(slurp(dir / "p.json") == plotdata_to_json(r));
    CHECK(render(r, export_format_from_string("csv")) == records_to_csv(r));
    CHECK_THROWS(export_records(r, ExportFormat::Csv, "/nonexistent_dir/x/y.csv"));
    CHECK_THROWS_AS(export_format_from_string("xml"), std::invalid_argument);
    CHECK(sweep_table(r).find("pss_sss_interference") != std::string::npos);
    std::filesystem::remove_all(dir);
}
