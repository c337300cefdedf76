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

// ltelab command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltelab/detector.hpp"
#include "ltelab/grid.hpp"
#include "ltelab/harness.hpp"
#include "ltelab/interference.hpp"
#include "ltelab/linkmodel.hpp"
#include "ltelab/ofdm.hpp"
#include "ltelab/sync.hpp"

namespace {

using namespace ltelab;

std::string read_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os || !(os << text))
        throw std::runtime_error("cannot write '" + path.string() + "'");
}

ScenarioKind parse_scenario(const std::string& text)
{
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
        return scenario_kind_from_row(std::stoi(text));
    return scenario_kind_from_string(text);
}

bool is_number(const std::string& item)
{
    try {
        std::size_t used = 0;
        std::stod(item, &used);
        return used == item.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("'" + item + "' is not a number");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty number list");
    return out;
}

// Flags shared by every subcommand that builds a grid.
struct CellFlags {
    std::string config;
    std::optional<int> bandwidth_rb;
    std::optional<int> cell_id;
    std::optional<int> cfi;
    std::optional<double> pucch_fraction;
    std::optional<std::string> sync_mode;
    std::optional<double> paper_fraction;

    void attach(CLI::App* app)
    {
        app->add_option("--config", config, "Run configuration (JSON)")->check(CLI::ExistingFile);
        app->add_option("--bandwidth-rb", bandwidth_rb, "Resource blocks (6, 15, 25, 50, 75, 100)");
        app->add_option("--cell-id", cell_id, "Physical cell id 0..503");
        app->add_option("--cfi", cfi, "Control format indicator 1..3");
        app->add_option("--pucch-fraction", pucch_fraction, "Share of UL subcarriers for PUCCH");
        app->add_option("--sync-footprint", sync_mode, "grid_exact or paper_fraction");
        app->add_option("--paper-fraction", paper_fraction, "PSS/SSS window fraction");
    }

    RunConfig resolve() const
    {
        auto c = config.empty() ? RunConfig::defaults() : run_config_from_json(read_file(config));
        if (bandwidth_rb)
            c.cell.bandwidth_rb = *bandwidth_rb;
        if (cell_id)
            c.cell.cell_id = *cell_id;
        if (cfi)
            c.cell.cfi = *cfi;
        if (pucch_fraction)
            c.cell.pucch_fraction = *pucch_fraction;
        if (sync_mode)
            c.footprint.sync_mode = sync_footprint_mode_from_string(*sync_mode);
        if (paper_fraction)
            c.footprint.paper_fraction = *paper_fraction;
        c.validate();
        return c;
    }
};

void print_occupancy(const ResourceGrid& grid)
{
    std::printf("%s grid: %d subcarriers x %d symbols = %zu REs\n",
                std::string(to_string(grid.direction())).c_str(), grid.num_subcarriers(),
                grid.num_symbols(), grid.size());
    const auto kinds = grid.direction() == Direction::Downlink
                           ? std::span<const ChannelKind>(kDownlinkChannels)
                           : std::span<const ChannelKind>(kUplinkChannels);
    for (auto kind : kinds)
        std::printf("  %-7s %6zu  %8.4f%%\n", std::string(to_string(kind)).c_str(),
                    grid.count(kind), 100.0 * channel_occupancy(grid, kind));
}

void print_report(const ExperimentRecord& rec)
{
    const auto& r = rec.report;
    std::printf("scenario      %d %s (%s)\n", catalog_row(r.scenario.kind),
                std::string(to_string(r.scenario.kind)).c_str(),
                std::string(to_string(r.scenario.scope)).c_str());
    std::printf("isr_re_db     %.3f\n", r.scenario.isr_re_db);
    if (rec.metrics)
        std::printf("fraction      %.6f\nisr_f_db      %.3f\n", rec.metrics->fraction,
                    rec.metrics->isr_f_db);
    std::printf("dl_mbps       %.4f\nul_mbps       %.4f\n", r.dl_mbps, r.ul_mbps);
    std::printf("degradation   dl %.4f  ul %.4f  total %.4f\n", r.dl_degradation,
                r.ul_degradation, r.degradation_fraction);
    std::printf("gates         pcfich %d  pdcch %d  pucch %d\n", r.gates_tripped.pcfich,
                r.gates_tripped.pdcch, r.gates_tripped.pucch);
    std::printf("sync          quality %.2f dB  lost %s\n", r.sync_quality_db,
                r.sync_lost ? "yes" : "no");
}

void print_experiment(const ExperimentReport& r)
{
    std::printf("train %zu  held-out %zu  accuracy %.4f\n", r.n_train, r.n_test, r.accuracy);
    std::printf("confusion (rows true, columns predicted)\n%16s", "");
    for (const auto& c : r.categories)
        std::printf(" %15s", c.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < r.categories.size(); ++i) {
        std::printf("%16s", r.categories[i].c_str());
        for (int v : r.confusion[i])
            std::printf(" %15d", v);
        std::printf("   accuracy %.4f\n", r.per_class_accuracy[i]);
    }
    if (r.displaced_index) {
        const auto i = *r.displaced_index;
        std::printf("displaced point (%.4f, %.4f) -> %s\n", r.held_out[i].features[0],
                    r.held_out[i].features[1],
                    r.categories[static_cast<std::size_t>(r.predicted[i])].c_str());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"LTE interference lab: resource grids, interference footprints, link model, "
                 "k-NN detection"};
    app.set_version_flag("--version", std::string(ltelab::tool_version()));
    app.require_subcommand(1);

    // grid inspect
    auto* grid_cmd = app.add_subcommand("grid", "Resource grid tools");
    grid_cmd->require_subcommand(1);
    auto* inspect = grid_cmd->add_subcommand("inspect", "Channel occupancy table");
    CellFlags inspect_flags;
    inspect_flags.attach(inspect);
    std::string grid_json;
    inspect->add_option("--json", grid_json, "Write the DL grid labels as JSON to this path");

    // scenario run
    auto* scenario_cmd = app.add_subcommand("scenario", "Single scenario evaluation");
    scenario_cmd->require_subcommand(1);
    auto* scenario_run = scenario_cmd->add_subcommand("run", "Evaluate one scenario at one ISR");
    CellFlags run_flags;
    run_flags.attach(scenario_run);
    std::string scenario_name;
    double isr_re = 0.0;
    std::optional<std::int64_t> timing_offset;
    std::optional<double> duty_cycle;
    std::optional<std::string> sync_source;
    bool run_json = false;
    scenario_run->add_option("--scenario", scenario_name, "Catalog row 0..6 or name")->required();
    scenario_run->add_option("--isr-re", isr_re, "Per-RE interference-to-signal ratio (dB)");
    scenario_run->add_option("--timing-offset", timing_offset, "Samples after alignment (sync only)");
    scenario_run->add_option("--duty-cycle", duty_cycle, "Symbol duty cycle (async only)");
    scenario_run->add_option("--sync", sync_source, "perfect or acquire");
    scenario_run->add_flag("--json", run_json, "Print the report as JSON");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Scenario x ISR sweep with exports");
    CellFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);
    bool dense = false;
    std::optional<std::string> isr_list;
    std::string out_dir;
    std::optional<std::string> csv_path, json_path, plot_path;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> sweep_seed;
    std::optional<std::string> sweep_sync;
    bool timestamps = false;
    bool quiet = false;
    sweep_cmd->add_flag("--dense", dense, "21 ISR points from -10 to 10 dB");
    sweep_cmd->add_option("--isr-re", isr_list, "Comma-separated ISR_RE points (dB)");
    sweep_cmd->add_option("--out-dir", out_dir, "Write sweep.csv, sweep.json, plotdata.json here");
    sweep_cmd->add_option("--csv", csv_path, "CSV output path");
    sweep_cmd->add_option("--json", json_path, "JSON output path");
    sweep_cmd->add_option("--plotdata", plot_path, "Plot data output path");
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    sweep_cmd->add_option("--seed", sweep_seed, "Run seed");
    sweep_cmd->add_option("--sync", sweep_sync, "perfect or acquire");
    sweep_cmd->add_flag("--timestamps", timestamps, "Stamp each record with UTC time");
    sweep_cmd->add_flag("--quiet", quiet, "Do not print the table");

    // iq export
    auto* iq_cmd = app.add_subcommand("iq", "Baseband IQ synthesis");
    iq_cmd->require_subcommand(1);
    auto* iq_export = iq_cmd->add_subcommand("export", "Write cf32 samples and a JSON sidecar");
    CellFlags iq_flags;
    iq_flags.attach(iq_export);
    std::string iq_scenario;
    int frames = 1;
    std::string iq_out;
    double iq_isr = 0.0;
    double sample_rate = 0.0;
    std::uint32_t iq_seed = 1;
    std::string content = "combined";
    iq_export->add_option("--scenario", iq_scenario, "Catalog row 0..6 or name")->required();
    iq_export->add_option("--frames", frames, "Number of 10 ms frames")->check(CLI::PositiveNumber);
    iq_export->add_option("--out", iq_out, "Output sample file")->required();
    iq_export->add_option("--isr-re", iq_isr, "Per-RE interference-to-signal ratio (dB)");
    iq_export->add_option("--sample-rate", sample_rate, "Hz (default for the bandwidth)");
    iq_export->add_option("--seed", iq_seed, "Interferer payload seed");
    iq_export->add_option("--content", content, "victim, interference or combined")
        ->check(CLI::IsMember({"victim", "interference", "combined"}));

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "k-NN interference detection");
    detect_cmd->require_subcommand(1);
    ExperimentConfig exp;
    std::string metric = "euclidean";
    auto add_experiment_flags = [&](CLI::App* cmd) {
        cmd->add_option("--k", exp.knn.k, "Neighbors")->check(CLI::PositiveNumber);
        cmd->add_option("--metric", metric, "euclidean or manhattan");
        cmd->add_flag("--normalize", exp.knn.normalize, "z-score features");
        cmd->add_option("--seed", exp.seed, "Experiment seed");
        cmd->add_option("--noise-sd", exp.pm.noise_sd, "PM counter noise standard deviation");
        cmd->add_option("--samples-per-class", exp.samples_per_class, "Samples per class");
        cmd->add_option("--train-fraction", exp.train_fraction, "Training share");
    };
    auto* train = detect_cmd->add_subcommand("train", "Build a model file");
    add_experiment_flags(train);
    std::string train_data, model_out;
    train->add_option("--data", train_data, "Training set (.csv or .json); synthesized if absent");
    train->add_option("--out", model_out, "Model JSON path")->required();
    auto* classify = detect_cmd->add_subcommand("classify", "Classify feature vectors");
    std::string model_path, features, query_data;
    classify->add_option("--model", model_path, "Model JSON from 'detect train'")->required();
    classify->add_option("--features", features, "Comma-separated feature values");
    classify->add_option("--data", query_data, "CSV of feature rows (label column optional)");
    auto* experiment = detect_cmd->add_subcommand("experiment", "Two-cluster PUCCH detection run");
    add_experiment_flags(experiment);
    bool no_displaced = false;
    std::string exp_json, exp_csv;
    experiment->add_flag("--no-displaced", no_displaced, "Skip the displaced held-out point");
    experiment->add_option("--json", exp_json, "Report JSON path");
    experiment->add_option("--csv", exp_csv, "Held-out predictions CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (inspect->parsed()) {
            const auto c = inspect_flags.resolve();
            print_occupancy(build_dl_grid(c.cell));
            print_occupancy(build_ul_grid(c.cell));
            if (!grid_json.empty())
                write_file(grid_json, grid_to_json(build_dl_grid(c.cell)) + "\n");
        } else if (scenario_run->parsed()) {
            auto c = run_flags.resolve();
            if (sync_source)
                c.sync = sync_source_from_string(*sync_source);
            auto s = InterferenceScenario::make(parse_scenario(scenario_name), isr_re);
            if (timing_offset)
                s.timing_offset_samples = *timing_offset;
            if (duty_cycle)
                s.duty_cycle = *duty_cycle;
            s.validate();
            const auto rec = run_scenario(c, s, isr_re);
            if (run_json)
                std::printf("%s\n", report_to_json(rec.report).c_str());
            else
                print_report(rec);
        } else if (sweep_cmd->parsed()) {
            auto c = sweep_flags.resolve();
            if (dense)
                c.isr_re_sweep_db = dense_isr_sweep();
            if (isr_list)
                c.isr_re_sweep_db = parse_list(*isr_list);
            if (threads)
                c.threads = *threads;
            if (sweep_seed)
                c.seed = *sweep_seed;
            if (sweep_sync)
                c.sync = sync_source_from_string(*sweep_sync);
            if (timestamps)
                c.timestamps = true;
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                const std::filesystem::path d(out_dir);
                c.outputs = {(d / "sweep.csv").string(), (d / "sweep.json").string(),
                             (d / "plotdata.json").string()};
            }
            if (csv_path)
                c.outputs.csv = *csv_path;
            if (json_path)
                c.outputs.json = *json_path;
            if (plot_path)
                c.outputs.plotdata = *plot_path;
            c.validate();
            const auto result = sweep(c);
            export_all(result);
            if (!quiet)
                std::printf("%s", sweep_table(result).c_str());
        } else if (iq_export->parsed()) {
            const auto c = iq_flags.resolve();
            const auto s = InterferenceScenario::make(parse_scenario(iq_scenario), iq_isr);
            const auto numerology = numerology_for(c.cell.bandwidth_rb, sample_rate);
            const bool uplink = s.scope == LinkScope::Uplink;
            const auto grid = uplink ? build_ul_grid(c.cell) : build_dl_grid(c.cell);
            auto frame = FrequencyFrame::zeros(grid.num_subcarriers());
            if (content != "interference")
                frame = modulate_grid(grid);
            if (content != "victim" && s.kind != ScenarioKind::None) {
                auto fp = footprint_for_scenario(s, grid, c.footprint);
                if (s.synchronous)
                    fp = sync_align(s, run_sync_state(c), fp, numerology).footprint;
                frame = combine(frame, interference_frame(fp, iq_isr, iq_seed));
            }
            const auto iq = synthesize_iq(frame, frames, numerology);
            write_iq_file(iq_out, iq);
            IqSidecar meta{numerology.sample_rate, frames, std::string(to_string(s.kind)), iq_isr,
                           c.cell.bandwidth_rb, numerology.fft_size};
            write_file(iq_out + ".json", sidecar_to_json(meta) + "\n");
            std::printf("wrote %zu samples (%d frame%s at %.0f Hz) to %s\n", iq.size(), frames,
                        frames == 1 ? "" : "s", numerology.sample_rate, iq_out.c_str());
        } else if (train->parsed()) {
            exp.knn.metric = distance_metric_from_string(metric);
            TrainingSet set;
            if (train_data.empty()) {
                set = run_detection_experiment(exp).training;
            } else {
                const auto text = read_file(train_data);
                set = std::filesystem::path(train_data).extension() == ".json"
                          ? training_set_from_json(text)
                          : training_set_from_csv(text);
            }
            const KnnModel model(set, exp.knn);
            write_file(model_out, model_to_json(model) + "\n");
            std::printf("model: %zu samples, %zu features, k=%d -> %s\n", set.size(),
                        set.dimension(), exp.knn.k, model_out.c_str());
        } else if (classify->parsed()) {
            const auto model = model_from_json(read_file(model_path));
            if (features.empty() == query_data.empty())
                throw std::invalid_argument("give exactly one of --features or --data");
            if (!features.empty()) {
                std::printf("%s\n", model.classify_name(parse_list(features)).c_str());
            } else {
                std::istringstream is(read_file(query_data));
                std::string line;
                bool header = true;
                while (std::getline(is, line)) {
                    if (!line.empty() && line.back() == '\r')
                        line.pop_back();
                    if (line.empty())
                        continue;
                    if (header) {
                        header = false;
                        if (line.find_first_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos)
                            continue;
                    }
                    // trailing label columns (true and/or predicted) are ignored
                    auto row = line;
                    for (auto comma = row.rfind(','); comma != std::string::npos && !is_number(row.substr(comma + 1));
                         comma = row.rfind(','))
                        row.erase(comma);
                    std::printf("%s\n", model.classify_name(parse_list(row)).c_str());
                }
            }
        } else if (experiment->parsed()) {
            exp.knn.metric = distance_metric_from_string(metric);
            exp.displaced_point = !no_displaced;
            const auto report = run_detection_experiment(exp);
            print_experiment(report);
            if (!exp_json.empty())
                write_file(exp_json, experiment_report_to_json(report) + "\n");
            if (!exp_csv.empty())
                write_file(exp_csv, experiment_report_to_csv(report));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "ltelab: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
