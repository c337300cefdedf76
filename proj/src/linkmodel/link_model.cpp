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

#include "ltelab/linkmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ltelab/simd/kernels.hpp"

namespace ltelab {

namespace {

void check_finite(double value, const char* name)
{
    if (!std::isfinite(value))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

void check_map(const ResourceGrid& grid, const InterferenceMap& interference)
{
    if (interference.direction != grid.direction() ||
        interference.num_subcarriers != grid.num_subcarriers() ||
        interference.power.size() != grid.size())
        throw std::invalid_argument("interference map is not dimensioned to the grid");
}

struct Mean {
    double sum = 0.0;
    std::size_t n = 0;

    void add(double v)
    {
        sum += v;
        ++n;
    }
    std::optional<double> value() const
    {
        if (n == 0)
            return std::nullopt;
        return sum / static_cast<double>(n);
    }
};

bool meets(double linear, double threshold_db) { return linear >= db_to_linear(threshold_db); }

// Channel-estimation error per (subframe, RB) from interference landing on CRS.
std::vector<double> crs_estimation_error(const ResourceGrid& grid,
                                         const InterferenceMap& interference,
                                         const LinkConfig& config)
{
    const int n_sc = grid.num_subcarriers();
    const int n_rb = n_sc / kSubcarriersPerRb;
    std::vector<double> sum(static_cast<std::size_t>(10 * n_rb), 0.0);
    std::vector<int> count(sum.size(), 0);
    const auto labels = grid.labels();
    const auto signal = grid.power();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != ChannelKind::Crs || signal[i] <= 0.0)
            continue;
        const int k = static_cast<int>(i % static_cast<std::size_t>(n_sc));
        const int s = static_cast<int>(i / static_cast<std::size_t>(n_sc));
        const auto slot = static_cast<std::size_t>(subframe_of(s) * n_rb + k / kSubcarriersPerRb);
        sum[slot] += interference.power[i] / signal[i];
        ++count[slot];
    }
    std::vector<double> err(sum.size(), 0.0);
    for (std::size_t i = 0; i < err.size(); ++i)
        if (count[i] > 0)
            err[i] = config.crs_penalty_gain * (sum[i] / count[i]) / count[i];
    return err;
}

}  // namespace

void LinkConfig::validate() const
{
    check_finite(noise_floor_db, "noise_floor_db");
    check_finite(data_sinr_threshold_db, "data_sinr_threshold_db");
    check_finite(pcfich_sinr_threshold_db, "pcfich_sinr_threshold_db");
    check_finite(pdcch_sinr_threshold_db, "pdcch_sinr_threshold_db");
    check_finite(pbch_sinr_threshold_db, "pbch_sinr_threshold_db");
    check_finite(pucch_sinr_threshold_db, "pucch_sinr_threshold_db");
    check_finite(sync_loss_floor_db, "sync_loss_floor_db");
    check_finite(spoof_capture_margin_db, "spoof_capture_margin_db");
    if (!(crs_penalty_gain >= 0.0) || !std::isfinite(crs_penalty_gain))
        throw std::invalid_argument("crs_penalty_gain must be finite and >= 0");
    if (!(sync_penalty_gain >= 0.0) || !std::isfinite(sync_penalty_gain))
        throw std::invalid_argument("sync_penalty_gain must be finite and >= 0");
    if (!(nominal_dl_mbps > 0.0) || !std::isfinite(nominal_dl_mbps))
        throw std::invalid_argument("nominal_dl_mbps must be positive");
    if (!(nominal_ul_mbps > 0.0) || !std::isfinite(nominal_ul_mbps))
        throw std::invalid_argument("nominal_ul_mbps must be positive");
}

double LinkConfig::noise_linear() const { return db_to_linear(noise_floor_db); }

std::vector<double> per_re_sinr(const ResourceGrid& grid, const InterferenceMap& interference,
                                const LinkConfig& config)
{
    check_map(grid, interference);
    std::vector<double> out(grid.size());
    simd::sinr(grid.power(), interference.power, config.noise_linear(), out);
    return out;
}

std::vector<ControlMeasurement> measure_control(const ResourceGrid& grid,
                                                std::span<const double> sinr)
{
    if (sinr.size() != grid.size())
        throw std::invalid_argument("SINR map is not dimensioned to the grid");
    const auto n_sc = static_cast<std::size_t>(grid.num_subcarriers());
    std::vector<Mean> pcfich(10), pdcch(10), pucch(10);
    const auto labels = grid.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto sf = static_cast<std::size_t>(subframe_of(static_cast<int>(i / n_sc)));
        switch (labels[i]) {
        case ChannelKind::Pcfich:
            pcfich[sf].add(sinr[i]);
            break;
        case ChannelKind::Pdcch:
            pdcch[sf].add(sinr[i]);
            break;
        case ChannelKind::Pucch:
            pucch[sf].add(sinr[i]);
            break;
        default:
            break;
        }
    }
    std::vector<ControlMeasurement> out(10);
    for (std::size_t sf = 0; sf < 10; ++sf)
        out[sf] = {pcfich[sf].value(), pdcch[sf].value(), pucch[sf].value()};
    return out;
}

std::vector<bool> control_gate(std::span<const ControlMeasurement> measurements,
                               const LinkConfig& config)
{
    std::vector<bool> ok;
    ok.reserve(measurements.size());
    for (const auto& m : measurements) {
        bool pass = true;
        if (m.pcfich_sinr)
            pass = pass && meets(*m.pcfich_sinr, config.pcfich_sinr_threshold_db);
        if (m.pdcch_sinr)
            pass = pass && meets(*m.pdcch_sinr, config.pdcch_sinr_threshold_db);
        if (m.pucch_sinr)
            pass = pass && meets(*m.pucch_sinr, config.pucch_sinr_threshold_db);
        ok.push_back(pass);
    }
    return ok;
}

SyncTracking sync_tracking(const ResourceGrid& grid, const InterferenceMap& interference,
                           const LinkConfig& config)
{
    if (grid.direction() != Direction::Downlink)
        throw std::invalid_argument("sync tracking applies to the downlink only");
    const auto sinr = per_re_sinr(grid, interference, config);
    Mean q;
    const auto labels = grid.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == ChannelKind::Pss || labels[i] == ChannelKind::Sss)
            q.add(sinr[i]);
    SyncTracking t;
    t.sync_quality = q.value().value_or(0.0);
    t.sync_lost = !(t.sync_quality > 0.0) ||
                  linear_to_db(t.sync_quality) < config.sync_loss_floor_db;
    return t;
}

double sync_penalty(double sync_quality, const LinkConfig& config)
{
    if (!(sync_quality > 0.0))
        throw std::invalid_argument("sync quality must be positive");
    const double excess = std::max(0.0, 1.0 / sync_quality - config.noise_linear());
    return 1.0 / (1.0 + config.sync_penalty_gain * excess);
}

LinkEstimate estimate_link(const ResourceGrid& grid, const InterferenceMap& interference,
                           const LinkConfig& config)
{
    config.validate();
    const auto sinr = per_re_sinr(grid, interference, config);
    const auto control = measure_control(grid, sinr);
    const auto gate = control_gate(control, config);
    const bool downlink = grid.direction() == Direction::Downlink;
    const auto n_sc = static_cast<std::size_t>(grid.num_subcarriers());
    const auto n_rb = n_sc / kSubcarriersPerRb;
    const double noise = config.noise_linear();
    const double data_threshold = db_to_linear(config.data_sinr_threshold_db);
    const ChannelKind data_kind = downlink ? ChannelKind::Pdsch : ChannelKind::Pusch;

    std::vector<double> est_err;
    if (downlink)
        est_err = crs_estimation_error(grid, interference, config);

    std::vector<std::size_t> data_total(10, 0), data_ok(10, 0);
    std::vector<Mean> sync_sf(10);
    Mean pucch_all;
    const auto labels = grid.labels();
    const auto signal = grid.power();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto sf = static_cast<std::size_t>(subframe_of(static_cast<int>(i / n_sc)));
        const auto kind = labels[i];
        if (kind == data_kind) {
            double effective = sinr[i];
            if (downlink) {
                const double e = est_err[sf * n_rb + (i % n_sc) / kSubcarriersPerRb];
                if (e > 0.0)
                    effective = signal[i] / (noise + interference.power[i] + signal[i] * e);
            }
            ++data_total[sf];
            if (effective >= data_threshold)
                ++data_ok[sf];
        } else if (kind == ChannelKind::Pss || kind == ChannelKind::Sss) {
            sync_sf[sf].add(sinr[i]);
        } else if (kind == ChannelKind::Pucch) {
            pucch_all.add(sinr[i]);
        }
    }

    LinkEstimate est;
    est.direction = grid.direction();
    est.nominal_mbps = downlink ? config.nominal_dl_mbps : config.nominal_ul_mbps;
    if (downlink) {
        const auto tracking = sync_tracking(grid, interference, config);
        est.sync_lost = tracking.sync_lost;
        est.sync_quality = tracking.sync_quality;
        est.sync_penalty = tracking.sync_quality > 0.0 ? sync_penalty(tracking.sync_quality, config)
                                                       : 0.0;
    } else {
        est.pucch_sinr_db = linear_to_db(pucch_all.value().value_or(0.0));
    }

    double acc = 0.0;
    for (std::size_t sf = 0; sf < 10; ++sf) {
        SubframeOutcome o;
        o.subframe_index = static_cast<int>(sf);
        o.control_ok = gate[sf];
        o.decodable_fraction =
            data_total[sf] == 0 ? 1.0
                                : static_cast<double>(data_ok[sf]) / static_cast<double>(data_total[sf]);
        o.sync_quality = sync_sf[sf].value();
        const auto& m = control[sf];
        if (m.pcfich_sinr && !meets(*m.pcfich_sinr, config.pcfich_sinr_threshold_db))
            ++est.gates.pcfich;
        if (m.pdcch_sinr && !meets(*m.pdcch_sinr, config.pdcch_sinr_threshold_db))
            ++est.gates.pdcch;
        if (m.pucch_sinr && !meets(*m.pucch_sinr, config.pucch_sinr_threshold_db))
            ++est.gates.pucch;
        if (o.control_ok)
            acc += o.decodable_fraction * (downlink ? est.sync_penalty : 1.0);
        est.subframes.push_back(o);
    }
    if (!est.sync_lost)
        est.achieved_mbps = std::clamp(est.nominal_mbps * (acc / 10.0), 0.0, est.nominal_mbps);
    return est;
}

ThroughputReport estimate_throughput(const ResourceGrid& dl_grid, const InterferenceMap& dl_map,
                                     const ResourceGrid& ul_grid, const InterferenceMap& ul_map,
                                     const LinkConfig& config)
{
    if (dl_grid.direction() != Direction::Downlink || ul_grid.direction() != Direction::Uplink)
        throw std::invalid_argument("estimate_throughput expects a downlink and an uplink grid");
    const auto dl = estimate_link(dl_grid, dl_map, config);
    const auto ul = estimate_link(ul_grid, ul_map, config);
    ThroughputReport r;
    r.dl_mbps = dl.achieved_mbps;
    r.ul_mbps = ul.achieved_mbps;
    r.dl_degradation = 1.0 - dl.achieved_mbps / dl.nominal_mbps;
    r.ul_degradation = 1.0 - ul.achieved_mbps / ul.nominal_mbps;
    r.degradation_fraction = std::clamp(
        1.0 - (dl.achieved_mbps + ul.achieved_mbps) / (dl.nominal_mbps + ul.nominal_mbps), 0.0, 1.0);
    r.gates_tripped = {dl.gates.pcfich, dl.gates.pdcch, ul.gates.pucch};
    r.sync_lost = dl.sync_lost;
    r.sync_quality_db = linear_to_db(dl.sync_quality);
    r.pucch_sinr_db = ul.pucch_sinr_db;
    return r;
}

std::string_view to_string(CellSearchOutcome outcome)
{
    switch (outcome) {
    case CellSearchOutcome::AttachLegit:
        return "attach_legit";
    case CellSearchOutcome::AttachFake:
        return "attach_fake";
    case CellSearchOutcome::NoAttach:
        return "no_attach";
    }
    return "?";
}

CellSearchOutcome cell_search_outcome(const ResourceGrid& legit_grid,
                                      const std::optional<InterferenceScenario>& spoof,
                                      const LinkConfig& config,
                                      const InterferenceMap* interference)
{
    if (legit_grid.direction() != Direction::Downlink)
        throw std::invalid_argument("cell search runs on the downlink grid");
    if (spoof) {
        if (spoof->kind != ScenarioKind::PssSssSpoof)
            throw std::invalid_argument("cell search expects a PSS/SSS spoof scenario, got '" +
                                        std::string(to_string(spoof->kind)) + "'");
        check_finite(spoof->isr_re_db, "spoof isr_re_db");
        if (spoof->isr_re_db >= config.spoof_capture_margin_db)
            return config.spoof_cell_has_sib1 ? CellSearchOutcome::AttachFake
                                              : CellSearchOutcome::NoAttach;
    }
    if (interference) {
        const auto sinr = per_re_sinr(legit_grid, *interference, config);
        Mean pbch;
        const auto labels = legit_grid.labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == ChannelKind::Pbch)
                pbch.add(sinr[i]);
        if (auto m = pbch.value(); m && !meets(*m, config.pbch_sinr_threshold_db))
            return CellSearchOutcome::NoAttach;
    }
    return CellSearchOutcome::AttachLegit;
}

ScenarioEvaluation evaluate_scenario(const CellConfig& cell, const LinkConfig& link,
                                     const InterferenceScenario& scenario,
                                     const FootprintOptions& options, const SyncState* sync,
                                     std::int64_t victim_frame_start)
{
    cell.validate();
    link.validate();
    scenario.validate();
    options.validate();
    const auto dl = build_dl_grid(cell);
    const auto ul = build_ul_grid(cell);
    auto dl_map = no_interference(dl);
    auto ul_map = no_interference(ul);
    double fraction = 0.0;

    auto place = [&](const ResourceGrid& grid) {
        auto fp = footprint_for_scenario(scenario, grid, options);
        if (scenario.synchronous) {
            const auto state = sync ? *sync : SyncState::perfect(cell);
            fp = sync_align(scenario, state, fp, numerology_for(cell.bandwidth_rb),
                            victim_frame_start)
                     .footprint;
        }
        return fp;
    };

    if (scenario.kind != ScenarioKind::None) {
        if (scenario.targets(Direction::Downlink)) {
            const auto fp = place(dl);
            dl_map = apply_interference(dl, fp, scenario.isr_re_db);
            fraction = fp.fraction();
        }
        if (scenario.targets(Direction::Uplink)) {
            const auto fp = place(ul);
            ul_map = apply_interference(ul, fp, scenario.isr_re_db);
            if (!scenario.targets(Direction::Downlink))
                fraction = fp.fraction();
        }
    }

    ScenarioEvaluation ev;
    ev.report = estimate_throughput(dl, dl_map, ul, ul_map, link);
    ev.report.scenario = scenario;
    if (fraction > 0.0)
        ev.report.isr_f_db = isr_f(scenario.isr_re_db, fraction);
    ev.fraction = fraction;
    return ev;
}

}  // namespace ltelab
