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
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ltelab/ofdm.hpp"
#include "ltelab/sequences.hpp"
#include "ltelab/sync.hpp"

using namespace ltelab;

namespace {

std::vector<char> file_bytes(const std::filesystem::path& p)
{
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("ltelab_test_" + name);
}

CellConfig cell(int id)
{
    CellConfig c;
    c.cell_id = id;
    return c;
}

std::vector<std::complex<float>> rotated(std::vector<std::complex<float>> v, std::size_t by)
{
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(by), v.end());
    return v;
}

std::size_t sync_hits(const Footprint& fp, const ResourceGrid& g)
{
    std::size_t n = 0;
    for (const auto& re : fp.res())
        n += g.label(re) == ChannelKind::Pss || g.label(re) == ChannelKind::Sss;
    return n;
}

}  // namespace

TEST_CASE("numerology for 10 MHz")
{
    const auto n = numerology_for(50);
    CHECK(n.sample_rate == 15.36e6);
    CHECK(n.fft_size == 1024);
    CHECK(n.cp_first == 80);
    CHECK(n.cp_other == 72);
    CHECK(n.samples_per_slot() == 7680);
    CHECK(n.samples_per_frame() == 153600);
    CHECK(n.symbol_start(7) == 7680);
    CHECK(n.body_start(1) == 80 + 1024 + 72);
    CHECK(numerology_for(100).fft_size == 2048);
    CHECK(numerology_for(6).fft_size == 128);
    CHECK(numerology_for(50, 30.72e6).fft_size == 2048);
    CHECK(numerology_for(50, 30.72e6).cp_first == 160);
}

TEST_CASE("unsupported rate and bandwidth pairings are rejected")
{
    CHECK_THROWS_AS(numerology_for(50, 10e6), std::invalid_argument);
    CHECK_THROWS_AS(numerology_for(100, 7.68e6), std::invalid_argument);
    CHECK_THROWS_AS(numerology_for(50, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(numerology_for(40), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_iq(FrequencyFrame::zeros(600), 1, numerology_for(50, 7.68e6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(synthesize_iq(FrequencyFrame::zeros(600), 0, numerology_for(50)),
                    std::invalid_argument);
}

TEST_CASE("subcarrier mapping leaves DC empty")
{
    CHECK(subcarrier_to_bin(0, 600, 1024) == 1024 - 300);
    CHECK(subcarrier_to_bin(299, 600, 1024) == 1023);
    CHECK(subcarrier_to_bin(300, 600, 1024) == 1);
    CHECK(subcarrier_to_bin(599, 600, 1024) == 300);
}

TEST_CASE("empty grid frame is 153600 zero samples")
{
    const auto iq = synthesize_iq(FrequencyFrame::zeros(600), 1, numerology_for(50));
    CHECK(iq.size() == 153600);
    CHECK(std::all_of(iq.begin(), iq.end(), [](auto z) { return z == std::complex<float>{}; }));
    CHECK(synthesize_iq(FrequencyFrame::zeros(600), 3, numerology_for(50)).size() == 3 * 153600);
}

TEST_CASE("single subcarrier gives a constant-modulus tone over its symbol")
{
    const auto num = numerology_for(50);
    for (int s : {0, 3, 77}) {
        auto f = FrequencyFrame::zeros(600);
        f.at(123, s) = {0.6, -0.8};
        const auto iq = synthesize_iq(f, 1, num);
        const auto start = num.symbol_start(s);
        const auto len = num.symbol_length(s);
        const double expect = 1.0 / std::sqrt(1024.0);
        for (std::int64_t i = 0; i < 153600; ++i) {
            const double mag = std::abs(iq[static_cast<std::size_t>(i)]);
            if (i >= start && i < start + len)
                REQUIRE(mag == doctest::Approx(expect).epsilon(1e-6));
            else
                REQUIRE(mag == 0.0);
        }
        // cyclic prefix repeats the tail of the body
        const auto cp = num.cp_length(s);
        for (int i = 0; i < cp; ++i)
            REQUIRE(iq[static_cast<std::size_t>(start + i)] ==
                    iq[static_cast<std::size_t>(start + 1024 + i)]);
    }
}

TEST_CASE("Parseval: body energy equals grid energy")
{
    const auto num = numerology_for(50);
    const auto dl = build_dl_grid(cell(11));
    const auto grid_frame = modulate_grid(dl);
    CHECK(grid_frame.energy() == doctest::Approx(dl.total_energy()).epsilon(1e-12));
    const auto iq = synthesize_iq(grid_frame, 1, num);
    CHECK(std::fabs(body_energy(iq, num) / grid_frame.energy() - 1.0) <= 1e-6);

    const auto fp = footprint_for_scenario(InterferenceScenario::make(ScenarioKind::FullBand), dl);
    const auto jam = interference_frame(fp, 5.0, 3);
    CHECK(jam.energy() == doctest::Approx(db_to_linear(5.0) * 84000.0).epsilon(1e-9));
    const auto jam_iq = synthesize_iq(jam, 2, num);
    CHECK(std::fabs(body_energy(jam_iq, num) / (2.0 * jam.energy()) - 1.0) <= 1e-6);
    CHECK_THROWS_AS(body_energy(std::span(jam_iq).first(1000), num), std::invalid_argument);
}

TEST_CASE("modulated grid carries the sync sequences")
{
    const auto c = cell(301);
    const auto f = modulate_grid(build_dl_grid(c));
    const auto pss = pss_sequence(c.n_id_2());
    const int lo = c.central_start() + 5;
    for (int n = 0; n < 62; ++n)
        CHECK(std::abs(f.at(lo + n, 6) - pss[static_cast<std::size_t>(n)]) < 1e-12);
    const auto sss = sss_sequence(c.n_id_1(), c.n_id_2(), 5);
    for (int n = 0; n < 62; ++n)
        CHECK(f.at(lo + n, 75).real() == sss[static_cast<std::size_t>(n)]);
}

TEST_CASE("IQ output is byte-identical across runs and round-trips through files")
{
    const auto num = numerology_for(50);
    const auto dl = build_dl_grid(cell(5));
    const auto fp =
        footprint_for_scenario(InterferenceScenario::make(ScenarioKind::HalfBand, 2.0), dl);
    auto make = [&] { return synthesize_iq(combine(modulate_grid(dl), interference_frame(fp, 2.0, 9)), 2, num); };
    const auto a = make();
    const auto b = make();
    CHECK(a == b);
    const auto pa = temp_path("a.cf32"), pb = temp_path("b.cf32");
    write_iq_file(pa, a);
    write_iq_file(pb, b);
    const auto bytes = file_bytes(pa);
    CHECK(bytes.size() == a.size() * 8);
    CHECK(bytes == file_bytes(pb));
    CHECK(read_iq_file(pa) == a);
    // little-endian interleaved I then Q
    float i0 = 0.0f, q0 = 0.0f;
    std::memcpy(&i0, bytes.data(), 4);
    std::memcpy(&q0, bytes.data() + 4, 4);
    CHECK(i0 == a[0].real());
    CHECK(q0 == a[0].imag());
    std::filesystem::remove(pa);
    std::filesystem::remove(pb);
    CHECK_THROWS_AS(read_iq_file(temp_path("missing.cf32")), std::runtime_error);
}

TEST_CASE("interferer payload depends on the seed only")
{
    const auto dl = build_dl_grid(cell(0));
    const auto fp = footprint_for_scenario(InterferenceScenario::make(ScenarioKind::FullBand), dl);
    CHECK(interference_frame(fp, 0.0, 1).values == interference_frame(fp, 0.0, 1).values);
    CHECK(interference_frame(fp, 0.0, 1).values != interference_frame(fp, 0.0, 2).values);
}

TEST_CASE("sidecar JSON round-trips")
{
    const IqSidecar s{15.36e6, 4, "pss_sss_interference", 5.0, 50, 1024};
    const auto text = sidecar_to_json(s);
    CHECK(text.find("\"cf32_le\"") != std::string::npos);
    CHECK(sidecar_from_json(text) == s);
    CHECK_THROWS_AS(sidecar_from_json(R"({"format":"ci16"})"), std::invalid_argument);
}

TEST_CASE("acquisition locks onto the cell at the true frame boundary")
{
    const auto num = numerology_for(50);
    const auto per_frame = num.samples_per_frame();
    for (int id : {0, 1, 2, 100, 257, 503}) {
        CAPTURE(id);
        const auto iq = synthesize_iq(modulate_grid(build_dl_grid(cell(id))), 2, num);
        for (std::int64_t offset : {std::int64_t{0}, std::int64_t{12345}, std::int64_t{80000}}) {
            CAPTURE(offset);
            const auto rx = rotated(iq, static_cast<std::size_t>(offset));
            const auto state = acquire_sync(rx, 50, num);
            CHECK(state.locked);
            CHECK(state.detected_cell_id == id);
            CHECK(state.detected_n_id_2 == id % 3);
            const std::int64_t true_start = (per_frame - offset) % per_frame;
            CHECK(std::llabs(timing_error(state, true_start, num)) <= 2);
        }
    }
}

TEST_CASE("acquisition does not lock on noise")
{
    const auto num = numerology_for(50);
    std::mt19937_64 rng(5);
    std::normal_distribution<float> g(0.0f, 0.03f);
    std::vector<std::complex<float>> noise(2 * 153600);
    for (auto& z : noise)
        z = {g(rng), g(rng)};
    CHECK_FALSE(acquire_sync(noise, 50, num).locked);
    CHECK_THROWS_AS(acquire_sync(std::span(noise).first(1000), 50, num), std::invalid_argument);
}

TEST_CASE("alignment: zero offset overlays PSS/SSS exactly")
{
    const auto c = cell(4);
    const auto dl = build_dl_grid(c);
    const auto num = numerology_for(50);
    FootprintOptions exact;
    exact.sync_mode = SyncFootprintMode::GridExact;
    const auto s = InterferenceScenario::make(ScenarioKind::PssSssInterference, 5.0);
    const auto fp = footprint_for_scenario(s, dl, exact);
    const auto a = sync_align(s, SyncState::perfect(c), fp, num);
    CHECK(a.symbol_shift == 0);
    CHECK(a.misalignment_samples == 0);
    CHECK(a.footprint == fp);
    CHECK(sync_hits(a.footprint, dl) == 248);
}

TEST_CASE("alignment: whole-symbol offsets move the footprint off its symbols")
{
    const auto c = cell(4);
    const auto dl = build_dl_grid(c);
    const auto num = numerology_for(50);
    FootprintOptions exact;
    exact.sync_mode = SyncFootprintMode::GridExact;
    auto s = InterferenceScenario::make(ScenarioKind::PssSssInterference, 5.0);
    const auto fp = footprint_for_scenario(s, dl, exact);

    s.timing_offset_samples = num.symbol_length(1);
    auto a = sync_align(s, SyncState::perfect(c), fp, num);
    CHECK(a.symbol_shift == 1);
    CHECK(a.footprint == fp.shifted_symbols(1));
    // PSS follows SSS directly, so the delayed SSS burst lands on the PSS
    // symbol while the PSS burst lands on data.
    std::size_t pss = 0, sss = 0;
    for (const auto& re : a.footprint.res()) {
        pss += dl.label(re) == ChannelKind::Pss;
        sss += dl.label(re) == ChannelKind::Sss;
    }
    CHECK(pss == 124);
    CHECK(sss == 0);

    for (int k : {2, 3, 5, -2, -7}) {
        CAPTURE(k);
        s.timing_offset_samples = static_cast<std::int64_t>(std::llround(k * num.mean_symbol_length()));
        a = sync_align(s, SyncState::perfect(c), fp, num);
        CHECK(a.symbol_shift == k);
        CHECK(sync_hits(a.footprint, dl) == 0);
    }
}

TEST_CASE("alignment uses the acquired timing")
{
    const auto c = cell(77);
    const auto num = numerology_for(50);
    const auto dl = build_dl_grid(c);
    const auto iq = rotated(synthesize_iq(modulate_grid(dl), 2, num), 50000);
    const auto state = acquire_sync(iq, 50, num);
    REQUIRE(state.locked);
    FootprintOptions exact;
    exact.sync_mode = SyncFootprintMode::GridExact;
    const auto s = InterferenceScenario::make(ScenarioKind::PssSssInterference, 0.0);
    const auto fp = footprint_for_scenario(s, dl, exact);
    // victim frame starts where the interferer saw it
    const auto a = sync_align(s, state, fp, num, state.frame_timing);
    CHECK(a.symbol_shift == 0);
    CHECK(sync_hits(a.footprint, dl) == 248);
    // a victim boundary 3 symbols earlier than detected leaves the burst late
    const auto late = sync_align(s, state, fp, num,
                                 state.frame_timing - 3 * num.symbol_length(1));
    CHECK(late.symbol_shift == 3);
    CHECK(sync_hits(late.footprint, dl) == 0);
}

TEST_CASE("alignment refuses unlocked or asynchronous input")
{
    const auto c = cell(0);
    const auto dl = build_dl_grid(c);
    const auto num = numerology_for(50);
    const auto s = InterferenceScenario::make(ScenarioKind::PssSssInterference);
    const auto fp = footprint_for_scenario(s, dl);
    SyncState unlocked = SyncState::perfect(c);
    unlocked.locked = false;
    CHECK_THROWS_AS(sync_align(s, unlocked, fp, num), std::runtime_error);
    const auto spoof = InterferenceScenario::make(ScenarioKind::PssSssSpoof);
    CHECK_THROWS_AS(sync_align(spoof, SyncState::perfect(c), fp, num), std::invalid_argument);
}
