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

#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ltelab/grid.hpp"

using namespace ltelab;

namespace {

CellConfig cell(int id = 0, int rb = 50, int cfi = 2)
{
    CellConfig c;
    c.cell_id = id;
    c.bandwidth_rb = rb;
    c.cfi = cfi;
    return c;
}

}  // namespace

TEST_CASE("config validation rejects out-of-range fields")
{
    CHECK_NOTHROW(cell().validate());
    CHECK_THROWS_AS(cell(0, 40).validate(), std::invalid_argument);
    CHECK_THROWS_AS(cell(504).validate(), std::invalid_argument);
    CHECK_THROWS_AS(cell(-1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(cell(0, 50, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(cell(0, 50, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(build_dl_grid(cell(0, 7)), std::invalid_argument);
    CHECK_THROWS_AS(build_ul_grid(cell(600)), std::invalid_argument);
}

TEST_CASE("50 RB frame holds 84000 REs")
{
    const auto dl = build_dl_grid(cell());
    const auto ul = build_ul_grid(cell());
    CHECK(dl.size() == 84000);
    CHECK(ul.size() == 84000);
    CHECK(dl.num_subcarriers() == 600);
    CHECK(dl.num_symbols() == 140);
}

TEST_CASE("downlink channel counts")
{
    const auto dl = build_dl_grid(cell());
    CHECK(dl.count(ChannelKind::Crs) == 4000);
    CHECK(channel_occupancy(dl, ChannelKind::Crs) == doctest::Approx(4000.0 / 84000.0));
    CHECK(dl.count(ChannelKind::Pss) == 124);
    CHECK(dl.count(ChannelKind::Sss) == 124);
    CHECK(channel_occupancy(dl, ChannelKind::Pss) == doctest::Approx(124.0 / 84000.0));
    CHECK(dl.count(ChannelKind::Pcfich) == 160);
    // 72 x 4 minus the 12 CRS REs on the first PBCH symbol
    CHECK(dl.count(ChannelKind::Pbch) == 72 * 4 - 12);
}

TEST_CASE("every RE carries exactly one label; occupancies sum to one")
{
    for (int rb : {6, 15, 25, 50, 75, 100}) {
        for (int id : {0, 1, 5, 77, 503}) {
            const auto dl = build_dl_grid(cell(id, rb));
            std::size_t total = 0;
            double occ = 0.0;
            for (auto kind : kDownlinkChannels) {
                total += dl.count(kind);
                occ += channel_occupancy(dl, kind);
            }
            CHECK(total == dl.size());
            CHECK(occ == doctest::Approx(1.0).epsilon(1e-12));
            const auto ul = build_ul_grid(cell(id, rb));
            CHECK(ul.count(ChannelKind::Pucch) + ul.count(ChannelKind::Pusch) == ul.size());
        }
    }
}

TEST_CASE("CRS lattice follows the cell frequency shift")
{
    for (int id : {0, 1, 2, 3, 4, 5, 6, 11, 250, 503}) {
        const auto c = cell(id);
        const auto dl = build_dl_grid(c);
        CHECK(dl.count(ChannelKind::Crs) == 4000);
        const int v = id % 6;
        for (int s = 0; s < kSymbolsPerFrame; ++s) {
            const int l = symbol_in_slot(s);
            for (int k = 0; k < dl.num_subcarriers(); ++k) {
                const bool expect = (l == 0 && k % 6 == v) || (l == 4 && k % 6 == (v + 3) % 6);
                REQUIRE((dl.label({k, s}) == ChannelKind::Crs) == expect);
                REQUIRE(is_crs(c, k, s) == expect);
            }
        }
    }
}

TEST_CASE("PSS and SSS sit in the central 72 subcarriers of slots 0 and 10")
{
    const auto c = cell(17);
    const auto dl = build_dl_grid(c);
    const int lo = c.central_start();
    for (int s = 0; s < kSymbolsPerFrame; ++s) {
        for (int k = 0; k < dl.num_subcarriers(); ++k) {
            const auto label = dl.label({k, s});
            if (label != ChannelKind::Pss && label != ChannelKind::Sss)
                continue;
            CHECK(k >= lo + 5);
            CHECK(k < lo + 67);
            if (label == ChannelKind::Pss)
                CHECK((s == 6 || s == 76));
            else
                CHECK((s == 5 || s == 75));
        }
    }
    // guards around the sequence are data REs
    CHECK(dl.label({lo, 6}) == ChannelKind::Pdsch);
    CHECK(dl.label({lo + 71, 5}) == ChannelKind::Pdsch);
}

TEST_CASE("control region spans cfi symbols")
{
    for (int cfi : {1, 2, 3}) {
        const auto dl = build_dl_grid(cell(3, 50, cfi));
        for (int sf = 0; sf < 10; ++sf) {
            for (int l = 0; l < kSymbolsPerSubframe; ++l) {
                const int s = sf * kSymbolsPerSubframe + l;
                int pdcch = 0;
                for (int k = 0; k < 600; ++k)
                    pdcch += dl.label({k, s}) == ChannelKind::Pdcch;
                if (l >= cfi)
                    CHECK(pdcch == 0);
                else
                    CHECK(pdcch > 0);
            }
        }
    }
}

TEST_CASE("PCFICH: four groups of four non-CRS REs on symbol 0")
{
    for (int id : {0, 5, 13, 503}) {
        const auto c = cell(id);
        const auto sc = pcfich_subcarriers(c);
        REQUIRE(sc.size() == 16);
        CHECK(std::set<int>(sc.begin(), sc.end()).size() == 16);
        const auto dl = build_dl_grid(c);
        for (int sf = 0; sf < 10; ++sf)
            for (int k : sc)
                CHECK(dl.label({k, sf * kSymbolsPerSubframe}) == ChannelKind::Pcfich);
    }
}

TEST_CASE("uplink split: PUCCH on the band edges")
{
    const auto ul = build_ul_grid(cell());
    CHECK(channel_occupancy(ul, ChannelKind::Pucch) == 0.25);
    CHECK(channel_occupancy(ul, ChannelKind::Pusch) == 0.75);
    CHECK(ul.label({0, 0}) == ChannelKind::Pucch);
    CHECK(ul.label({74, 9}) == ChannelKind::Pucch);
    CHECK(ul.label({75, 9}) == ChannelKind::Pusch);
    CHECK(ul.label({524, 9}) == ChannelKind::Pusch);
    CHECK(ul.label({525, 9}) == ChannelKind::Pucch);
    auto c = cell();
    c.pucch_fraction = 0.1;
    CHECK(channel_occupancy(build_ul_grid(c), ChannelKind::Pucch) == doctest::Approx(0.1));
}

TEST_CASE("occupancy rejects a channel from the other direction")
{
    const auto dl = build_dl_grid(cell());
    const auto ul = build_ul_grid(cell());
    CHECK_THROWS_AS(channel_occupancy(dl, ChannelKind::Pucch), std::invalid_argument);
    CHECK_THROWS_AS(channel_occupancy(ul, ChannelKind::Crs), std::invalid_argument);
}

TEST_CASE("uniform unit power")
{
    const auto dl = build_dl_grid(cell());
    for (double p : dl.power())
        REQUIRE(p == 1.0);
    CHECK(dl.total_energy() == 84000.0);
}

TEST_CASE("grid construction is deterministic and serializes byte-identically")
{
    const auto a = build_dl_grid(cell(42));
    const auto b = build_dl_grid(cell(42));
    CHECK(a == b);
    CHECK(grid_to_json(a) == grid_to_json(b));
    CHECK(grid_to_json(a) != grid_to_json(build_dl_grid(cell(43))));
}

TEST_CASE("label JSON round-trips")
{
    for (const auto& g : {build_dl_grid(cell(9)), build_ul_grid(cell(9))}) {
        const auto labels = labels_from_json(grid_to_json(g));
        CHECK(std::equal(labels.begin(), labels.end(), g.labels().begin(), g.labels().end()));
    }
}

TEST_CASE("RE indexing")
{
    const auto dl = build_dl_grid(cell());
    CHECK(dl.flat_index({3, 2}) == 2 * 600 + 3);
    CHECK(dl.re_at(1203) == ReIndex{3, 2});
    CHECK_THROWS_AS(dl.flat_index({600, 0}), std::out_of_range);
    CHECK_THROWS_AS(dl.flat_index({0, 140}), std::out_of_range);
    CHECK_FALSE(dl.contains({-1, 0}));
}

TEST_CASE("channel names round-trip")
{
    for (auto k : kDownlinkChannels)
        CHECK(channel_from_string(to_string(k)) == k);
    for (auto k : kUplinkChannels)
        CHECK(channel_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(channel_from_string("PHICH"), std::invalid_argument);
}
