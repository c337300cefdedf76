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

#include "ltelab/ofdm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "json.hpp"
#include "ltelab/sequences.hpp"
#include "ltelab/simd/kernels.hpp"

namespace ltelab {

namespace {

constexpr double kSubcarrierSpacing = 15e3;

std::complex<double> qpsk(std::uint8_t b0, std::uint8_t b1)
{
    const double a = std::numbers::sqrt2 / 2.0;
    return {a * (1.0 - 2.0 * b0), a * (1.0 - 2.0 * b1)};
}

std::uint32_t payload_seed(std::uint32_t base, int symbol)
{
    // Mixed into 31 bits; the Gold generator ignores bit 31.
    std::uint32_t x = base * 0x9E3779B1u ^ static_cast<std::uint32_t>(symbol + 1) * 0x85EBCA6Bu;
    x ^= x >> 15;
    return x & 0x7fffffffu;
}

}  // namespace

std::int64_t OfdmNumerology::symbol_start(int symbol) const
{
    const int slot = slot_of(symbol);
    const int l = symbol_in_slot(symbol);
    std::int64_t start = slot * samples_per_slot();
    if (l > 0)
        start += cp_first + fft_size + static_cast<std::int64_t>(l - 1) * (cp_other + fft_size);
    return start;
}

double default_sample_rate(int bandwidth_rb)
{
    switch (bandwidth_rb) {
    case 6:
        return 1.92e6;
    case 15:
        return 3.84e6;
    case 25:
        return 7.68e6;
    case 50:
        return 15.36e6;
    case 75:
        return 23.04e6;
    case 100:
        return 30.72e6;
    default:
        throw std::invalid_argument("no default sample rate for " + std::to_string(bandwidth_rb) +
                                    " RB");
    }
}

OfdmNumerology numerology_for(int bandwidth_rb, double sample_rate)
{
    if (sample_rate == 0.0)
        sample_rate = default_sample_rate(bandwidth_rb);
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
        throw std::invalid_argument("sample rate must be positive");
    const double bins = sample_rate / kSubcarrierSpacing;
    const auto fft = std::llround(bins);
    if (std::fabs(bins - static_cast<double>(fft)) > 1e-9 * bins || fft % 128 != 0)
        throw std::invalid_argument("sample rate " + std::to_string(sample_rate) +
                                    " Hz is not a multiple of 1.92 Msps");
    if (fft <= static_cast<long long>(bandwidth_rb) * kSubcarriersPerRb)
        throw std::invalid_argument("sample rate " + std::to_string(sample_rate) +
                                    " Hz is too low for " + std::to_string(bandwidth_rb) + " RB");
    OfdmNumerology n;
    n.sample_rate = sample_rate;
    n.fft_size = static_cast<int>(fft);
    n.cp_first = static_cast<int>(160 * fft / 2048);
    n.cp_other = static_cast<int>(144 * fft / 2048);
    return n;
}

int subcarrier_to_bin(int subcarrier, int num_subcarriers, int fft_size)
{
    const int half = num_subcarriers / 2;
    return subcarrier < half ? fft_size - half + subcarrier : subcarrier - half + 1;
}

FrequencyFrame FrequencyFrame::zeros(int num_subcarriers)
{
    FrequencyFrame f;
    f.num_subcarriers = num_subcarriers;
    f.values.assign(static_cast<std::size_t>(num_subcarriers) * kSymbolsPerFrame, 0.0);
    return f;
}

double FrequencyFrame::energy() const
{
    double acc = 0.0;
    for (const auto& v : values)
        acc += std::norm(v);
    return acc;
}

FrequencyFrame modulate_grid(const ResourceGrid& grid)
{
    const auto& cfg = grid.config();
    const int n_sc = grid.num_subcarriers();
    auto frame = FrequencyFrame::zeros(n_sc);
    const int sync_lo = cfg.central_start() + (kCentralSubcarriers - kSyncSequenceLength) / 2;
    const auto pss = pss_sequence(cfg.n_id_2());

    for (int s = 0; s < kSymbolsPerFrame; ++s) {
        const auto bits = gold_sequence(payload_seed(static_cast<std::uint32_t>(cfg.cell_id), s),
                                        2 * static_cast<std::size_t>(n_sc));
        std::vector<std::complex<double>> crs;
        std::vector<int> sss;
        if (grid.direction() == Direction::Downlink) {
            const int l = symbol_in_slot(s);
            if (l == 0 || l == 4)
                crs = crs_symbols(cfg.cell_id, slot_of(s), l, cfg.bandwidth_rb);
            if (s == 5 || s == 75)
                sss = sss_sequence(cfg.n_id_1(), cfg.n_id_2(), subframe_of(s));
        }
        for (int k = 0; k < n_sc; ++k) {
            std::complex<double> v;
            switch (grid.label({k, s})) {
            case ChannelKind::Pss:
                v = pss[static_cast<std::size_t>(k - sync_lo)];
                break;
            case ChannelKind::Sss:
                v = sss[static_cast<std::size_t>(k - sync_lo)];
                break;
            case ChannelKind::Crs:
                v = crs[static_cast<std::size_t>(k / 6)];
                break;
            default:
                v = qpsk(bits[2 * static_cast<std::size_t>(k)],
                         bits[2 * static_cast<std::size_t>(k) + 1]);
                break;
            }
            frame.at(k, s) = v * std::sqrt(grid.power({k, s}));
        }
    }
    return frame;
}

FrequencyFrame interference_frame(const Footprint& footprint, double isr_re_db,
                                  std::uint32_t seed)
{
    const int n_sc = footprint.num_subcarriers();
    auto frame = FrequencyFrame::zeros(n_sc);
    const double amplitude = std::sqrt(db_to_linear(isr_re_db));
    int current_symbol = -1;
    std::vector<std::uint8_t> bits;
    for (auto flat : footprint.indices()) {
        const int k = static_cast<int>(flat % n_sc);
        const int s = static_cast<int>(flat / n_sc);
        if (s != current_symbol) {
            bits = gold_sequence(payload_seed(seed ^ 0x2545F491u, s), 2 * static_cast<std::size_t>(n_sc));
            current_symbol = s;
        }
        frame.at(k, s) = amplitude * qpsk(bits[2 * static_cast<std::size_t>(k)],
                                          bits[2 * static_cast<std::size_t>(k) + 1]);
    }
    return frame;
}

FrequencyFrame combine(const FrequencyFrame& a, const FrequencyFrame& b)
{
    if (a.num_subcarriers != b.num_subcarriers || a.values.size() != b.values.size())
        throw std::invalid_argument("frames to combine differ in size");
    FrequencyFrame out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += b.values[i];
    return out;
}

std::vector<std::complex<float>> synthesize_iq(const FrequencyFrame& frame, int frames,
                                               const OfdmNumerology& numerology)
{
    if (frames < 1)
        throw std::invalid_argument("frames must be at least 1");
    const int n_sc = frame.num_subcarriers;
    const int n = numerology.fft_size;
    if (n_sc <= 0 || n <= n_sc ||
        frame.values.size() != static_cast<std::size_t>(n_sc) * kSymbolsPerFrame)
        throw std::invalid_argument("numerology does not fit the frequency frame");

    const auto per_frame = numerology.samples_per_frame();
    std::vector<std::complex<float>> out(static_cast<std::size_t>(per_frame * frames));
    detail::Dft idft(n, detail::Dft::Sign::Inverse);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    for (int s = 0; s < kSymbolsPerFrame; ++s) {
        auto in = idft.in();
        std::fill(in.begin(), in.end(), 0.0);
        bool occupied = false;
        for (int k = 0; k < n_sc; ++k) {
            const auto v = frame.at(k, s);
            if (v != 0.0) {
                in[static_cast<std::size_t>(subcarrier_to_bin(k, n_sc, n))] = v;
                occupied = true;
            }
        }
        if (!occupied)
            continue;  // output already zero
        idft.execute();
        const auto body = idft.out();
        const int cp = numerology.cp_length(s);
        auto* dst = out.data() + numerology.symbol_start(s);
        for (int i = 0; i < cp; ++i)
            dst[i] = std::complex<float>(body[static_cast<std::size_t>(n - cp + i)] * scale);
        for (int i = 0; i < n; ++i)
            dst[cp + i] = std::complex<float>(body[static_cast<std::size_t>(i)] * scale);
    }
    for (int f = 1; f < frames; ++f)
        std::copy_n(out.begin(), per_frame, out.begin() + f * per_frame);
    return out;
}

double body_energy(std::span<const std::complex<float>> samples, const OfdmNumerology& numerology)
{
    const auto per_frame = numerology.samples_per_frame();
    if (samples.size() % static_cast<std::size_t>(per_frame) != 0)
        throw std::invalid_argument("sample count is not a whole number of frames");
    double acc = 0.0;
    for (std::size_t base = 0; base < samples.size(); base += static_cast<std::size_t>(per_frame))
        for (int s = 0; s < kSymbolsPerFrame; ++s)
            acc += simd::energy(samples.subspan(base + numerology.body_start(s),
                                                static_cast<std::size_t>(numerology.fft_size)));
    return acc;
}

void write_iq_file(const std::filesystem::path& path, std::span<const std::complex<float>> samples)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(samples.data()),
                 static_cast<std::streamsize>(samples.size_bytes()));
    } else {
        for (const auto& z : samples) {
            for (float part : {z.real(), z.imag()}) {
                auto word = std::bit_cast<std::uint32_t>(part);
                const char bytes[4] = {static_cast<char>(word), static_cast<char>(word >> 8),
                                       static_cast<char>(word >> 16),
                                       static_cast<char>(word >> 24)};
                os.write(bytes, 4);
            }
        }
    }
    if (!os)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<std::complex<float>> read_iq_file(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    std::vector<char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (bytes.size() % 8 != 0)
        throw std::runtime_error("'" + path.string() + "' is not a whole number of cf32 samples");
    std::vector<std::complex<float>> out(bytes.size() / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        float parts[2];
        for (int p = 0; p < 2; ++p) {
            const auto* b = reinterpret_cast<const unsigned char*>(bytes.data() + 8 * i + 4 * p);
            const std::uint32_t word = b[0] | (b[1] << 8) | (b[2] << 16) |
                                       (static_cast<std::uint32_t>(b[3]) << 24);
            parts[p] = std::bit_cast<float>(word);
        }
        out[i] = {parts[0], parts[1]};
    }
    return out;
}

std::string sidecar_to_json(const IqSidecar& sidecar)
{
    nlohmann::ordered_json doc;
    doc["format"] = "cf32_le";
    doc["sample_rate"] = sidecar.sample_rate;
    doc["frames"] = sidecar.frames;
    doc["scenario"] = sidecar.scenario;
    doc["isr_re_db"] = sidecar.isr_re_db;
    doc["bandwidth_rb"] = sidecar.bandwidth_rb;
    doc["fft_size"] = sidecar.fft_size;
    return doc.dump(2);
}

IqSidecar sidecar_from_json(std::string_view text)
{
    const auto doc = nlohmann::json::parse(text);
    if (doc.value("format", "") != "cf32_le")
        throw std::invalid_argument("unsupported IQ sample format");
    IqSidecar s;
    s.sample_rate = doc.at("sample_rate").get<double>();
    s.frames = doc.at("frames").get<int>();
    s.scenario = doc.at("scenario").get<std::string>();
    s.isr_re_db = doc.at("isr_re_db").get<double>();
    s.bandwidth_rb = doc.value("bandwidth_rb", 0);
    s.fft_size = doc.value("fft_size", 0);
    return s;
}

}  // namespace ltelab
