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

#include "ltelab/sync.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fft.hpp"
#include "ltelab/sequences.hpp"

namespace ltelab {

namespace {

std::int64_t wrap(std::int64_t value, std::int64_t period)
{
    value %= period;
    return value < 0 ? value + period : value;
}

// Time-domain PSS body (no CP) at the unitary scaling used by synthesize_iq.
std::vector<std::complex<double>> pss_reference(int n_id_2, int n_sc, int sync_lo, int fft_size)
{
    detail::Dft idft(fft_size, detail::Dft::Sign::Inverse);
    const auto d = pss_sequence(n_id_2);
    for (int n = 0; n < kSyncSequenceLength; ++n)
        idft.in()[static_cast<std::size_t>(subcarrier_to_bin(sync_lo + n, n_sc, fft_size))] = d[n];
    idft.execute();
    const double scale = 1.0 / std::sqrt(static_cast<double>(fft_size));
    std::vector<std::complex<double>> p(idft.out().begin(), idft.out().end());
    for (auto& v : p)
        v *= scale;
    return p;
}

}  // namespace

SyncState SyncState::perfect(const CellConfig& cell)
{
    cell.validate();
    return {cell.n_id_2(), cell.cell_id, 0, true};
}

SyncState acquire_sync(std::span<const std::complex<float>> samples, int bandwidth_rb,
                       const OfdmNumerology& numerology, const SyncOptions& options)
{
    CellConfig probe;
    probe.bandwidth_rb = bandwidth_rb;
    probe.validate();
    const int n_sc = probe.num_subcarriers();
    const int n = numerology.fft_size;
    const int sync_lo = probe.central_start() + (kCentralSubcarriers - kSyncSequenceLength) / 2;
    const auto per_frame = numerology.samples_per_frame();
    const auto length = static_cast<std::int64_t>(samples.size());
    if (length < per_frame + 2 * (n + numerology.cp_first))
        throw std::invalid_argument("sync acquisition needs at least one frame plus two symbols");

    std::int64_t m = 1;
    while (m < length + n)
        m <<= 1;
    const auto size = static_cast<int>(m);

    // Received spectrum, band-limited to the 62 PSS subcarriers.
    detail::Dft forward(size, detail::Dft::Sign::Forward);
    for (std::int64_t i = 0; i < length; ++i)
        forward.in()[static_cast<std::size_t>(i)] = samples[static_cast<std::size_t>(i)];
    forward.execute();
    std::vector<std::complex<double>> spectrum(forward.out().begin(), forward.out().end());
    const double bins_per_subcarrier = static_cast<double>(m) / n;
    const double passband = (kSyncSequenceLength / 2 + 0.5) * bins_per_subcarrier;
    for (std::int64_t b = 0; b < m; ++b) {
        const double offset = b < m / 2 ? static_cast<double>(b) : static_cast<double>(b - m);
        if (std::fabs(offset) > passband)
            spectrum[static_cast<std::size_t>(b)] = 0.0;
    }

    detail::Dft inverse(size, detail::Dft::Sign::Inverse);
    std::copy(spectrum.begin(), spectrum.end(), inverse.in().begin());
    inverse.execute();
    std::vector<double> prefix(static_cast<std::size_t>(length) + 1, 0.0);
    for (std::int64_t i = 0; i < length; ++i)
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] +
            std::norm(inverse.out()[static_cast<std::size_t>(i)] / static_cast<double>(m));

    const std::int64_t first_lag = numerology.cp_other + n;  // SSS body must be in range
    const std::int64_t last_lag = length - n;
    double best_metric = -1.0;
    std::int64_t best_lag = 0;
    int best_n_id_2 = 0;
    detail::Dft ref_forward(size, detail::Dft::Sign::Forward);
    for (int n_id_2 = 0; n_id_2 < 3; ++n_id_2) {
        const auto p = pss_reference(n_id_2, n_sc, sync_lo, n);
        double p_energy = 0.0;
        auto ref_in = ref_forward.in();
        std::fill(ref_in.begin(), ref_in.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            ref_in[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
            p_energy += std::norm(p[static_cast<std::size_t>(i)]);
        }
        ref_forward.execute();
        for (std::int64_t b = 0; b < m; ++b)
            inverse.in()[static_cast<std::size_t>(b)] =
                spectrum[static_cast<std::size_t>(b)] *
                std::conj(ref_forward.out()[static_cast<std::size_t>(b)]);
        inverse.execute();
        for (std::int64_t lag = first_lag; lag <= last_lag; ++lag) {
            const double window = prefix[static_cast<std::size_t>(lag + n)] -
                                  prefix[static_cast<std::size_t>(lag)];
            if (window <= 0.0)
                continue;
            const auto r = inverse.out()[static_cast<std::size_t>(lag)] / static_cast<double>(m);
            const double metric = std::norm(r) / (p_energy * window);
            if (metric > best_metric) {
                best_metric = metric;
                best_lag = lag;
                best_n_id_2 = n_id_2;
            }
        }
    }

    // SSS on the symbol before the PSS peak.
    detail::Dft sss_dft(n, detail::Dft::Sign::Forward);
    const std::int64_t sss_body = best_lag - numerology.cp_other - n;
    for (int i = 0; i < n; ++i)
        sss_dft.in()[static_cast<std::size_t>(i)] = samples[static_cast<std::size_t>(sss_body + i)];
    sss_dft.execute();
    std::vector<std::complex<double>> z(kSyncSequenceLength);
    double z_energy = 0.0;
    for (int i = 0; i < kSyncSequenceLength; ++i) {
        z[static_cast<std::size_t>(i)] =
            sss_dft.out()[static_cast<std::size_t>(subcarrier_to_bin(sync_lo + i, n_sc, n))];
        z_energy += std::norm(z[static_cast<std::size_t>(i)]);
    }
    double best_sss = -1.0;
    int best_n_id_1 = 0;
    int best_subframe = 0;
    for (int n_id_1 = 0; n_id_1 < 168; ++n_id_1) {
        for (int subframe : {0, 5}) {
            const auto d = sss_sequence(n_id_1, best_n_id_2, subframe);
            std::complex<double> acc = 0.0;
            for (int i = 0; i < kSyncSequenceLength; ++i)
                acc += z[static_cast<std::size_t>(i)] * static_cast<double>(d[static_cast<std::size_t>(i)]);
            const double metric =
                z_energy > 0.0 ? std::abs(acc) / std::sqrt(z_energy * kSyncSequenceLength) : 0.0;
            if (metric > best_sss) {
                best_sss = metric;
                best_n_id_1 = n_id_1;
                best_subframe = subframe;
            }
        }
    }

    const int pss_symbol = best_subframe == 0 ? 6 : 6 + kSymbolsPerFrame / 2;
    SyncState state;
    state.detected_n_id_2 = best_n_id_2;
    state.detected_cell_id = 3 * best_n_id_1 + best_n_id_2;
    state.frame_timing = wrap(best_lag - numerology.body_start(pss_symbol), per_frame);
    state.locked = best_metric >= options.pss_threshold && best_sss >= options.sss_threshold;
    return state;
}

std::int64_t timing_error(const SyncState& sync, std::int64_t true_frame_start,
                          const OfdmNumerology& numerology)
{
    const auto per_frame = numerology.samples_per_frame();
    auto d = wrap(sync.frame_timing - true_frame_start, per_frame);
    if (d >= per_frame / 2)
        d -= per_frame;
    return d;
}

AlignedFootprint sync_align(const InterferenceScenario& scenario, const SyncState& sync,
                            const Footprint& footprint, const OfdmNumerology& numerology,
                            std::int64_t victim_frame_start)
{
    if (!scenario.synchronous)
        throw std::invalid_argument("scenario '" + std::string(to_string(scenario.kind)) +
                                    "' is asynchronous; frame alignment does not apply");
    if (!sync.locked)
        throw std::runtime_error("interferer has not acquired the cell; refusing to align");
    const auto per_frame = numerology.samples_per_frame();
    auto misalignment = wrap(sync.frame_timing - victim_frame_start + scenario.timing_offset_samples,
                             per_frame);
    if (misalignment >= per_frame / 2)
        misalignment -= per_frame;
    const int shift = static_cast<int>(
        std::llround(static_cast<double>(misalignment) / numerology.mean_symbol_length()));
    return {footprint.shifted_symbols(shift), shift, misalignment};
}

}  // namespace ltelab
