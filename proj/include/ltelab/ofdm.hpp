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

#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ltelab/grid.hpp"
#include "ltelab/interference.hpp"

namespace ltelab {

/// Sampling layout of one normal-CP LTE frame at a given rate.
struct OfdmNumerology {
    double sample_rate = 15.36e6;
    int fft_size = 1024;
    int cp_first = 80;  // symbol 0 of each slot
    int cp_other = 72;

    int cp_length(int symbol) const
    {
        return symbol_in_slot(symbol) == 0 ? cp_first : cp_other;
    }
    int symbol_length(int symbol) const { return cp_length(symbol) + fft_size; }
    std::int64_t samples_per_slot() const
    {
        return cp_first + 6 * cp_other + kSymbolsPerSlot * static_cast<std::int64_t>(fft_size);
    }
    std::int64_t samples_per_frame() const { return kSlotsPerFrame * samples_per_slot(); }
    /// Frame-relative index of the first CP sample of `symbol`.
    std::int64_t symbol_start(int symbol) const;
    /// Frame-relative index of the first sample after the CP.
    std::int64_t body_start(int symbol) const { return symbol_start(symbol) + cp_length(symbol); }
    double mean_symbol_length() const
    {
        return static_cast<double>(samples_per_slot()) / kSymbolsPerSlot;
    }
};

double default_sample_rate(int bandwidth_rb);

/// Numerology for a bandwidth at `sample_rate` (0 selects the default).
/// The rate must be a multiple of 128 x 15 kHz giving a transform wider than
/// the occupied band.
OfdmNumerology numerology_for(int bandwidth_rb, double sample_rate = 0.0);

/// Grid subcarrier k -> transform bin, DC left empty.
int subcarrier_to_bin(int subcarrier, int num_subcarriers, int fft_size);

/// Complex value on every RE of one frame, symbol-major like ResourceGrid.
struct FrequencyFrame {
    int num_subcarriers = 0;
    std::vector<std::complex<double>> values;

    static FrequencyFrame zeros(int num_subcarriers);
    std::complex<double>& at(int subcarrier, int symbol)
    {
        return values[static_cast<std::size_t>(symbol) * num_subcarriers + subcarrier];
    }
    const std::complex<double>& at(int subcarrier, int symbol) const
    {
        return values[static_cast<std::size_t>(symbol) * num_subcarriers + subcarrier];
    }
    double energy() const;
};

/// Unit-power symbols on every RE: PSS/SSS/CRS sequences where labeled,
/// pseudo-random QPSK elsewhere. |value|^2 equals the grid's RE power.
FrequencyFrame modulate_grid(const ResourceGrid& grid);

/// Interferer payload: QPSK with |value|^2 = 10^(isr/10) on targeted REs.
FrequencyFrame interference_frame(const Footprint& footprint, double isr_re_db,
                                  std::uint32_t seed);

/// Element-wise sum of two frames of the same size.
FrequencyFrame combine(const FrequencyFrame& a, const FrequencyFrame& b);

/// Per-symbol inverse DFT (unitary scaling) with cyclic prefix, repeated
/// for `frames` frames. Output length = frames x samples_per_frame.
std::vector<std::complex<float>> synthesize_iq(const FrequencyFrame& frame, int frames,
                                               const OfdmNumerology& numerology);

/// Sum of |x|^2 over the post-CP part of every symbol.
double body_energy(std::span<const std::complex<float>> samples,
                   const OfdmNumerology& numerology);

// Raw interleaved float32 I/Q, little-endian, no header.
void write_iq_file(const std::filesystem::path& path,
                   std::span<const std::complex<float>> samples);
std::vector<std::complex<float>> read_iq_file(const std::filesystem::path& path);

struct IqSidecar {
    double sample_rate = 0.0;
    int frames = 0;
    std::string scenario;
    double isr_re_db = 0.0;
    int bandwidth_rb = 0;
    int fft_size = 0;

    bool operator==(const IqSidecar&) const = default;
};

std::string sidecar_to_json(const IqSidecar& sidecar);
IqSidecar sidecar_from_json(std::string_view text);

}  // namespace ltelab
