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
#include <span>

#include "ltelab/interference.hpp"
#include "ltelab/ofdm.hpp"

namespace ltelab {

/// What an interferer learned about the victim cell from its downlink.
struct SyncState {
    int detected_n_id_2 = 0;
    int detected_cell_id = 0;
    /// Sample index of the detected frame start in the interferer's buffer.
    std::int64_t frame_timing = 0;
    bool locked = false;

    /// Perfect acquisition of `cell` with the frame starting at sample 0.
    static SyncState perfect(const CellConfig& cell);
};

struct SyncOptions {
    /// Minimum normalized PSS correlation peak, in [0, 1].
    double pss_threshold = 0.5;
    /// Minimum normalized SSS match, in [0, 1].
    double sss_threshold = 0.5;
};

/// PSS correlation over the stream followed by SSS matching on the symbol
/// before the peak. Needs at least one frame plus one symbol of samples.
SyncState acquire_sync(std::span<const std::complex<float>> samples, int bandwidth_rb,
                       const OfdmNumerology& numerology, const SyncOptions& options = {});

/// Circular distance (mod one frame) between a detected and a true boundary.
std::int64_t timing_error(const SyncState& sync, std::int64_t true_frame_start,
                          const OfdmNumerology& numerology);

struct AlignedFootprint {
    Footprint footprint;
    int symbol_shift = 0;
    std::int64_t misalignment_samples = 0;
};

/// Moves a synchronous footprint onto the victim frame as seen through
/// `sync`, then delays it by the scenario's timing offset. Whole-symbol
/// granularity: the sample misalignment is rounded to the nearest symbol.
/// Throws std::runtime_error when the interferer is not locked.
AlignedFootprint sync_align(const InterferenceScenario& scenario, const SyncState& sync,
                            const Footprint& footprint, const OfdmNumerology& numerology,
                            std::int64_t victim_frame_start = 0);

}  // namespace ltelab
