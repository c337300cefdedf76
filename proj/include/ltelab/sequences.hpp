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
#include <vector>

namespace ltelab {

/// Zadoff-Chu PSS for N_ID^(2) in {0,1,2} (roots 25, 29, 34), 62 values
/// with the DC element punctured.
std::vector<std::complex<double>> pss_sequence(int n_id_2);

int pss_root(int n_id_2);

/// Length-31 Gold sequence c(n) with the 1600-sample fast-forward.
std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, std::size_t length);

/// Secondary sync sequence: two cyclic shifts of a length-31 m-sequence
/// (shifts from N_ID^(1), swapped in subframe 5) interleaved and scrambled
/// by an N_ID^(2)-dependent m-sequence. Values are +1/-1.
std::vector<int> sss_sequence(int n_id_1, int n_id_2, int subframe);

/// Port-0 CRS QPSK symbols for one OFDM symbol, 2 * n_rb values.
std::vector<std::complex<double>> crs_symbols(int cell_id, int slot, int symbol_in_slot,
                                              int n_rb);

}  // namespace ltelab
