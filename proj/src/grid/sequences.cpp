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

#include "ltelab/sequences.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ltelab {

namespace {

constexpr std::array<int, 3> kPssRoots{25, 29, 34};
constexpr int kGoldFastForward = 1600;
constexpr int kMaxDownlinkRb = 110;

// Length-31 m-sequence from x(i+5) = x(i+tap) + x(i) mod 2, x(0..4) = 0 0 0 0 1,
// mapped to +1/-1.
std::array<int, 31> antipodal_m_sequence(int tap)
{
    std::array<int, 36> x{};
    x[4] = 1;
    for (int i = 0; i + 5 < 36; ++i)
        x[i + 5] = (x[i + tap] + x[i]) % 2;
    std::array<int, 31> out{};
    for (int i = 0; i < 31; ++i)
        out[i] = 1 - 2 * x[i];
    return out;
}

}  // namespace

int pss_root(int n_id_2)
{
    if (n_id_2 < 0 || n_id_2 > 2)
        throw std::invalid_argument("n_id_2 must be 0, 1 or 2 (got " + std::to_string(n_id_2) +
                                    ")");
    return kPssRoots[static_cast<std::size_t>(n_id_2)];
}

std::vector<std::complex<double>> pss_sequence(int n_id_2)
{
    const double u = pss_root(n_id_2);
    std::vector<std::complex<double>> d(62);
    for (int n = 0; n < 62; ++n) {
        // Punctured DC: the second half continues from n + 1.
        const double m = n < 31 ? n : n + 1;
        const double phase = -std::numbers::pi * u * m * (m + 1.0) / 63.0;
        d[n] = std::polar(1.0, phase);
    }
    return d;
}

std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, std::size_t length)
{
    if (length == 0)
        throw std::invalid_argument("gold_sequence length must be at least 1");
    // Bit i of each register holds x(n + i).
    std::uint32_t x1 = 1u;
    std::uint32_t x2 = c_init & 0x7fffffffu;
    auto step = [&]() {
        const std::uint32_t f1 = ((x1 >> 3) ^ x1) & 1u;
        const std::uint32_t f2 = ((x2 >> 3) ^ (x2 >> 2) ^ (x2 >> 1) ^ x2) & 1u;
        x1 = (x1 >> 1) | (f1 << 30);
        x2 = (x2 >> 1) | (f2 << 30);
    };
    for (int n = 0; n < kGoldFastForward; ++n)
        step();
    std::vector<std::uint8_t> c(length);
    for (std::size_t n = 0; n < length; ++n) {
        c[n] = static_cast<std::uint8_t>((x1 ^ x2) & 1u);
        step();
    }
    return c;
}

std::vector<int> sss_sequence(int n_id_1, int n_id_2, int subframe)
{
    if (n_id_1 < 0 || n_id_1 > 167)
        throw std::invalid_argument("n_id_1 must be in [0, 167] (got " + std::to_string(n_id_1) +
                                    ")");
    if (n_id_2 < 0 || n_id_2 > 2)
        throw std::invalid_argument("n_id_2 must be 0, 1 or 2 (got " + std::to_string(n_id_2) +
                                    ")");
    if (subframe != 0 && subframe != 5)
        throw std::invalid_argument("SSS is carried in subframes 0 and 5 only (got " +
                                    std::to_string(subframe) + ")");

    const int q_prime = n_id_1 / 30;
    const int q = (n_id_1 + q_prime * (q_prime + 1) / 2) / 30;
    const int m_prime = n_id_1 + q * (q + 1) / 2;
    const int m0 = m_prime % 31;
    const int m1 = (m0 + m_prime / 31 + 1) % 31;

    static const auto s_tilde = antipodal_m_sequence(2);
    static const auto c_tilde = antipodal_m_sequence(3);

    const int first_shift = subframe == 0 ? m0 : m1;
    const int second_shift = subframe == 0 ? m1 : m0;
    std::vector<int> d(62);
    for (int n = 0; n < 31; ++n) {
        const int c0 = c_tilde[(n + n_id_2) % 31];
        const int c1 = c_tilde[(n + n_id_2 + 3) % 31];
        d[2 * n] = s_tilde[(n + first_shift) % 31] * c0;
        d[2 * n + 1] = s_tilde[(n + second_shift) % 31] * c1;
    }
    return d;
}

std::vector<std::complex<double>> crs_symbols(int cell_id, int slot, int symbol_in_slot, int n_rb)
{
    const std::uint32_t c_init =
        (1u << 10) * static_cast<std::uint32_t>(7 * (slot + 1) + symbol_in_slot + 1) *
            static_cast<std::uint32_t>(2 * cell_id + 1) +
        static_cast<std::uint32_t>(2 * cell_id) + 1u;
    const auto c = gold_sequence(c_init, 4 * kMaxDownlinkRb);
    const double a = std::numbers::sqrt2 / 2.0;
    std::vector<std::complex<double>> r(static_cast<std::size_t>(2 * n_rb));
    for (int m = 0; m < 2 * n_rb; ++m) {
        const int mp = m + kMaxDownlinkRb - n_rb;
        r[m] = {a * (1.0 - 2.0 * c[2 * mp]), a * (1.0 - 2.0 * c[2 * mp + 1])};
    }
    return r;
}

}  // namespace ltelab
