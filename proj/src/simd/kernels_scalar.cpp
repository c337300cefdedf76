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

#include "ltelab/simd/kernels.hpp"

#include <cmath>

namespace ltelab::simd::scalar {

void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out)
{
    for (std::size_t i = 0; i < signal.size(); ++i)
        out[i] = signal[i] / (noise + interference[i]);
}

void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out)
{
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t f = 0; f < query.size(); ++f) {
            const double d = query[f] - features[f * n + i];
            acc = acc + d * d;
        }
        out[i] = acc;
    }
}

void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out)
{
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t f = 0; f < query.size(); ++f)
            acc = acc + std::fabs(query[f] - features[f * n + i]);
        out[i] = acc;
    }
}

double energy(std::span<const std::complex<float>> samples)
{
    double acc = 0.0;
    for (const auto& z : samples) {
        const double re = z.real();
        const double im = z.imag();
        acc += re * re + im * im;
    }
    return acc;
}

double sum(std::span<const double> values)
{
    double acc = 0.0;
    for (double v : values)
        acc += v;
    return acc;
}

}  // namespace ltelab::simd::scalar
