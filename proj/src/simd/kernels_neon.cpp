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

#include <arm_neon.h>

#include <cmath>

namespace ltelab::simd::neon {

void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out)
{
    const std::size_t n = signal.size();
    const float64x2_t vnoise = vdupq_n_f64(noise);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t s = vld1q_f64(signal.data() + i);
        const float64x2_t x = vld1q_f64(interference.data() + i);
        vst1q_f64(out.data() + i, vdivq_f64(s, vaddq_f64(vnoise, x)));
    }
    for (; i < n; ++i)
        out[i] = signal[i] / (noise + interference[i]);
}

void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out)
{
    const std::size_t dim = query.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t f = 0; f < dim; ++f) {
            const float64x2_t d =
                vsubq_f64(vdupq_n_f64(query[f]), vld1q_f64(features.data() + f * n + i));
            acc = vaddq_f64(acc, vmulq_f64(d, d));
        }
        vst1q_f64(out.data() + i, acc);
    }
    for (; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t f = 0; f < dim; ++f) {
            const double d = query[f] - features[f * n + i];
            acc = acc + d * d;
        }
        out[i] = acc;
    }
}

void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out)
{
    const std::size_t dim = query.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t f = 0; f < dim; ++f) {
            const float64x2_t d =
                vsubq_f64(vdupq_n_f64(query[f]), vld1q_f64(features.data() + f * n + i));
            acc = vaddq_f64(acc, vabsq_f64(d));
        }
        vst1q_f64(out.data() + i, acc);
    }
    for (; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t f = 0; f < dim; ++f)
            acc = acc + std::fabs(query[f] - features[f * n + i]);
        out[i] = acc;
    }
}

double energy(std::span<const std::complex<float>> samples)
{
    const float* p = reinterpret_cast<const float*>(samples.data());
    const std::size_t floats = samples.size() * 2;
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= floats; i += 4) {
        const float32x4_t v = vld1q_f32(p + i);
        const float64x2_t lo = vcvt_f64_f32(vget_low_f32(v));
        const float64x2_t hi = vcvt_high_f64_f32(v);
        acc0 = vaddq_f64(acc0, vmulq_f64(lo, lo));
        acc1 = vaddq_f64(acc1, vmulq_f64(hi, hi));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < floats; ++i) {
        const double x = p[i];
        acc += x * x;
    }
    return acc;
}

double sum(std::span<const double> values)
{
    const std::size_t n = values.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vaddq_f64(acc, vld1q_f64(values.data() + i));
    double total = vaddvq_f64(acc);
    for (; i < n; ++i)
        total += values[i];
    return total;
}

}  // namespace ltelab::simd::neon
