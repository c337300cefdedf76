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

#include <immintrin.h>

#include <cmath>

// Compiled with -mavx2 and without FMA contraction so the per-element
// arithmetic matches the scalar reference bit for bit (reductions excepted).

namespace ltelab::simd::avx2 {

namespace {

double horizontal_sum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(pair, pair);
    return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out)
{
    const std::size_t n = signal.size();
    const __m256d vnoise = _mm256_set1_pd(noise);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(signal.data() + i);
        const __m256d x = _mm256_loadu_pd(interference.data() + i);
        _mm256_storeu_pd(out.data() + i, _mm256_div_pd(s, _mm256_add_pd(vnoise, x)));
    }
    for (; i < n; ++i)
        out[i] = signal[i] / (noise + interference[i]);
}

void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out)
{
    const std::size_t dim = query.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t f = 0; f < dim; ++f) {
            const __m256d q = _mm256_set1_pd(query[f]);
            const __m256d d = _mm256_sub_pd(q, _mm256_loadu_pd(features.data() + f * n + i));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
        }
        _mm256_storeu_pd(out.data() + i, acc);
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
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t f = 0; f < dim; ++f) {
            const __m256d q = _mm256_set1_pd(query[f]);
            const __m256d d = _mm256_sub_pd(q, _mm256_loadu_pd(features.data() + f * n + i));
            acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign_mask, d));
        }
        _mm256_storeu_pd(out.data() + i, acc);
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
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= floats; i += 8) {
        const __m256 v = _mm256_loadu_ps(p + i);
        const __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(v));
        const __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1));
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(lo, lo));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(hi, hi));
    }
    double acc = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < floats; ++i) {
        const double x = p[i];
        acc += x * x;
    }
    return acc;
}

double sum(std::span<const double> values)
{
    const std::size_t n = values.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(values.data() + i));
    double total = horizontal_sum(acc);
    for (; i < n; ++i)
        total += values[i];
    return total;
}

}  // namespace ltelab::simd::avx2
