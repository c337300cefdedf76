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

// Data-parallel inner loops used by the link model, the k-NN detector and
// the IQ synthesizer. Every kernel has a scalar reference implementation;
// AVX2 (x86-64) and NEON (aarch64) variants are selected at runtime and are
// equivalence-tested against the scalar path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace ltelab::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend backend);

/// True when the variant was compiled in and the running CPU supports it.
bool backend_supported(Backend backend);

/// Best supported backend on this machine.
Backend detect_backend();

/// Backend currently used by the dispatching entry points below.
Backend active_backend();

/// Forces a backend (tests use this to pin the scalar path). Throws
/// std::invalid_argument if the backend is not supported here.
void set_backend(Backend backend);

/// RAII guard restoring the previous backend on scope exit.
class ScopedBackend {
public:
    explicit ScopedBackend(Backend backend);
    ~ScopedBackend();
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend previous_;
};

// out[i] = signal[i] / (noise + interference[i])
void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out);

// out[i] = sum_f (query[f] - features[f * n + i])^2 over a feature-major
// (structure-of-arrays) matrix holding n samples.
void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out);

// out[i] = sum_f |query[f] - features[f * n + i]|
void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out);

// sum |z|^2, accumulated in double precision
double energy(std::span<const std::complex<float>> samples);

double sum(std::span<const double> values);

// Per-backend entry points with identical contracts.
namespace scalar {
void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out);
void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out);
void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out);
double energy(std::span<const std::complex<float>> samples);
double sum(std::span<const double> values);
}  // namespace scalar

namespace avx2 {
void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out);
void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out);
void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out);
double energy(std::span<const std::complex<float>> samples);
double sum(std::span<const double> values);
}  // namespace avx2

namespace neon {
void sinr(std::span<const double> signal, std::span<const double> interference,
          double noise, std::span<double> out);
void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out);
void manhattan(std::span<const double> query, std::span<const double> features,
               std::size_t n, std::span<double> out);
double energy(std::span<const std::complex<float>> samples);
double sum(std::span<const double> values);
}  // namespace neon

}  // namespace ltelab::simd
