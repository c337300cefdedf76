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

#include <atomic>
#include <stdexcept>
#include <string>

namespace ltelab::simd {

namespace {

struct KernelTable {
    void (*sinr)(std::span<const double>, std::span<const double>, double, std::span<double>);
    void (*squared_euclidean)(std::span<const double>, std::span<const double>, std::size_t,
                              std::span<double>);
    void (*manhattan)(std::span<const double>, std::span<const double>, std::size_t,
                      std::span<double>);
    double (*energy)(std::span<const std::complex<float>>);
    double (*sum)(std::span<const double>);
};

constexpr KernelTable scalar_table{&scalar::sinr, &scalar::squared_euclidean,
                                   &scalar::manhattan, &scalar::energy, &scalar::sum};

#if defined(LTELAB_HAVE_AVX2)
constexpr KernelTable avx2_table{&avx2::sinr, &avx2::squared_euclidean, &avx2::manhattan,
                                 &avx2::energy, &avx2::sum};
#endif

#if defined(LTELAB_HAVE_NEON)
constexpr KernelTable neon_table{&neon::sinr, &neon::squared_euclidean, &neon::manhattan,
                                 &neon::energy, &neon::sum};
#endif

const KernelTable& table_for(Backend backend)
{
    switch (backend) {
#if defined(LTELAB_HAVE_AVX2)
    case Backend::Avx2:
        return avx2_table;
#endif
#if defined(LTELAB_HAVE_NEON)
    case Backend::Neon:
        return neon_table;
#endif
    default:
        return scalar_table;
    }
}

std::atomic<Backend>& current()
{
    static std::atomic<Backend> backend{detect_backend()};
    return backend;
}

const KernelTable& active() { return table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view backend_name(Backend backend)
{
    switch (backend) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    case Backend::Neon:
        return "neon";
    }
    return "unknown";
}

bool backend_supported(Backend backend)
{
    switch (backend) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(LTELAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Backend::Neon:
#if defined(LTELAB_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Backend detect_backend()
{
    if (backend_supported(Backend::Avx2))
        return Backend::Avx2;
    if (backend_supported(Backend::Neon))
        return Backend::Neon;
    return Backend::Scalar;
}

Backend active_backend() { return current().load(); }

void set_backend(Backend backend)
{
    if (!backend_supported(backend))
        throw std::invalid_argument("SIMD backend '" + std::string(backend_name(backend)) +
                                    "' is not available on this machine");
    current().store(backend);
}

ScopedBackend::ScopedBackend(Backend backend) : previous_(active_backend())
{
    set_backend(backend);
}

ScopedBackend::~ScopedBackend() { current().store(previous_); }

void sinr(std::span<const double> signal, std::span<const double> interference, double noise,
          std::span<double> out)
{
    if (interference.size() != signal.size() || out.size() != signal.size())
        throw std::invalid_argument("sinr: span sizes differ");
    active().sinr(signal, interference, noise, out);
}

void squared_euclidean(std::span<const double> query, std::span<const double> features,
                       std::size_t n, std::span<double> out)
{
    if (features.size() != query.size() * n || out.size() != n)
        throw std::invalid_argument("squared_euclidean: feature matrix shape mismatch");
    active().squared_euclidean(query, features, n, out);
}

void manhattan(std::span<const double> query, std::span<const double> features, std::size_t n,
               std::span<double> out)
{
    if (features.size() != query.size() * n || out.size() != n)
        throw std::invalid_argument("manhattan: feature matrix shape mismatch");
    active().manhattan(query, features, n, out);
}

double energy(std::span<const std::complex<float>> samples) { return active().energy(samples); }

double sum(std::span<const double> values) { return active().sum(values); }

}  // namespace ltelab::simd
