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

#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <stdexcept>

namespace ltelab::detail {

namespace {

std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

}  // namespace

Dft::Dft(int size, Sign sign) : size_(size)
{
    if (size <= 0)
        throw std::invalid_argument("DFT size must be positive");
    std::lock_guard lock(planner_mutex());
    in_ = fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(size));
    out_ = fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(size));
    if (in_ == nullptr || out_ == nullptr) {
        fftw_free(in_);
        fftw_free(out_);
        throw std::bad_alloc();
    }
    plan_ = fftw_plan_dft_1d(size, static_cast<fftw_complex*>(in_),
                             static_cast<fftw_complex*>(out_),
                             sign == Sign::Forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    for (int i = 0; i < size; ++i)
        in()[static_cast<std::size_t>(i)] = 0.0;
}

Dft::~Dft()
{
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    fftw_free(in_);
    fftw_free(out_);
}

std::span<std::complex<double>> Dft::in()
{
    return {static_cast<std::complex<double>*>(in_), static_cast<std::size_t>(size_)};
}

std::span<const std::complex<double>> Dft::out() const
{
    return {static_cast<const std::complex<double>*>(out_), static_cast<std::size_t>(size_)};
}

void Dft::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

}  // namespace ltelab::detail
