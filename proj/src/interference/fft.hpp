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
#include <span>

namespace ltelab::detail {

/// Owning wrapper around an FFTW plan with its own aligned buffers. Plan
/// creation and destruction are serialized; execution is thread-safe.
class Dft {
public:
    enum class Sign { Forward, Inverse };

    Dft(int size, Sign sign);
    ~Dft();
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    int size() const { return size_; }
    std::span<std::complex<double>> in();
    std::span<const std::complex<double>> out() const;

    /// Unnormalized transform of in() into out().
    void execute();

private:
    int size_;
    void* in_;
    void* out_;
    void* plan_;
};

}  // namespace ltelab::detail
