// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense inner-loop kernels over packed field scalars.
 *
 * A scalar over a field with tag beta occupies beta consecutive doubles:
 * (re) for R, (re, im) for C and (w, x, y, z) for H. Every kernel has a
 * portable reference version and an AVX2/FMA version; `active()` picks one
 * at first use from the CPU feature bits.
 */

#pragma once

#include <cstddef>

namespace jaws::kernels {

/// out = sum_k a_k * conj(b_k), written as beta doubles.
using DotcFn = void (*)(const double *a, const double *b, std::size_t n,
                        double *out);
/// y_k += c * x_k, with c multiplied from the left.
using AxpyFn = void (*)(const double *c, const double *x, double *y,
                        std::size_t n);
/// out[i + j] += a[i] * b[j]; out must hold na + nb - 1 entries.
using ConvolveFn = void (*)(const double *a, std::size_t na, const double *b,
                            std::size_t nb, double *out);

struct Table {
    const char *name;
    DotcFn dotc[3];
    AxpyFn axpy[3];
    ConvolveFn convolve;
};

/// Slot of a field tag inside the per-field arrays.
constexpr int slot(int beta) { return beta == 1 ? 0 : (beta == 2 ? 1 : 2); }

const Table &scalar();

/// AVX2 table, or nullptr when the CPU lacks AVX2/FMA.
const Table *avx2();

/// Table in use. Setting JAWS_KERNELS=scalar in the environment forces the
/// reference path.
const Table &active();

inline void dotc(int beta, const double *a, const double *b, std::size_t n,
                 double *out) {
    active().dotc[slot(beta)](a, b, n, out);
}

inline void axpy(int beta, const double *c, const double *x, double *y,
                 std::size_t n) {
    active().axpy[slot(beta)](c, x, y, n);
}

inline void convolve(const double *a, std::size_t na, const double *b,
                     std::size_t nb, double *out) {
    active().convolve(a, na, b, nb, out);
}

} // namespace jaws::kernels
