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

// Built with -mavx2 -mfma. Nothing here may run before the dispatcher has
// checked the CPU bits.

#include "jaws/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace jaws::kernels {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void dotc_r(const double *a, const double *b, std::size_t n, double *out) {
    __m256d s0 = _mm256_setzero_pd();
    __m256d s1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), s0);
        s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4),
                             _mm256_loadu_pd(b + k + 4), s1);
    }
    for (; k + 4 <= n; k += 4) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), s0);
    }
    double s = hsum(_mm256_add_pd(s0, s1));
    for (; k < n; ++k) {
        s += a[k] * b[k];
    }
    out[0] = s;
}

// Two complex numbers per register: [re0 im0 re1 im1].
void dotc_c(const double *a, const double *b, std::size_t n, double *out) {
    __m256d prod = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(a + 2 * k);
        const __m256d vb = _mm256_loadu_pd(b + 2 * k);
        prod = _mm256_fmadd_pd(va, vb, prod);
        cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), cross);
    }
    alignas(32) double c[4];
    _mm256_store_pd(c, cross);
    double re = hsum(prod);
    double im = (c[1] + c[3]) - (c[0] + c[2]);
    for (; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    out[0] = re;
    out[1] = im;
}

// One quaternion per register. The sign patterns of the Hamilton product are
// applied once after accumulation.
void dotc_h(const double *a, const double *b, std::size_t n, double *out) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n; ++k) {
        const __m256d va = _mm256_loadu_pd(a + 4 * k);
        const __m256d vb = _mm256_loadu_pd(b + 4 * k);
        acc0 = _mm256_fmadd_pd(_mm256_permute4x64_pd(va, 0x00), vb, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_permute4x64_pd(va, 0x55),
                               _mm256_permute_pd(vb, 0x5), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_permute4x64_pd(va, 0xAA),
                               _mm256_permute4x64_pd(vb, 0x4E), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_permute4x64_pd(va, 0xFF),
                               _mm256_permute4x64_pd(vb, 0x1B), acc3);
    }
    const __m256d s0 = _mm256_setr_pd(1.0, -1.0, -1.0, -1.0);
    const __m256d s1 = _mm256_setr_pd(1.0, 1.0, 1.0, -1.0);
    const __m256d s2 = _mm256_setr_pd(1.0, -1.0, 1.0, 1.0);
    const __m256d s3 = _mm256_setr_pd(1.0, 1.0, -1.0, 1.0);
    __m256d r = _mm256_mul_pd(s0, acc0);
    r = _mm256_fmadd_pd(s1, acc1, r);
    r = _mm256_fmadd_pd(s2, acc2, r);
    r = _mm256_fmadd_pd(s3, acc3, r);
    _mm256_storeu_pd(out, r);
}

void axpy_r(const double *c, const double *x, double *y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(c[0]);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(y + k, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k),
                                                _mm256_loadu_pd(y + k)));
    }
    for (; k < n; ++k) {
        y[k] += c[0] * x[k];
    }
}

void axpy_c(const double *c, const double *x, double *y, std::size_t n) {
    const __m256d cr = _mm256_set1_pd(c[0]);
    const __m256d ci = _mm256_setr_pd(-c[1], c[1], -c[1], c[1]);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vx = _mm256_loadu_pd(x + 2 * k);
        __m256d vy = _mm256_loadu_pd(y + 2 * k);
        vy = _mm256_fmadd_pd(cr, vx, vy);
        vy = _mm256_fmadd_pd(ci, _mm256_permute_pd(vx, 0x5), vy);
        _mm256_storeu_pd(y + 2 * k, vy);
    }
    for (; k < n; ++k) {
        const double xr = x[2 * k], xi = x[2 * k + 1];
        y[2 * k] += c[0] * xr - c[1] * xi;
        y[2 * k + 1] += c[0] * xi + c[1] * xr;
    }
}

void axpy_h(const double *c, const double *x, double *y, std::size_t n) {
    const __m256d cw = _mm256_set1_pd(c[0]);
    const __m256d cx = _mm256_setr_pd(-c[1], c[1], -c[1], c[1]);
    const __m256d cy = _mm256_setr_pd(-c[2], c[2], c[2], -c[2]);
    const __m256d cz = _mm256_setr_pd(-c[3], -c[3], c[3], c[3]);
    for (std::size_t k = 0; k < n; ++k) {
        const __m256d vx = _mm256_loadu_pd(x + 4 * k);
        __m256d vy = _mm256_loadu_pd(y + 4 * k);
        vy = _mm256_fmadd_pd(cw, vx, vy);
        vy = _mm256_fmadd_pd(cx, _mm256_permute_pd(vx, 0x5), vy);
        vy = _mm256_fmadd_pd(cy, _mm256_permute4x64_pd(vx, 0x4E), vy);
        vy = _mm256_fmadd_pd(cz, _mm256_permute4x64_pd(vx, 0x1B), vy);
        _mm256_storeu_pd(y + 4 * k, vy);
    }
}

void convolve_avx2(const double *a, std::size_t na, const double *b,
                   std::size_t nb, double *out) {
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0.0) {
            continue;
        }
        const __m256d ai = _mm256_set1_pd(a[i]);
        double *o = out + i;
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            _mm256_storeu_pd(o + j, _mm256_fmadd_pd(ai, _mm256_loadu_pd(b + j),
                                                    _mm256_loadu_pd(o + j)));
        }
        for (; j < nb; ++j) {
            o[j] += a[i] * b[j];
        }
    }
}

} // namespace

const Table *avx2_table() {
    static const Table table{"avx2",
                             {dotc_r, dotc_c, dotc_h},
                             {axpy_r, axpy_c, axpy_h},
                             convolve_avx2};
    return &table;
}

} // namespace jaws::kernels

#else

namespace jaws::kernels {
const Table *avx2_table() { return nullptr; }
} // namespace jaws::kernels

#endif
