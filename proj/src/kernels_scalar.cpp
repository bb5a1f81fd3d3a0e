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

#include "jaws/kernels.hpp"

namespace jaws::kernels {
namespace {

void dotc_r(const double *a, const double *b, std::size_t n, double *out) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += a[k] * b[k];
    }
    out[0] = s;
}

void dotc_c(const double *a, const double *b, std::size_t n, double *out) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    out[0] = re;
    out[1] = im;
}

// a * conj(b) with the Hamilton product.
void dotc_h(const double *a, const double *b, std::size_t n, double *out) {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double *p = a + 4 * k;
        const double *q = b + 4 * k;
        const double cw = q[0], cx = -q[1], cy = -q[2], cz = -q[3];
        w += p[0] * cw - p[1] * cx - p[2] * cy - p[3] * cz;
        x += p[0] * cx + p[1] * cw + p[2] * cz - p[3] * cy;
        y += p[0] * cy - p[1] * cz + p[2] * cw + p[3] * cx;
        z += p[0] * cz + p[1] * cy - p[2] * cx + p[3] * cw;
    }
    out[0] = w;
    out[1] = x;
    out[2] = y;
    out[3] = z;
}

void axpy_r(const double *c, const double *x, double *y, std::size_t n) {
    const double a = c[0];
    for (std::size_t k = 0; k < n; ++k) {
        y[k] += a * x[k];
    }
}

void axpy_c(const double *c, const double *x, double *y, std::size_t n) {
    const double cr = c[0], ci = c[1];
    for (std::size_t k = 0; k < n; ++k) {
        const double xr = x[2 * k], xi = x[2 * k + 1];
        y[2 * k] += cr * xr - ci * xi;
        y[2 * k + 1] += cr * xi + ci * xr;
    }
}

void axpy_h(const double *c, const double *x, double *y, std::size_t n) {
    const double cw = c[0], cx = c[1], cy = c[2], cz = c[3];
    for (std::size_t k = 0; k < n; ++k) {
        const double *q = x + 4 * k;
        double *r = y + 4 * k;
        r[0] += cw * q[0] - cx * q[1] - cy * q[2] - cz * q[3];
        r[1] += cw * q[1] + cx * q[0] + cy * q[3] - cz * q[2];
        r[2] += cw * q[2] - cx * q[3] + cy * q[0] + cz * q[1];
        r[3] += cw * q[3] + cx * q[2] - cy * q[1] + cz * q[0];
    }
}

void convolve_ref(const double *a, std::size_t na, const double *b,
                  std::size_t nb, double *out) {
    for (std::size_t i = 0; i < na; ++i) {
        const double ai = a[i];
        if (ai == 0.0) {
            continue;
        }
        double *o = out + i;
        for (std::size_t j = 0; j < nb; ++j) {
            o[j] += ai * b[j];
        }
    }
}

} // namespace

const Table &scalar() {
    static const Table table{"scalar",
                             {dotc_r, dotc_c, dotc_h},
                             {axpy_r, axpy_c, axpy_h},
                             convolve_ref};
    return table;
}

} // namespace jaws::kernels
