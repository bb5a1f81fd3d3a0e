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

#include "jaws/randmat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "jaws/error.hpp"
#include "jaws/kernels.hpp"

namespace jaws {

FieldMatrix gauss_matrix(Field field, std::size_t rows, std::size_t cols, RngState &rng) {
    FieldMatrix m(field, rows, cols);
    const std::size_t n = rows * cols * static_cast<std::size_t>(beta(field));
    double *d = m.data();
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = rng.normal();
    }
    return m;
}

FieldMatrix bartlett_factor(Field field, std::size_t dim, std::size_t dof, RngState &rng) {
    if (dim < 1 || dof < 1) {
        throw ValidationError("Wishart dim and dof must be positive");
    }
    const int b = beta(field);
    const double inv_sqrt_beta = 1.0 / std::sqrt(static_cast<double>(b));
    const std::size_t m = std::min(dim, dof);
    FieldMatrix l(field, dim, m);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t jmax = std::min(i, m);
        for (std::size_t j = 0; j < jmax; ++j) {
            double *e = l.entry(i, j);
            for (int c = 0; c < b; ++c) {
                e[c] = rng.normal() * inv_sqrt_beta;
            }
        }
        if (i < m) {
            // beta * L_ii^2 ~ chi^2(beta (r - i)) with 0-based i.
            const double k = static_cast<double>(b) * static_cast<double>(dof - i);
            l.entry(i, i)[0] = rng.chi(k) * inv_sqrt_beta;
        }
    }
    return l;
}

WishartSample wishart_bartlett(Field field, std::size_t dim, std::size_t dof, RngState &rng) {
    FieldMatrix l = bartlett_factor(field, dim, dof, rng);
    return {field, dim, dof, multiply_adjoint(l, l)};
}

WishartSample wishart_direct(Field field, std::size_t dim, std::size_t dof, RngState &rng) {
    if (dim < 1 || dof < 1) {
        throw ValidationError("Wishart dim and dof must be positive");
    }
    FieldMatrix x = gauss_matrix(field, dim, dof, rng) * (1.0 / std::sqrt(static_cast<double>(beta(field))));
    return {field, dim, dof, multiply_adjoint(x, x)};
}

FieldMatrix haar_rows(Field field, std::size_t dim, std::size_t k, RngState &rng) {
    if (k > dim || dim < 1) {
        throw ValidationError("haar_rows needs 1 <= k <= dim");
    }
    FieldMatrix q = gauss_matrix(field, k, dim, rng);
    const int b = beta(field);
    double c[4];
    for (std::size_t j = 0; j < k; ++j) {
        double *gj = q.row(j);
        for (std::size_t i = 0; i < j; ++i) {
            kernels::dotc(b, gj, q.row(i), dim, c);
            for (int t = 0; t < b; ++t) {
                c[t] = -c[t];
            }
            kernels::axpy(b, c, q.row(i), gj, dim);
        }
        kernels::dotc(b, gj, gj, dim, c);
        const double inv = 1.0 / std::sqrt(c[0]);
        for (std::size_t t = 0; t < dim * static_cast<std::size_t>(b); ++t) {
            gj[t] *= inv;
        }
    }
    return q;
}

FieldMatrix haar_group(Field field, std::size_t dim, RngState &rng) {
    FieldMatrix u = haar_rows(field, dim, dim, rng);
    if (field == Field::R) {
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            a(u.data(), dim, dim);
        if (Eigen::MatrixXd(a).partialPivLu().determinant() < 0.0) {
            double *last = u.row(dim - 1);
            for (std::size_t t = 0; t < dim; ++t) {
                last[t] = -last[t];
            }
        }
    }
    return u;
}

double chi2_sample(double dof, RngState &rng) {
    if (!(dof > 0.0)) {
        throw ValidationError("chi-squared dof must be positive");
    }
    return rng.chi2(dof);
}

double chi_sample(double dof, RngState &rng) { return std::sqrt(chi2_sample(dof, rng)); }

std::pair<double, double> marchenko_pastur_support(double gamma) {
    if (!(gamma > 0.0)) {
        throw ValidationError("Marcenko-Pastur ratio must be positive");
    }
    const double s = std::sqrt(gamma);
    return {(1.0 - s) * (1.0 - s), (1.0 + s) * (1.0 + s)};
}

double marchenko_pastur_pdf(double gamma, double lambda) {
    const auto [lo, hi] = marchenko_pastur_support(gamma);
    if (!(lambda > lo && lambda < hi)) {
        return 0.0;
    }
    return std::sqrt((hi - lambda) * (lambda - lo)) / (2.0 * std::numbers::pi * gamma * lambda);
}

double marchenko_pastur_atom(double gamma) {
    if (!(gamma > 0.0)) {
        throw ValidationError("Marcenko-Pastur ratio must be positive");
    }
    return gamma >= 1.0 ? 1.0 - 1.0 / gamma : 0.0;
}

double mp_log_moment(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw UnsupportedError("mp_log_moment needs 0 < gamma <= 1");
    }
    const auto [lo, hi] = marchenko_pastur_support(gamma);
    const double w = hi - lo;
    // lambda = lo + w sin^2 u turns both square-root edges into smooth
    // endpoints; the density times d(lambda) is w^2 sin^2 cos^2 / (pi g lambda).
    auto f = [&](double u) {
        const double s = std::sin(u);
        const double c = std::cos(u);
        const double lam = lo + w * s * s;
        if (!(lam > 0.0)) {
            return 0.0;
        }
        return std::log(lam) * w * w * s * s * c * c / (std::numbers::pi * gamma * lam);
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, 0.0, std::numbers::pi / 2.0, 1e-13);
}

double marchenko_pastur_l1(const std::vector<double> &scaled_eigs, double gamma, std::size_t bins) {
    if (!(gamma > 0.0) || gamma > 1.0 || bins == 0 || scaled_eigs.empty()) {
        throw ValidationError("marchenko_pastur_l1 needs 0 < gamma <= 1, bins >= 1 and samples");
    }
    const auto [lo, hi] = marchenko_pastur_support(gamma);
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<double> hist(bins, 0.0);
    const double unit = 1.0 / static_cast<double>(scaled_eigs.size());
    for (double v : scaled_eigs) {
        const double b = std::floor((v - lo) / width);
        hist[static_cast<std::size_t>(std::clamp(b, 0.0, static_cast<double>(bins - 1)))] += unit;
    }
    boost::math::quadrature::tanh_sinh<double> integrator;
    double l1 = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        const double a = lo + width * static_cast<double>(b);
        const double mass = integrator.integrate(
            [&](double x) { return marchenko_pastur_pdf(gamma, x); }, a, a + width, 1e-10);
        l1 += std::abs(hist[b] - mass);
    }
    return l1;
}

} // namespace jaws
