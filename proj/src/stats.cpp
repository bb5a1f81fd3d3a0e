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

#include "jaws/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "jaws/error.hpp"

namespace jaws {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
    const double n = static_cast<double>(sorted_.size());
    if (sorted_.empty()) {
        return;
    }
    double s = 0.0;
    for (double v : sorted_) {
        s += v;
    }
    mean_ = s / n;
    double ss = 0.0;
    for (double v : sorted_) {
        ss += (v - mean_) * (v - mean_);
    }
    variance_ = sorted_.size() > 1 ? ss / (n - 1.0) : 0.0;
}

double EmpiricalDistribution::cdf(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double kolmogorov_survival(double x) {
    if (x <= 0.0) {
        return 1.0;
    }
    if (x < 1.18) {
        // Theta-function form converges fast for small x.
        const double a = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
        double s = 0.0;
        for (int k = 1; k <= 6; ++k) {
            const double m = 2.0 * k - 1.0;
            s += std::exp(-m * m * a);
        }
        return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / x * s, 0.0, 1.0);
    }
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double t = std::exp(-2.0 * k * k * x * x);
        s += (k % 2 == 1 ? t : -t);
        if (t < 1e-18) {
            break;
        }
    }
    return std::clamp(2.0 * s, 0.0, 1.0);
}

namespace {

double ks_pvalue(double d, double n_eff) {
    const double rn = std::sqrt(n_eff);
    return kolmogorov_survival((rn + 0.12 + 0.11 / rn) * d);
}

} // namespace

KsResult ks_one_sample(const EmpiricalDistribution &e, const std::function<double(double)> &cdf) {
    const auto &x = e.sorted();
    const std::size_t n = x.size();
    if (n == 0) {
        throw ValidationError("KS test needs samples");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(x[i]);
        const double lo = static_cast<double>(i) / static_cast<double>(n);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
        d = std::max({d, hi - f, f - lo});
    }
    return {d, ks_pvalue(d, static_cast<double>(n))};
}

KsResult ks_two_sample(const EmpiricalDistribution &a, const EmpiricalDistribution &b) {
    const auto &x = a.sorted();
    const auto &y = b.sorted();
    if (x.empty() || y.empty()) {
        throw ValidationError("KS test needs samples");
    }
    const double na = static_cast<double>(x.size());
    const double nb = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) {
            ++i;
        }
        while (j < y.size() && y[j] == v) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return {d, ks_pvalue(d, na * nb / (na + nb))};
}

double ks_critical_value(std::size_t n, double alpha) {
    double lo = 0.2, hi = 5.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (kolmogorov_survival(mid) > alpha ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

double gamma_pdf(double x, double shape, double scale) {
    if (x < 0.0) {
        return 0.0;
    }
    return boost::math::gamma_p_derivative(shape, x / scale) / scale;
}

double gamma_cdf(double x, double shape, double scale) {
    if (x <= 0.0) {
        return 0.0;
    }
    return boost::math::gamma_p(shape, x / scale);
}

double sample_skewness(const std::vector<double> &x) {
    const double n = static_cast<double>(x.size());
    double m = 0.0;
    for (double v : x) {
        m += v;
    }
    m /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : x) {
        const double d = v - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m3 / std::pow(m2, 1.5);
}

LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y,
                     const std::vector<double> &w) {
    if (x.size() != y.size() || x.size() < 2 || (!w.empty() && w.size() != x.size())) {
        throw ValidationError("linear_fit needs matching inputs with at least two points");
    }
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double wk = w.empty() ? 1.0 : w[k];
        sw += wk;
        sx += wk * x[k];
        sy += wk * y[k];
    }
    const double mx = sx / sw, my = sy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double wk = w.empty() ? 1.0 : w[k];
        sxx += wk * (x[k] - mx) * (x[k] - mx);
        sxy += wk * (x[k] - mx) * (y[k] - my);
    }
    LinearFit f;
    f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double wk = w.empty() ? 1.0 : w[k];
        const double r = y[k] - f.intercept - f.slope * x[k];
        f.residual_ss += wk * r * r;
    }
    return f;
}

} // namespace jaws
