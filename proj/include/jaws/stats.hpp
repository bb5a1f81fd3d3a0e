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

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jaws {

/// Sorted samples with summary statistics.
class EmpiricalDistribution {
  public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> samples);

    const std::vector<double> &sorted() const { return sorted_; }
    std::size_t count() const { return sorted_.size(); }
    double mean() const { return mean_; }
    /// Unbiased (n - 1) sample variance.
    double variance() const { return variance_; }
    double min() const { return sorted_.empty() ? 0.0 : sorted_.front(); }
    double max() const { return sorted_.empty() ? 0.0 : sorted_.back(); }
    double cdf(double x) const;

  private:
    std::vector<double> sorted_;
    double mean_ = 0.0;
    double variance_ = 0.0;
};

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Survival function of the Kolmogorov distribution, P[K > x].
double kolmogorov_survival(double x);

KsResult ks_one_sample(const EmpiricalDistribution &e, const std::function<double(double)> &cdf);
KsResult ks_two_sample(const EmpiricalDistribution &a, const EmpiricalDistribution &b);

/// Asymptotic critical value of the one-sample statistic at level alpha.
double ks_critical_value(std::size_t n, double alpha);

double gamma_pdf(double x, double shape, double scale);
double gamma_cdf(double x, double shape, double scale);

double sample_skewness(const std::vector<double> &x);

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double residual_ss = 0.0;
};

/// Ordinary least squares; weights default to 1.
LinearFit linear_fit(const std::vector<double> &x, const std::vector<double> &y,
                     const std::vector<double> &w = {});

} // namespace jaws
