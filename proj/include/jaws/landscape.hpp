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
 * Closed-form landscape analytics: loss variance, Gaussian-process
 * conditions, local-minima density and the trainability verdict.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jaws/algebra.hpp"

namespace jaws {

double loss_variance(const JawsModel &model);

/// gamma_a = p_a / (beta_a dof_real_a).
std::vector<double> overparameterization_ratios(const JawsModel &model);

struct SectorGamma {
    double shape = 0.0;      ///< beta r / 2
    double scale = 0.0;      ///< 2 / (beta r), so shape * scale = 1
    double loss_scale = 0.0; ///< I o-bar Tr(rho)
    double gamma = 0.0;
    bool underparameterized = false;
};

struct MinimaDensitySpec {
    std::vector<SectorGamma> sectors;
};

MinimaDensitySpec minima_density_spec(const JawsModel &model);

/**
 * Density of local-minimum loss values. Only underparameterized sectors
 * contribute; a single one is evaluated in closed form, several are
 * convolved on a grid of bin masses.
 */
class MinimaDensity {
  public:
    explicit MinimaDensity(const JawsModel &model);

    /// No sector is underparameterized: all minima sit at z = 0.
    bool point_mass_at_zero() const { return point_mass_; }
    double continuous_mass() const { return point_mass_ ? 0.0 : 1.0; }
    double operator()(double z) const;
    double mean() const { return mean_; }
    double variance() const { return variance_; }
    /// Upper end of the tabulated support, mean + 12 sd.
    double support_end() const { return end_; }
    const MinimaDensitySpec &spec() const { return spec_; }

  private:
    MinimaDensitySpec spec_;
    std::vector<SectorGamma> active_;
    bool point_mass_ = false;
    double mean_ = 0.0;
    double variance_ = 0.0;
    double end_ = 0.0;
    double step_ = 0.0;
    double offset_ = 0.0;
    std::vector<double> mass_; ///< convolved bin masses
};

double minima_density(const JawsModel &model, double z);

struct WelchSatterthwaite {
    double k_eff = 0.0;
    double theta_eff = 0.0;
};

WelchSatterthwaite welch_satterthwaite(const JawsModel &model);

enum class KacRiceConstant {
    regularized, ///< ln(pi m / (2 sqrt(beta))), used by the log density
    exact,       ///< ln(pi m / (4 sqrt(beta)))
};

double kac_rice_log_prefactor(Field field, KacRiceConstant which = KacRiceConstant::regularized);

/// Per-parameter log of the regularized expected count of minima at z.
/// Returns -infinity when gamma >= 1.
double kac_rice_log_density(const SimpleComponent &c, double z, double gamma);

struct GpReport {
    double variance = 0.0; ///< N^2 loss_variance
    double cumulant = 0.0; ///< max over sectors of the third-cumulant scale
    bool variance_nonvanishing = false;
    bool cumulant_vanishing = false;
    bool gaussian_process = false;
};

struct GpThresholds {
    double variance_min = 1e-2;
    double cumulant_max = 1e-3;
};

GpReport gp_conditions(const JawsModel &model, const std::vector<double> &cube_traces,
                       const GpThresholds &t = {});
/// Uses the cube traces of the stored input spectra.
GpReport gp_conditions(const JawsModel &model, const GpThresholds &t = {});

double gp_covariance_diagonal(const JawsModel &model, const std::vector<std::vector<double>> &rho,
                              const std::vector<std::vector<double>> &rho_prime);

enum class VarianceVerdict { non_vanishing, vanishing, inconclusive };
std::string to_string(VarianceVerdict v);

struct TrainabilityThresholds {
    /// Largest k with variance ~ (ln N)^-k still counted as non-vanishing.
    double max_polylog_exponent = 4.0;
    /// Largest slope of the local exponent against ln N.
    double max_exponent_growth = 0.5;
};

struct SectorDiagnostics {
    double dof_real = 0.0;
    double beta_r = 0.0;
    double gamma = 0.0;
    double mean_eig = 0.0;
    double std_eig = 0.0;
};

struct TrainabilityReport {
    double variance_value = 0.0; ///< at the largest size
    VarianceVerdict variance_verdict = VarianceVerdict::inconclusive;
    bool minima_condition = false;
    bool overall = false;
    double fitted_exponent = 0.0;
    double exponent_growth = 0.0;
    std::vector<double> sizes;
    std::vector<double> variances;
    std::vector<SectorDiagnostics> sectors; ///< at the largest size
};

TrainabilityReport trainability_verdict(const std::vector<JawsModel> &models,
                                        const TrainabilityThresholds &t = {});

/// Explicit variance bound for a low-purity sector, or nullopt when the
/// purity exceeds dim^-0.999.
std::optional<double> low_purity_bound(const SimpleComponent &c, double normalization);

} // namespace jaws
