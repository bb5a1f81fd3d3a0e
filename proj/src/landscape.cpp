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

#include "jaws/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "jaws/error.hpp"
#include "jaws/kernels.hpp"
#include "jaws/randmat.hpp"
#include "jaws/stats.hpp"

namespace jaws {

namespace {

double sum_sq(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return s;
}

/// Tr_a(O^2) / dim_aut in the defining representation, shifted spectrum.
double observable_weight(const SimpleComponent &c) {
    const double daut = static_cast<double>(dim_automorphism(c.field, static_cast<std::int64_t>(c.dim)));
    return sum_sq(shifted_spectrum(c.observable_spectrum)) / daut;
}

} // namespace

double loss_variance(const JawsModel &model) {
    double v = 0.0;
    for (const SimpleComponent &c : model.components) {
        v += c.index * c.index * observable_weight(c) * sum_sq(c.input_spectrum);
    }
    return v;
}

std::vector<double> overparameterization_ratios(const JawsModel &model) {
    std::vector<double> g;
    for (const SimpleComponent &c : model.components) {
        const SpectralStats st = spectral_stats(c);
        g.push_back(static_cast<double>(c.sector_params) / (c.beta() * st.dof_real));
    }
    return g;
}

MinimaDensitySpec minima_density_spec(const JawsModel &model) {
    MinimaDensitySpec spec;
    for (const SimpleComponent &c : model.components) {
        const SpectralStats st = spectral_stats(c);
        SectorGamma s;
        const double br = c.beta() * st.dof_real;
        s.shape = br / 2.0;
        s.scale = 2.0 / br;
        s.loss_scale = c.index * st.mean_eig * trace(c.input_spectrum);
        s.gamma = static_cast<double>(c.sector_params) / br;
        s.underparameterized = s.gamma < 1.0;
        spec.sectors.push_back(s);
    }
    return spec;
}

MinimaDensity::MinimaDensity(const JawsModel &model) : spec_(minima_density_spec(model)) {
    for (const SectorGamma &s : spec_.sectors) {
        if (s.underparameterized) {
            active_.push_back(s);
            mean_ += s.loss_scale;
            variance_ += s.loss_scale * s.loss_scale / s.shape;
        }
    }
    if (active_.empty()) {
        point_mass_ = true;
        return;
    }
    end_ = mean_ + 12.0 * std::sqrt(variance_);
    if (active_.size() == 1) {
        return;
    }
    step_ = mean_ / 4096.0;
    const auto bins = static_cast<std::size_t>(std::ceil(end_ / step_)) + 1;
    // Exact bin masses keep each factor normalized even when the density is
    // singular at 0 (shape < 1).
    auto masses = [&](const SectorGamma &s) {
        std::vector<double> m(bins);
        const double th = s.loss_scale * s.scale;
        double prev = 0.0;
        std::size_t used = bins;
        for (std::size_t i = 0; i < bins; ++i) {
            const double next = gamma_cdf(static_cast<double>(i + 1) * step_, s.shape, th);
            m[i] = next - prev;
            prev = next;
            if (prev >= 1.0 && used == bins) {
                used = i + 1;
            }
        }
        m.resize(used);
        return m;
    };
    mass_ = masses(active_[0]);
    for (std::size_t a = 1; a < active_.size(); ++a) {
        const std::vector<double> f = masses(active_[a]);
        std::vector<double> out(mass_.size() + f.size() - 1, 0.0);
        kernels::convolve(mass_.data(), mass_.size(), f.data(), f.size(), out.data());
        out.resize(std::min(out.size(), bins));
        mass_ = std::move(out);
    }
    // A sum of n bin midpoints sits at (m + n/2) step.
    offset_ = 0.5 * static_cast<double>(active_.size()) * step_;
}

double MinimaDensity::operator()(double z) const {
    if (z < 0.0) {
        throw ValidationError("minima density needs z >= 0");
    }
    if (point_mass_) {
        return 0.0;
    }
    if (active_.size() == 1) {
        const SectorGamma &s = active_[0];
        return gamma_pdf(z, s.shape, s.loss_scale * s.scale);
    }
    const double u = (z - offset_) / step_;
    if (u < 0.0) {
        // Below the first node, interpolate towards zero density at z = 0.
        return mass_.empty() ? 0.0 : mass_[0] / step_ * (z / offset_);
    }
    const auto i = static_cast<std::size_t>(u);
    if (i + 1 >= mass_.size()) {
        return 0.0;
    }
    const double t = u - static_cast<double>(i);
    return ((1.0 - t) * mass_[i] + t * mass_[i + 1]) / step_;
}

double minima_density(const JawsModel &model, double z) { return MinimaDensity(model)(z); }

WelchSatterthwaite welch_satterthwaite(const JawsModel &model) {
    const MinimaDensitySpec spec = minima_density_spec(model);
    double mean = 0.0, var = 0.0;
    for (const SectorGamma &s : spec.sectors) {
        if (s.underparameterized) {
            mean += s.loss_scale;
            var += s.loss_scale * s.loss_scale * s.scale;
        }
    }
    if (mean == 0.0 && var == 0.0) {
        throw UnsupportedError("Welch-Satterthwaite parameters are undefined without an "
                               "underparameterized sector");
    }
    return {mean * mean / var, var / mean};
}

double kac_rice_log_prefactor(Field field, KacRiceConstant which) {
    const double b = beta(field);
    const double m = std::max(2.0, b);
    const double d = which == KacRiceConstant::regularized ? 2.0 : 4.0;
    return std::log(std::numbers::pi * m / (d * std::sqrt(b)));
}

double kac_rice_log_density(const SimpleComponent &c, double z, double gamma) {
    if (!(z > 0.0)) {
        throw ValidationError("Kac-Rice density needs z > 0");
    }
    if (!(gamma > 0.0)) {
        throw ValidationError("Kac-Rice density needs gamma > 0");
    }
    if (gamma >= 1.0) {
        return -std::numeric_limits<double>::infinity();
    }
    const SpectralStats st = spectral_stats(c);
    const double x = z / (c.index * st.mean_eig * trace(c.input_spectrum));
    const double m = std::max(2.0, static_cast<double>(c.beta()));
    return kac_rice_log_prefactor(c.field) + (1.0 - x + std::log(x)) / (2.0 * gamma) + m / 2.0 -
           1.0 - std::numbers::egamma + mp_log_moment(gamma);
}

GpReport gp_conditions(const JawsModel &model, const std::vector<double> &cube_traces,
                       const GpThresholds &t) {
    if (cube_traces.size() != model.components.size()) {
        throw ValidationError("gp_conditions needs one cube trace per component");
    }
    GpReport r;
    const double n = model.normalization;
    r.variance = n * n * loss_variance(model);
    for (std::size_t a = 0; a < model.components.size(); ++a) {
        const SimpleComponent &c = model.components[a];
        const SpectralStats st = spectral_stats(c);
        const double io = c.index * st.mean_eig;
        r.cumulant = std::max(r.cumulant, n * n * n * io * io * io * cube_traces[a] /
                                              (st.dof_real * st.dof_real));
    }
    r.variance_nonvanishing = r.variance > t.variance_min;
    r.cumulant_vanishing = r.cumulant < t.cumulant_max;
    r.gaussian_process = r.variance_nonvanishing && r.cumulant_vanishing;
    return r;
}

GpReport gp_conditions(const JawsModel &model, const GpThresholds &t) {
    std::vector<double> cubes;
    for (const SimpleComponent &c : model.components) {
        cubes.push_back(cube_trace(c.input_spectrum));
    }
    return gp_conditions(model, cubes, t);
}

double gp_covariance_diagonal(const JawsModel &model, const std::vector<std::vector<double>> &rho,
                              const std::vector<std::vector<double>> &rho_prime) {
    if (rho.size() != model.components.size() || rho_prime.size() != model.components.size()) {
        throw ValidationError("gp covariance needs one spectrum per component for each input");
    }
    double k = 0.0;
    for (std::size_t a = 0; a < model.components.size(); ++a) {
        const SimpleComponent &c = model.components[a];
        if (rho[a].size() != c.dim || rho_prime[a].size() != c.dim) {
            throw ValidationError("input spectrum length does not match component dim");
        }
        double overlap = 0.0;
        for (std::size_t mu = 0; mu < c.dim; ++mu) {
            overlap += rho[a][mu] * rho_prime[a][mu];
        }
        k += c.index * observable_weight(c) * c.index * overlap;
    }
    return model.normalization * model.normalization * k;
}

std::string to_string(VarianceVerdict v) {
    switch (v) {
    case VarianceVerdict::non_vanishing:
        return "non-vanishing";
    case VarianceVerdict::vanishing:
        return "vanishing";
    default:
        return "inconclusive";
    }
}

TrainabilityReport trainability_verdict(const std::vector<JawsModel> &models,
                                        const TrainabilityThresholds &t) {
    if (models.size() < 3) {
        throw ValidationError("trainability trend needs at least 3 sizes");
    }
    std::vector<const JawsModel *> order;
    for (const JawsModel &m : models) {
        order.push_back(&m);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const JawsModel *a, const JawsModel *b) { return a->size() < b->size(); });

    TrainabilityReport r;
    r.minima_condition = true;
    bool degenerate = false;
    for (const JawsModel *m : order) {
        const double n = static_cast<double>(m->size());
        if (!r.sizes.empty() && n <= r.sizes.back()) {
            throw ValidationError("trainability sizes must be distinct");
        }
        if (n <= 1.0) {
            throw ValidationError("trainability sizes must exceed 1");
        }
        const double v = m->normalization * m->normalization * loss_variance(*m);
        degenerate = degenerate || !(v > 0.0);
        r.sizes.push_back(n);
        r.variances.push_back(v);
        double need = 0.0;
        for (const SimpleComponent &c : m->components) {
            need = std::max(need, c.beta() * spectral_stats(c).dof_real);
        }
        r.minima_condition = r.minima_condition && static_cast<double>(m->total_params) >= need;
    }
    r.variance_value = r.variances.back();
    for (const SimpleComponent &c : order.back()->components) {
        const SpectralStats st = spectral_stats(c);
        SectorDiagnostics d;
        d.dof_real = st.dof_real;
        d.beta_r = c.beta() * st.dof_real;
        d.gamma = static_cast<double>(c.sector_params) / d.beta_r;
        d.mean_eig = st.mean_eig;
        d.std_eig = st.std_eig;
        r.sectors.push_back(d);
    }

    if (degenerate) {
        r.variance_verdict = VarianceVerdict::vanishing;
    } else {
        std::vector<double> lln, lv, ln_mid, local;
        for (std::size_t k = 0; k < r.sizes.size(); ++k) {
            lln.push_back(std::log(std::log(r.sizes[k])));
            lv.push_back(std::log(r.variances[k]));
        }
        r.fitted_exponent = -linear_fit(lln, lv).slope;
        for (std::size_t k = 0; k + 1 < r.sizes.size(); ++k) {
            local.push_back(-(lv[k + 1] - lv[k]) / (lln[k + 1] - lln[k]));
            ln_mid.push_back(0.5 * (std::log(r.sizes[k]) + std::log(r.sizes[k + 1])));
        }
        r.exponent_growth = linear_fit(ln_mid, local).slope;
        const bool steep = r.fitted_exponent > t.max_polylog_exponent;
        const bool growing = r.exponent_growth > t.max_exponent_growth;
        if (steep && r.exponent_growth < -t.max_exponent_growth) {
            // Fast decay that is flattening out: the trend does not settle.
            r.variance_verdict = VarianceVerdict::inconclusive;
        } else if (steep || growing) {
            r.variance_verdict = VarianceVerdict::vanishing;
        } else {
            r.variance_verdict = VarianceVerdict::non_vanishing;
        }
    }
    r.overall = r.variance_verdict == VarianceVerdict::non_vanishing && r.minima_condition;
    return r;
}

std::optional<double> low_purity_bound(const SimpleComponent &c, double normalization) {
    const double n = static_cast<double>(c.dim);
    const double p = purity(c.input_spectrum);
    const double threshold = std::pow(n, -0.999);
    if (p > threshold * (1.0 + 1e-12)) {
        return std::nullopt;
    }
    const double m = std::ceil(n / std::floor(std::pow(n, 0.999)));
    return normalization * normalization * m * m * c.index * c.index * observable_weight(c) *
           sum_sq(c.input_spectrum);
}

} // namespace jaws
