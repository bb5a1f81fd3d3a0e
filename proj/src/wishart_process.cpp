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

#include "jaws/wishart_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jaws/error.hpp"
#include "jaws/randmat.hpp"
#include "jaws/stats.hpp"

namespace jaws {

namespace {

double chi_dof(const SimpleComponent &c) { return std::max(2.0, static_cast<double>(c.beta())); }

void require_rank1(const SimpleComponent &c, std::size_t a) {
    const auto nz = std::count_if(c.input_spectrum.begin(), c.input_spectrum.end(),
                                  [](double v) { return v > 0.0; });
    if (nz != 1) {
        throw UnsupportedError("component " + std::to_string(a) +
                               " has a mixed input; the conditional gradient and Hessian laws "
                               "cover rank-1 inputs only, use the exact simulator instead");
    }
}

void require_z(const JawsModel &m, const std::vector<double> &z) {
    if (z.size() != m.components.size()) {
        throw ValidationError("need one conditioning loss per component");
    }
    for (double v : z) {
        if (!(v >= 0.0)) {
            throw ValidationError("conditioning losses must be non-negative");
        }
    }
}

} // namespace

std::vector<LossDraw> sample_loss(const JawsModel &model,
                                  const std::vector<std::vector<std::vector<double>>> &inputs,
                                  RngState &rng) {
    const std::size_t na = model.components.size();
    for (const auto &in : inputs) {
        if (in.size() != na) {
            throw ValidationError("each input needs one spectrum per component");
        }
    }
    std::vector<LossDraw> out(inputs.size());
    for (auto &d : out) {
        d.z.assign(na, 0.0);
        d.w_diag.assign(na, {});
    }
    for (std::size_t a = 0; a < na; ++a) {
        const SimpleComponent &c = model.components[a];
        const SpectralStats st = spectral_stats(c);
        if (st.dof < 1) {
            throw DegenerateError("component " + std::to_string(a) + " has r < 1");
        }
        const double b = c.beta();
        const double r = static_cast<double>(st.dof);
        const double pref = c.index * st.mean_eig / r;
        for (std::size_t mu = 0; mu < c.dim; ++mu) {
            bool used = false;
            for (const auto &in : inputs) {
                if (in[a].size() != c.dim) {
                    throw ValidationError("input spectrum length does not match component dim");
                }
                used = used || in[a][mu] > 0.0;
            }
            if (!used) {
                continue;
            }
            // Rows of X are independent, so the diagonal of W = X X^dagger
            // is i.i.d. chi^2(beta r) / beta.
            const double w = rng.chi2(b * r) / b;
            for (std::size_t k = 0; k < inputs.size(); ++k) {
                if (inputs[k][a][mu] > 0.0) {
                    out[k].w_diag[a].push_back(w);
                    out[k].z[a] += pref * inputs[k][a][mu] * w;
                }
            }
        }
    }
    for (auto &d : out) {
        d.total = 0.0;
        for (double v : d.z) {
            d.total += v;
        }
    }
    return out;
}

LossDraw sample_loss(const JawsModel &model, RngState &rng) {
    std::vector<std::vector<double>> in;
    for (const SimpleComponent &c : model.components) {
        bool any = false;
        for (double v : c.input_spectrum) {
            any = any || v > 0.0;
        }
        if (!any) {
            throw DegenerateError("every component needs a nonzero input spectrum");
        }
        in.push_back(c.input_spectrum);
    }
    return sample_loss(model, {in}, rng).front();
}

double loss_pdf_rank1(const SimpleComponent &c, double z) {
    require_rank1(c, 0);
    if (z < 0.0) {
        throw ValidationError("loss density needs z >= 0");
    }
    const SpectralStats st = spectral_stats(c);
    const double shape = c.beta() * st.dof_real / 2.0;
    const double mean = c.index * st.mean_eig * trace(c.input_spectrum);
    const double scale = mean / shape;
    if (z == 0.0) {
        if (shape < 1.0) {
            return std::numeric_limits<double>::infinity();
        }
        return shape == 1.0 ? 1.0 / scale : 0.0;
    }
    // Log space keeps large shapes finite.
    const double x = z / scale;
    return std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape)) / scale;
}

double loss_cdf_rank1(const SimpleComponent &c, double z) {
    require_rank1(c, 0);
    const SpectralStats st = spectral_stats(c);
    const double shape = c.beta() * st.dof_real / 2.0;
    const double mean = c.index * st.mean_eig * trace(c.input_spectrum);
    return gamma_cdf(z, shape, mean / shape);
}

double gradient_prefactor(const SimpleComponent &c, double z) {
    const SpectralStats st = spectral_stats(c);
    const double b = c.beta();
    return 2.0 * c.index * st.std_eig * trace(c.input_spectrum) / static_cast<double>(c.dim) *
           std::sqrt(b * z / (c.index * st.mean_eig));
}

double hessian_prefactor(const SimpleComponent &c, double z) {
    const SpectralStats st = spectral_stats(c);
    const double n = static_cast<double>(c.dim);
    return 2.0 * c.index * st.std_eig * trace(c.input_spectrum) / (n * n) *
           std::sqrt(z / (c.index * st.mean_eig));
}

ConditionalGradientDraw sample_gradient_given_loss(const JawsModel &model,
                                                   const std::vector<double> &z, RngState &rng) {
    require_z(model, z);
    ConditionalGradientDraw d;
    d.z = z;
    d.grad.assign(model.total_params, 0.0);
    for (std::size_t a = 0; a < model.components.size(); ++a) {
        const SimpleComponent &c = model.components[a];
        require_rank1(c, a);
        if (z[a] == 0.0) {
            continue;
        }
        const double pref = gradient_prefactor(c, z[a]);
        for (std::size_t i = 0; i < c.sector_params; ++i) {
            const double g = rng.normal();
            const double x = rng.chi(chi_dof(c));
            d.grad[model.parameter_index(a, i)] += pref * g * x;
        }
    }
    return d;
}

ConditionalHessianDraw sample_hessian_at_critical(const JawsModel &model,
                                                  const std::vector<double> &z, RngState &rng) {
    require_z(model, z);
    const std::size_t p = model.total_params;
    ConditionalHessianDraw d;
    d.z = z;
    d.hessian = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    d.g.assign(model.components.size(), {});
    d.chi.assign(model.components.size(), {});
    for (std::size_t a = 0; a < model.components.size(); ++a) {
        const SimpleComponent &c = model.components[a];
        require_rank1(c, a);
        const std::size_t pa = c.sector_params;
        if (pa == 0 || z[a] == 0.0) {
            continue;
        }
        const SpectralStats st = spectral_stats(c);
        const double pref = hessian_prefactor(c, z[a]);
        auto &g = d.g[a];
        auto &x = d.chi[a];
        for (std::size_t i = 0; i < pa; ++i) {
            g.push_back(rng.normal());
            x.push_back(rng.chi(chi_dof(c)));
        }
        const std::size_t dof = static_cast<std::size_t>(c.beta() * st.dof);
        const FieldMatrix w = wishart_bartlett(Field::R, pa, dof, rng).matrix;
        for (std::size_t i = 0; i < pa; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const double v = pref * g[i] * x[j] * w.entry(i, j)[0];
                const auto gi = static_cast<Eigen::Index>(model.parameter_index(a, i));
                const auto gj = static_cast<Eigen::Index>(model.parameter_index(a, j));
                d.hessian(gi, gj) += v;
                if (gi != gj) {
                    d.hessian(gj, gi) += v;
                }
            }
        }
    }
    return d;
}

Eigen::MatrixXd regularized_hessian_sample(const SimpleComponent &c, RngState &rng) {
    const std::size_t p = c.sector_params;
    if (p < 1) {
        throw ValidationError("regularized Hessian needs sector_params >= 1");
    }
    const SpectralStats st = spectral_stats(c);
    Eigen::VectorXd s(static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < p; ++i) {
        s(static_cast<Eigen::Index>(i)) = std::sqrt(rng.chi2(chi_dof(c)));
    }
    const std::size_t dof = static_cast<std::size_t>(c.beta() * st.dof);
    const FieldMatrix w = wishart_bartlett(Field::R, p, dof, rng).matrix;
    Eigen::MatrixXd h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    const double inv_n = 1.0 / static_cast<double>(c.dim);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            const auto ei = static_cast<Eigen::Index>(i);
            const auto ej = static_cast<Eigen::Index>(j);
            h(ei, ej) = inv_n * s(ei) * w.entry(i, j)[0] * s(ej);
        }
    }
    return h;
}

} // namespace jaws
