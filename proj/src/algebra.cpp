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

#include "jaws/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jaws/error.hpp"

namespace jaws {

namespace {

constexpr double kBasisTol = 1e-10;

std::string where(const char *what, std::size_t n) {
    return std::string(what) + " (length " + std::to_string(n) + ")";
}

} // namespace

void SimpleComponent::validate() const {
    if (dim < 1) {
        throw ValidationError("component dim must be positive");
    }
    if (!(index > 0.0) || !std::isfinite(index)) {
        throw ValidationError("component index must be positive");
    }
    if (observable_spectrum.size() != dim) {
        throw ValidationError(where("observable_spectrum does not match dim", observable_spectrum.size()));
    }
    if (input_spectrum.size() != dim) {
        throw ValidationError(where("input_spectrum does not match dim", input_spectrum.size()));
    }
    for (std::size_t k = 0; k < dim; ++k) {
        if (!std::isfinite(observable_spectrum[k]) || !std::isfinite(input_spectrum[k])) {
            throw ValidationError("spectra must be finite");
        }
        if (k > 0 && observable_spectrum[k] < observable_spectrum[k - 1]) {
            throw ValidationError("observable_spectrum must be sorted non-decreasing");
        }
        if (input_spectrum[k] < 0.0) {
            throw ValidationError("input_spectrum entries must be non-negative");
        }
    }
}

void JawsModel::validate() const {
    if (components.empty()) {
        throw ValidationError("model has no components");
    }
    if (!(normalization > 0.0)) {
        throw ValidationError("normalization must be positive");
    }
    std::size_t sum = 0;
    for (const SimpleComponent &c : components) {
        c.validate();
        if (c.sector_params > total_params) {
            throw ValidationError("total_params must be at least every sector_params");
        }
        sum += c.sector_params;
    }
    if (fully_controllable && sum > total_params) {
        throw ValidationError("fully controllable sectors need sum of sector_params <= total_params");
    }
}

std::size_t JawsModel::size() const {
    if (ambient_dim > 0) {
        return ambient_dim;
    }
    std::size_t n = 0;
    for (const SimpleComponent &c : components) {
        n += c.dim;
    }
    return n;
}

std::size_t JawsModel::parameter_index(std::size_t a, std::size_t local) const {
    if (!fully_controllable) {
        return local;
    }
    std::size_t offset = 0;
    for (std::size_t b = 0; b < a; ++b) {
        offset += components[b].sector_params;
    }
    return offset + local;
}

std::vector<double> shifted_spectrum(const std::vector<double> &spectrum) {
    if (spectrum.empty()) {
        return {};
    }
    const double lo = *std::min_element(spectrum.begin(), spectrum.end());
    std::vector<double> out(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        out[k] = spectrum[k] - lo;
    }
    return out;
}

SpectralStats spectral_stats(const std::vector<double> &spectrum, bool shift) {
    if (spectrum.empty()) {
        throw DegenerateError("empty observable spectrum");
    }
    const std::vector<double> s = shift ? shifted_spectrum(spectrum) : spectrum;
    double scale = 0.0;
    for (double v : spectrum) {
        scale = std::max(scale, std::abs(v));
    }
    SpectralStats st;
    const double n = static_cast<double>(s.size());
    for (double v : s) {
        st.trace += v;
        st.trace_sq += v * v;
    }
    // Rounding residue from a numerically flat spectrum counts as flat.
    if (!(st.trace_sq > 1e-24 * n * scale * scale) || st.trace == 0.0) {
        throw DegenerateError("observable spectrum is degenerate after the zero shift");
    }
    st.mean_eig = st.trace / n;
    st.std_eig = std::sqrt(std::max(0.0, st.trace_sq / n - st.mean_eig * st.mean_eig));
    st.dof_real = st.trace * st.trace / st.trace_sq;
    st.dof = round_half_even(st.dof_real);
    return st;
}

SpectralStats spectral_stats(const SimpleComponent &c) {
    return spectral_stats(c.observable_spectrum, true);
}

std::int64_t round_half_even(double x) {
    return static_cast<std::int64_t>(std::nearbyint(x));
}

std::int64_t dim_automorphism(Field field, std::int64_t dim) {
    if (dim < 1) {
        throw ValidationError("dim_automorphism needs dim >= 1");
    }
    const std::int64_t b = beta(field);
    return (b - 1) * dim + b * dim * (dim - 1) / 2;
}

Projection project_into_component(const Eigen::MatrixXcd &a,
                                  const std::vector<Eigen::MatrixXcd> &basis) {
    const std::size_t m = basis.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i].rows() != a.rows() || basis[i].cols() != a.cols()) {
            throw ValidationError("basis element shape does not match the input");
        }
        for (std::size_t j = i; j < m; ++j) {
            const double g = (basis[i] * basis[j]).trace().real();
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(g - want) > kBasisTol) {
                throw ValidationError("basis is not orthonormal at pair (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
            }
        }
    }
    Projection p;
    p.coefficients.resize(static_cast<Eigen::Index>(m));
    p.element = Eigen::MatrixXcd::Zero(a.rows(), a.cols());
    for (std::size_t i = 0; i < m; ++i) {
        const double c = (basis[i] * a).trace().real();
        p.coefficients(static_cast<Eigen::Index>(i)) = c;
        p.element += c * basis[i];
    }
    return p;
}

double index_constant(const Eigen::MatrixXcd &ambient, const FieldMatrix &defining) {
    const double def = defining.frobenius_norm();
    if (def == 0.0) {
        throw DegenerateError("defining-representation element has zero norm");
    }
    // Both elements are Hermitian, so Tr(A^2) is the squared Frobenius norm.
    return ambient.squaredNorm() / (def * def);
}

double trace(const std::vector<double> &spectrum) {
    double s = 0.0;
    for (double v : spectrum) {
        s += v;
    }
    return s;
}

double purity(const std::vector<double> &spectrum) {
    double s = 0.0;
    for (double v : spectrum) {
        s += v * v;
    }
    return s;
}

double cube_trace(const std::vector<double> &spectrum) {
    double s = 0.0;
    for (double v : spectrum) {
        s += v * v * v;
    }
    return s;
}

std::pair<std::vector<double>, std::vector<double>>
spin_factor_reduce(const std::vector<double> &input_spectrum,
                   const std::vector<double> &observable_spectrum) {
    if (input_spectrum.size() != observable_spectrum.size()) {
        throw ValidationError("spin_factor_reduce needs spectra of equal length");
    }
    std::vector<double> rho;
    std::vector<double> obs;
    rho.reserve(input_spectrum.size() * input_spectrum.size());
    obs.reserve(rho.capacity());
    for (double a : input_spectrum) {
        for (double b : input_spectrum) {
            rho.push_back(a * b);
        }
    }
    for (double a : observable_spectrum) {
        for (double b : observable_spectrum) {
            obs.push_back(a * b);
        }
    }
    std::sort(rho.begin(), rho.end(), std::greater<>());
    std::sort(obs.begin(), obs.end());
    return {rho, obs};
}

} // namespace jaws
