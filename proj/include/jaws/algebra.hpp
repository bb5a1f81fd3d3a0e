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
 * The JAWS data model: simple Jordan components, spectra, projections and
 * index constants.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "jaws/field_matrix.hpp"

namespace jaws {

/**
 * One simple sector. Spectra live in the defining representation; ambient
 * traces are `index` times defining traces.
 */
struct SimpleComponent {
    Field field = Field::C;
    std::size_t dim = 1;
    double index = 1.0;
    std::vector<double> observable_spectrum; ///< non-decreasing
    std::vector<double> input_spectrum;      ///< non-negative, any trace
    std::size_t sector_params = 0;

    int beta() const { return jaws::beta(field); }
    void validate() const;
};

struct JawsModel {
    std::vector<SimpleComponent> components;
    std::size_t total_params = 1;
    double normalization = 1.0;
    /// Each generator acts on exactly one sector. Parameters are then laid
    /// out as consecutive per-sector blocks; otherwise parameter i acts on
    /// every sector with i < sector_params.
    bool fully_controllable = false;
    /// Hilbert-space dimension used as the size N in trainability fits;
    /// 0 means the sum of component dims.
    std::size_t ambient_dim = 0;

    void validate() const;
    std::size_t size() const;
    /// Global parameter index of local parameter `local` of component `a`.
    std::size_t parameter_index(std::size_t a, std::size_t local) const;
};

struct SpectralStats {
    double mean_eig = 0.0; ///< o-bar
    double std_eig = 0.0;  ///< population standard deviation
    double trace = 0.0;
    double trace_sq = 0.0;
    double dof_real = 0.0;
    std::int64_t dof = 0;
};

/// Spectrum minus its minimum.
std::vector<double> shifted_spectrum(const std::vector<double> &spectrum);

/// Statistics of the zero-shifted spectrum (or the raw one when `shift` is
/// false). Throws DegenerateError if the spectrum carries no weight.
SpectralStats spectral_stats(const std::vector<double> &spectrum, bool shift = true);
SpectralStats spectral_stats(const SimpleComponent &c);

/// Nearest integer, ties to even.
std::int64_t round_half_even(double x);

/// Real dimension of the automorphism group: (beta-1) N + beta N (N-1) / 2.
std::int64_t dim_automorphism(Field field, std::int64_t dim);

struct Projection {
    Eigen::MatrixXcd element;
    Eigen::VectorXd coefficients;
};

/// Orthogonal projection onto the span of a Hermitian basis that must be
/// orthonormal under Re Tr(A B) to 1e-10.
Projection project_into_component(const Eigen::MatrixXcd &a,
                                  const std::vector<Eigen::MatrixXcd> &basis);

/// I = Tr(A^2) / Tr_alpha(A^2) for the same element seen in the ambient and
/// the defining representation.
double index_constant(const Eigen::MatrixXcd &ambient, const FieldMatrix &defining);

double trace(const std::vector<double> &spectrum);
double purity(const std::vector<double> &spectrum);
double cube_trace(const std::vector<double> &spectrum);

/// Spectra of rho^T (x) rho and O (x) O^T, sorted, for use as a beta = 1
/// component.
std::pair<std::vector<double>, std::vector<double>>
spin_factor_reduce(const std::vector<double> &input_spectrum,
                   const std::vector<double> &observable_spectrum);

} // namespace jaws
