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
 * Random matrices over R, C and H: Gaussian, beta-Wishart, Haar, chi, and
 * the Marcenko-Pastur law.
 */

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jaws/field_matrix.hpp"
#include "jaws/rng.hpp"

namespace jaws {

/// Every real component of every scalar is an independent N(0, 1).
FieldMatrix gauss_matrix(Field field, std::size_t rows, std::size_t cols, RngState &rng);

struct WishartSample {
    Field field = Field::R;
    std::size_t dim = 0;
    std::size_t dof = 0;
    FieldMatrix matrix;
};

/**
 * Lower-trapezoidal Bartlett factor, dim x min(dim, dof).
 *
 * Entries use the unit-total-variance field Gaussian (components
 * N(0, 1/beta)), so L L^dagger has mean dof * I and beta * W_ii is
 * chi-squared with beta * dof degrees of freedom.
 */
FieldMatrix bartlett_factor(Field field, std::size_t dim, std::size_t dof, RngState &rng);

WishartSample wishart_bartlett(Field field, std::size_t dim, std::size_t dof, RngState &rng);

/// X X^dagger with X = gauss_matrix(dim, dof) / sqrt(beta).
WishartSample wishart_direct(Field field, std::size_t dim, std::size_t dof, RngState &rng);

/**
 * First k rows of a Haar-distributed element of O(N), U(N) or Sp(N).
 *
 * Rows of a Gaussian matrix are orthonormalized by modified Gram-Schmidt
 * with a positive real normalization, which is the QR construction with the
 * R-diagonal phase fixed.
 */
FieldMatrix haar_rows(Field field, std::size_t dim, std::size_t k, RngState &rng);

/// Haar element of SO(N) (determinant +1), U(N) or Sp(N).
FieldMatrix haar_group(Field field, std::size_t dim, RngState &rng);

double chi2_sample(double dof, RngState &rng);
double chi_sample(double dof, RngState &rng);

/// (gamma_minus, gamma_plus) = ((1 - sqrt g)^2, (1 + sqrt g)^2).
std::pair<double, double> marchenko_pastur_support(double gamma);
/// Continuous part of the density; 0 outside the open support.
double marchenko_pastur_pdf(double gamma, double lambda);
/// Point mass at 0, 1 - 1/gamma for gamma >= 1.
double marchenko_pastur_atom(double gamma);
/// Integral of ln(lambda) against the law, for 0 < gamma <= 1.
double mp_log_moment(double gamma);

/**
 * L1 distance between the histogram of `scaled_eigs` (eigenvalues of W/dof,
 * pooled over any number of draws) and the law, on `bins` equal bins over
 * the support. Values outside the support fall into the end bins.
 */
double marchenko_pastur_l1(const std::vector<double> &scaled_eigs, double gamma, std::size_t bins);

} // namespace jaws
