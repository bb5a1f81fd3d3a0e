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
 * Asymptotic joint law of loss, gradient and Hessian as a Wishart process.
 */

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "jaws/algebra.hpp"
#include "jaws/rng.hpp"

namespace jaws {

struct LossDraw {
    std::vector<double> z; ///< per component, relative to the spectrum floor
    double total = 0.0;
    /// Diagonal Wishart entries W_mumu drawn for each component, one per
    /// index mu in the support of the input spectrum, in index order.
    std::vector<std::vector<double>> w_diag;
};

struct ConditionalGradientDraw {
    std::vector<double> grad; ///< length total_params
    std::vector<double> z;
};

struct ConditionalHessianDraw {
    Eigen::MatrixXd hessian; ///< total_params x total_params, symmetric
    std::vector<double> z;
    /// Per component, the Gaussian and chi factors of its parameters.
    std::vector<std::vector<double>> g;
    std::vector<std::vector<double>> chi;
};

/// Per-component Wishart draw of Tr(rho W) in the eigenbasis of rho.
LossDraw sample_loss(const JawsModel &model, RngState &rng);

/**
 * Joint draw for several inputs sharing one W per component. inputs[k][a]
 * is the spectrum of input k on component a, in a common eigenbasis.
 */
std::vector<LossDraw> sample_loss(const JawsModel &model,
                                  const std::vector<std::vector<std::vector<double>>> &inputs,
                                  RngState &rng);

/// Density of z for one component with rank-1 input: gamma with shape
/// beta r / 2 and mean I o-bar Tr(rho).
double loss_pdf_rank1(const SimpleComponent &c, double z);
double loss_cdf_rank1(const SimpleComponent &c, double z);

/// Gradient given per-component losses z (rank-1 inputs only).
ConditionalGradientDraw sample_gradient_given_loss(const JawsModel &model,
                                                   const std::vector<double> &z, RngState &rng);

/// Hessian given z and a vanishing gradient (rank-1 inputs only).
ConditionalHessianDraw sample_hessian_at_critical(const JawsModel &model,
                                                  const std::vector<double> &z, RngState &rng);

/// N^-1 sqrt(S) W sqrt(S): S diagonal chi^2(max(2, beta)), W real Wishart
/// of dimension p with beta r degrees of freedom.
Eigen::MatrixXd regularized_hessian_sample(const SimpleComponent &c, RngState &rng);

/// Prefactors multiplying G chi (gradient) and G chi W (Hessian) at loss z.
double gradient_prefactor(const SimpleComponent &c, double z);
double hessian_prefactor(const SimpleComponent &c, double z);

} // namespace jaws
