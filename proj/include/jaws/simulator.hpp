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
 * Exact Monte Carlo of the parameterized circuit on one simple component.
 *
 * The circuit is U = g0^dagger (prod_i g_i exp(theta_i A_i) g_i^dagger) h with
 * Haar conjugators and canonical generators: |0><1| - |1><0| over R, i|0><0|
 * over C, and the three quaternionic phases i, j, k on |0><0| over H (three
 * consecutive parameters share one conjugator).
 */

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jaws/algebra.hpp"
#include "jaws/field_matrix.hpp"
#include "jaws/rng.hpp"
#include "jaws/stats.hpp"

namespace jaws {

struct LandscapeSample {
    double loss = 0.0;
    std::vector<double> grad;
    Eigen::MatrixXd hessian; ///< empty unless requested
};

struct AnsatzInstance {
    SimpleComponent component;
    FieldMatrix g0;
    FieldMatrix h;
    std::vector<FieldMatrix> layers; ///< one conjugator per generator layer
    std::size_t num_params = 0;
    std::vector<double> theta; ///< radians, starts at 0

    std::size_t layer_of(std::size_t param) const;
};

AnsatzInstance build_ansatz(const SimpleComponent &c, RngState &rng);

/// Generator A_i in the defining representation (before conjugation).
FieldMatrix generator(Field field, std::size_t dim, std::size_t param);

FieldMatrix assemble_unitary(const AnsatzInstance &a, const std::vector<double> &theta);

/// I Re Tr(rho U O U^dagger) at a.theta.
double loss_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                 const std::vector<double> &o_eigs);
double loss_at(const AnsatzInstance &a, const std::vector<double> &theta,
               const std::vector<double> &rho_eigs, const std::vector<double> &o_eigs);

/// Exact derivatives at theta = 0.
std::vector<double> grad_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                              const std::vector<double> &o_eigs);
Eigen::MatrixXd hessian_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                             const std::vector<double> &o_eigs);

/**
 * One joint draw of loss, gradient and (optionally) Hessian at theta = 0.
 * Same law as build_ansatz followed by the exact evaluators, but drawn
 * directly in the observable frame, so only the rows the derivatives touch
 * are sampled.
 */
LandscapeSample draw_landscape(const SimpleComponent &c, const std::vector<double> &rho_eigs,
                               const std::vector<double> &o_eigs, RngState &rng,
                               bool with_hessian);

struct McLandscape {
    std::vector<LandscapeSample> samples;
    EmpiricalDistribution loss;
    std::vector<EmpiricalDistribution> grad;
    std::vector<EmpiricalDistribution> hessian_diag; ///< empty unless requested
};

/// Sample i uses rng.split(i).
McLandscape mc_landscape(const SimpleComponent &c, const std::vector<double> &rho_eigs,
                         const std::vector<double> &o_eigs, std::size_t n_samples,
                         const RngState &rng, bool with_hessian = false);

/// Whole-model draws: components are simulated independently (substream a
/// of the sample stream) and summed; gradients are mapped to global indices.
std::vector<LandscapeSample> simulate_model(const JawsModel &model, std::size_t n_samples,
                                            const RngState &rng, bool with_hessian = false);

/// I o_min Tr(rho), the smallest attainable loss; subtracting it gives z.
double loss_floor(const SimpleComponent &c);

struct PauliTerm {
    double coeff = 0.0;
    std::string pauli;
};

std::vector<PauliTerm> parse_pauli_text(const std::string &text);
std::vector<double> spectrum_from_pauli(const std::vector<PauliTerm> &terms);

} // namespace jaws
