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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "jaws/error.hpp"
#include "jaws/landscape.hpp"
#include "jaws/randmat.hpp"
#include "jaws/stats.hpp"
#include "jaws/wishart_process.hpp"

using namespace jaws;

namespace {

// Observable with `ones` unit eigenvalues and zeros elsewhere: dof_real = ones.
std::vector<double> projector(std::size_t n, std::size_t ones) {
    std::vector<double> o(n, 0.0);
    std::fill(o.end() - static_cast<std::ptrdiff_t>(ones), o.end(), 1.0);
    return o;
}

std::vector<double> pure(std::size_t n, double t = 1.0) {
    std::vector<double> r(n, 0.0);
    r[0] = t;
    return r;
}

SimpleComponent sector(Field f, std::vector<double> o, std::vector<double> rho, std::size_t p = 1,
                       double index = 1.0) {
    SimpleComponent c;
    c.field = f;
    c.dim = o.size();
    c.index = index;
    c.observable_spectrum = std::move(o);
    c.input_spectrum = std::move(rho);
    c.sector_params = p;
    return c;
}

JawsModel single(const SimpleComponent &c) {
    JawsModel m;
    m.components = {c};
    m.total_params = c.sector_params;
    return m;
}

std::vector<double> totals(const JawsModel &m, std::size_t n, std::uint64_t seed) {
    RngState rng(seed);
    std::vector<double> t;
    t.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        t.push_back(sample_loss(m, rng).total);
    }
    return t;
}

} // namespace

TEST_CASE("mean loss is I o-bar Tr(rho) summed over components") {
    JawsModel m;
    m.components = {sector(Field::C, projector(6, 2), {0.5, 0.3, 0.2, 0, 0, 0}, 1, 2.0),
                    sector(Field::R, {0.0, 1.0, 3.0, 4.0}, {0.0, 1.0, 1.0, 0.0})};
    m.total_params = 1;
    const std::size_t n = 100000;
    const EmpiricalDistribution e(totals(m, n, 51));
    const double want = 2.0 * (2.0 / 6.0) * 1.0 + 1.0 * 2.0 * 2.0;
    CHECK(std::abs(e.mean() - want) < 5.0 * std::sqrt(e.variance() / n));
}

TEST_CASE("rank-1 input with rank-1 observable is Porter-Thomas") {
    const SimpleComponent c = sector(Field::C, projector(8, 1), pure(8));
    const EmpiricalDistribution e(totals(single(c), 10000, 52));
    const double mean = 1.0 / 8.0;
    const KsResult ks = ks_one_sample(e, [&](double z) { return 1.0 - std::exp(-z / mean); });
    CHECK(ks.p_value > 0.01);
}

TEST_CASE("loss variance matches the closed form over C") {
    const SimpleComponent c = sector(Field::C, projector(10, 3), {0.4, 0.3, 0.2, 0.1, 0, 0, 0, 0, 0, 0});
    const JawsModel m = single(c);
    const std::size_t n = 1000000;
    const EmpiricalDistribution e(totals(m, n, 53));
    const double mean = 0.3 * 1.0;
    CHECK(std::abs(e.mean() - mean) < 3.0 * std::sqrt(e.variance() / n));
    CHECK(e.variance() == doctest::Approx(loss_variance(m)).epsilon(0.03));
    // Second-order standard error for a gamma-like variable.
    const std::vector<double> &s = e.sorted();
    double m4 = 0.0;
    for (double v : s) {
        m4 += std::pow(v - e.mean(), 4);
    }
    m4 /= double(n);
    const double se = std::sqrt((m4 - e.variance() * e.variance()) / double(n));
    CHECK(std::abs(e.variance() - loss_variance(m)) < 5.0 * se);
}

TEST_CASE("stored Wishart diagonals reconstruct the total exactly") {
    JawsModel m;
    m.components = {sector(Field::H, {0.0, 0.5, 1.0, 2.0, 2.5}, {0.2, 0.0, 0.3, 0.5, 0.0}, 1, 1.5),
                    sector(Field::C, projector(3, 2), {1.0, 1.0, 1.0})};
    m.total_params = 1;
    RngState rng(54);
    for (int t = 0; t < 100; ++t) {
        const LossDraw d = sample_loss(m, rng);
        double total = 0.0;
        for (std::size_t a = 0; a < 2; ++a) {
            const SimpleComponent &c = m.components[a];
            const SpectralStats st = spectral_stats(c);
            const double pref = c.index * st.mean_eig / double(st.dof);
            double z = 0.0;
            std::size_t k = 0;
            for (double r : c.input_spectrum) {
                if (r > 0.0) {
                    z += pref * r * d.w_diag[a][k++];
                }
            }
            CHECK(k == d.w_diag[a].size());
            CHECK(z == doctest::Approx(d.z[a]).epsilon(1e-14));
            total += z;
        }
        CHECK(total == doctest::Approx(d.total).epsilon(1e-14));
    }
}

TEST_CASE("components are drawn independently") {
    JawsModel m;
    m.components = {sector(Field::C, projector(4, 2), pure(4)), sector(Field::R, projector(5, 3), pure(5))};
    m.total_params = 1;
    RngState rng(55);
    const std::size_t n = 100000;
    std::vector<double> prod, a, b;
    for (std::size_t k = 0; k < n; ++k) {
        const LossDraw d = sample_loss(m, rng);
        a.push_back(d.z[0]);
        b.push_back(d.z[1]);
    }
    const EmpiricalDistribution ea(a), eb(b);
    for (std::size_t k = 0; k < n; ++k) {
        prod.push_back((a[k] - ea.mean()) * (b[k] - eb.mean()));
    }
    const EmpiricalDistribution ep(prod);
    CHECK(std::abs(ep.mean()) < 5.0 * std::sqrt(ep.variance() / n));
}

TEST_CASE("scaling the observable scales the loss draws") {
    const SimpleComponent c = sector(Field::R, {0.0, 0.3, 1.0, 1.7}, {0.7, 0.3, 0.0, 0.0});
    SimpleComponent c2 = c, c3 = c;
    for (double &v : c2.observable_spectrum) {
        v *= 2.0;
    }
    for (double &v : c3.observable_spectrum) {
        v *= 3.0;
    }
    RngState r1(56), r2(56), r3(56);
    for (int t = 0; t < 50; ++t) {
        const double z = sample_loss(single(c), r1).total;
        CHECK(sample_loss(single(c2), r2).total == 2.0 * z);
        CHECK(sample_loss(single(c3), r3).total == doctest::Approx(3.0 * z).epsilon(1e-14));
    }
}

TEST_CASE("sample_loss rejects zero input and degenerate observable") {
    RngState rng(57);
    CHECK_THROWS_AS(sample_loss(single(sector(Field::C, projector(3, 1), {0, 0, 0})), rng), DegenerateError);
    CHECK_THROWS_AS(sample_loss(single(sector(Field::C, {1.0, 1.0, 1.0}, pure(3))), rng), ValidationError);
}

TEST_CASE("joint inputs share one Wishart draw") {
    const SimpleComponent c = sector(Field::C, projector(4, 2), pure(4));
    const JawsModel m = single(c);
    RngState rng(58);
    const std::vector<std::vector<std::vector<double>>> in = {{{1.0, 0.0, 0.0, 0.0}},
                                                              {{2.0, 0.0, 0.0, 0.0}},
                                                              {{0.0, 1.0, 0.0, 0.0}}};
    const std::vector<LossDraw> d = sample_loss(m, in, rng);
    REQUIRE(d.size() == 3);
    CHECK(d[1].total == 2.0 * d[0].total);
    CHECK(d[2].w_diag[0][0] != d[0].w_diag[0][0]);
}

TEST_CASE("rank-1 loss density: exponential case, normalization and mode") {
    const SimpleComponent e = sector(Field::C, {0.0, 0.0, 0.0, 4.0}, pure(4));
    CHECK(loss_pdf_rank1(e, 0.0) == doctest::Approx(1.0));
    CHECK(loss_pdf_rank1(e, 1.3) == doctest::Approx(std::exp(-1.3)).epsilon(1e-13));
    CHECK_THROWS_AS(loss_pdf_rank1(e, -0.1), ValidationError);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const SimpleComponent c = sector(f, {0.0, 0.2, 0.9, 1.0, 1.4}, pure(5, 0.8), 1, 1.3);
        const SpectralStats st = spectral_stats(c);
        const double mean = c.index * st.mean_eig * 0.8;
        const double br = c.beta() * st.dof_real;
        const int n = 400000;
        const double hi = 40.0 * mean, h = hi / n;
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += loss_pdf_rank1(c, (k + 0.5) * h);
        }
        CHECK(s * h == doctest::Approx(1.0).epsilon(1e-4));
        if (br > 2.0) {
            const double mode = mean * (br - 2.0) / br;
            CHECK(loss_pdf_rank1(c, mode) > loss_pdf_rank1(c, mode * 1.01));
            CHECK(loss_pdf_rank1(c, mode) > loss_pdf_rank1(c, mode * 0.99));
        }
        CHECK(loss_cdf_rank1(c, mean) == doctest::Approx(gamma_cdf(mean, br / 2.0, 2.0 * mean / br)));
    }
}

TEST_CASE("sampled losses follow the rank-1 density") {
    for (Field f : {Field::R, Field::C, Field::H}) {
        const SimpleComponent c = sector(f, projector(7, 3), pure(7));
        const EmpiricalDistribution e(totals(single(c), 10000, 59));
        const KsResult ks = ks_one_sample(e, [&](double z) { return loss_cdf_rank1(c, z); });
        CHECK(ks.statistic < ks_critical_value(10000, 0.01));
    }
}

TEST_CASE("conditional gradient: zero loss, variance and symmetry") {
    const SimpleComponent c = sector(Field::C, {0.0, 0.5, 1.0, 1.0, 2.0, 3.0}, pure(6), 3, 1.2);
    const JawsModel m = single(c);
    RngState rng(60);
    for (double v : sample_gradient_given_loss(m, {0.0}, rng).grad) {
        CHECK(v == 0.0);
    }
    const SpectralStats st = spectral_stats(c);
    const double z = 0.7;
    const double a = 2.0 * c.index * st.std_eig * 1.0 / 6.0;
    const double want = a * a * (2.0 * z / (c.index * st.mean_eig)) * 1.0 * 2.0;
    std::vector<double> x;
    for (int t = 0; t < 1000000 / 3; ++t) {
        for (double v : sample_gradient_given_loss(m, {z}, rng).grad) {
            x.push_back(v);
        }
    }
    const EmpiricalDistribution e(x);
    CHECK(e.variance() == doctest::Approx(want).epsilon(0.05));
    CHECK(std::abs(sample_skewness(x)) < 0.02);
    CHECK_THROWS_AS(sample_gradient_given_loss(m, {-1.0}, rng), ValidationError);
    CHECK_THROWS_AS(sample_gradient_given_loss(m, {1.0, 1.0}, rng), ValidationError);
}

TEST_CASE("gradient marginalized over the loss has the product-law variance") {
    for (Field f : {Field::R, Field::C, Field::H}) {
        const SimpleComponent c = sector(f, {0.0, 1.0, 2.0, 2.0, 5.0}, pure(5, 0.6), 1);
        const JawsModel m = single(c);
        RngState rng(61);
        std::vector<double> g;
        for (int t = 0; t < 200000; ++t) {
            const LossDraw d = sample_loss(m, rng);
            g.push_back(sample_gradient_given_loss(m, d.z, rng).grad[0]);
        }
        const EmpiricalDistribution e(g);
        const SpectralStats st = spectral_stats(c);
        const double b = c.beta();
        const double a = 2.0 * st.std_eig * 0.6 / 5.0;
        // E[z] uses the integer dof drawn by the sampler, which is unbiased.
        const double want = a * a * b * 0.6 * std::max(2.0, b);
        CHECK(std::abs(e.mean()) < 5.0 * std::sqrt(e.variance() / 200000.0));
        CHECK(e.variance() == doctest::Approx(want).epsilon(0.05));
    }
}

TEST_CASE("mixed inputs are rejected by the conditional samplers") {
    const SimpleComponent c = sector(Field::C, projector(4, 2), {0.5, 0.5, 0.0, 0.0}, 2);
    const JawsModel m = single(c);
    RngState rng(62);
    CHECK_THROWS_AS(sample_gradient_given_loss(m, {1.0}, rng), UnsupportedError);
    CHECK_THROWS_AS(sample_hessian_at_critical(m, {1.0}, rng), UnsupportedError);
    CHECK_THROWS_AS(loss_pdf_rank1(c, 1.0), UnsupportedError);
}

TEST_CASE("conditional Hessian is symmetric and vanishes at zero loss") {
    JawsModel m;
    m.components = {sector(Field::H, projector(5, 2), pure(5), 3), sector(Field::R, projector(4, 3), pure(4), 2)};
    m.total_params = 5;
    m.fully_controllable = true;
    RngState rng(63);
    const ConditionalHessianDraw z0 = sample_hessian_at_critical(m, {0.0, 0.0}, rng);
    CHECK(z0.hessian.isZero(0.0));
    for (int t = 0; t < 100; ++t) {
        const ConditionalHessianDraw d = sample_hessian_at_critical(m, {0.4, 1.1}, rng);
        CHECK(d.hessian.rows() == 5);
        CHECK((d.hessian - d.hessian.transpose()).cwiseAbs().maxCoeff() == 0.0);
        // Distinct sectors do not couple.
        CHECK(d.hessian.block(0, 3, 3, 2).isZero(0.0));
        CHECK(d.g[0].size() == 3);
        CHECK(d.chi[1].size() == 2);
    }
}

TEST_CASE("positive semidefinite Hessian draws have non-negative Gaussians") {
    const SimpleComponent c = sector(Field::C, projector(6, 2), pure(6), 3);
    const JawsModel m = single(c);
    RngState rng(64);
    int psd = 0;
    for (int t = 0; t < 10000; ++t) {
        const ConditionalHessianDraw d = sample_hessian_at_critical(m, {0.5}, rng);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.hessian);
        if (es.eigenvalues().minCoeff() >= -1e-12 * d.hessian.norm()) {
            ++psd;
            CHECK(*std::min_element(d.g[0].begin(), d.g[0].end()) >= 0.0);
        }
    }
    CHECK(psd > 0);
}

TEST_CASE("Hessian diagonal second moment") {
    const SimpleComponent c = sector(Field::C, projector(9, 4), pure(9), 2);
    const JawsModel m = single(c);
    RngState rng(65);
    const double z = 0.3;
    std::vector<double> sq;
    for (int t = 0; t < 100000; ++t) {
        const double h = sample_hessian_at_critical(m, {z}, rng).hessian(1, 1);
        sq.push_back(h * h);
    }
    const double pf = hessian_prefactor(c, z);
    const double k = 2.0 * 4.0;
    const double want = pf * pf * 1.0 * 2.0 * k * (k + 2.0);
    CHECK(EmpiricalDistribution(sq).mean() == doctest::Approx(want).epsilon(0.05));
}

TEST_CASE("regularized Hessian is PSD with rank min(p, beta r)") {
    RngState rng(66);
    for (auto [ones, p] : {std::pair<std::size_t, std::size_t>{4, 6}, {1, 5}, {2, 3}}) {
        const SimpleComponent c = sector(Field::C, projector(8, ones), pure(8), p);
        for (int t = 0; t < 50; ++t) {
            const Eigen::MatrixXd h = regularized_hessian_sample(c, rng);
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
            const Eigen::VectorXd ev = es.eigenvalues();
            std::size_t rank = 0;
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                rank += ev(i) > 1e-10 * ev.maxCoeff() ? 1 : 0;
            }
            CHECK(rank == std::min<std::size_t>(p, 2 * ones));
            if (2 * ones >= p) {
                CHECK(ev.minCoeff() >= -1e-10);
            }
        }
    }
    CHECK_THROWS_AS(regularized_hessian_sample(sector(Field::C, projector(3, 1), pure(3), 0), rng),
                    ValidationError);
}

TEST_CASE("real Wishart with 2p dof follows Marcenko-Pastur at ratio one half") {
    RngState rng(67);
    const std::size_t p = 200, dof = 400;
    std::vector<double> pooled;
    for (int t = 0; t < 20; ++t) {
        for (double v : hermitian_eigenvalues(wishart_bartlett(Field::R, p, dof, rng).matrix)) {
            pooled.push_back(v / dof);
        }
    }
    CHECK(marchenko_pastur_l1(pooled, 0.5, 20) <= 0.05);
}
