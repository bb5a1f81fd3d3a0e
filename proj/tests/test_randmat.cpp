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

#include <cmath>
#include <numbers>

#include "jaws/error.hpp"
#include "jaws/randmat.hpp"
#include "jaws/stats.hpp"

using namespace jaws;

namespace {

// Closed form of the Marcenko-Pastur log moment for 0 < g < 1.
double mp_log_oracle(double g) { return (g - 1.0) / g * std::log1p(-g) - 1.0; }

} // namespace

TEST_CASE("real Gaussian entries have unit variance") {
    RngState rng(31);
    const FieldMatrix g = gauss_matrix(Field::R, 1000, 1, rng);
    std::vector<double> v(g.data(), g.data() + 1000);
    const EmpiricalDistribution e(v);
    CHECK(std::abs(e.mean()) < 4.0 / std::sqrt(1000.0));
    CHECK(e.variance() == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("complex Gaussian parts each have unit variance") {
    RngState rng(32);
    const FieldMatrix g = gauss_matrix(Field::C, 2000, 1, rng);
    std::vector<double> re, im;
    for (std::size_t i = 0; i < 2000; ++i) {
        re.push_back(g.entry(i, 0)[0]);
        im.push_back(g.entry(i, 0)[1]);
    }
    CHECK(EmpiricalDistribution(re).variance() == doctest::Approx(1.0).epsilon(0.1));
    CHECK(EmpiricalDistribution(im).variance() == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("quaternion Gaussian squared norm is chi-squared with 4 dof") {
    RngState rng(33);
    const FieldMatrix g = gauss_matrix(Field::H, 5000, 1, rng);
    std::vector<double> n2;
    for (std::size_t i = 0; i < 5000; ++i) {
        n2.push_back(g.get(i, 0).norm2());
    }
    const KsResult ks = ks_one_sample(EmpiricalDistribution(n2), [](double x) { return gamma_cdf(x, 2.0, 2.0); });
    CHECK(ks.p_value > 0.01);
}

TEST_CASE("1x1 Bartlett Wishart is chi-squared over beta") {
    RngState rng(34);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const double b = beta(f);
        std::vector<double> w;
        for (int t = 0; t < 5000; ++t) {
            w.push_back(b * wishart_bartlett(f, 1, 3, rng).matrix.entry(0, 0)[0]);
        }
        const KsResult ks =
            ks_one_sample(EmpiricalDistribution(w), [&](double x) { return gamma_cdf(x, 1.5 * b, 2.0); });
        CHECK(ks.p_value > 0.01);
    }
}

TEST_CASE("Bartlett Wishart has mean dof times identity") {
    RngState rng(35);
    const std::size_t n = 3, r = 4, samples = 100000;
    for (Field f : {Field::R, Field::C, Field::H}) {
        std::vector<std::vector<double>> acc(n * n);
        for (std::size_t t = 0; t < samples; ++t) {
            const FieldMatrix w = wishart_bartlett(f, n, r, rng).matrix;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    acc[i * n + j].push_back(w.entry(i, j)[0]);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const EmpiricalDistribution e(acc[i * n + j]);
                const double se = std::sqrt(e.variance() / samples);
                CHECK(std::abs(e.mean() - (i == j ? double(r) : 0.0)) < 5.0 * se);
            }
        }
    }
}

TEST_CASE("Wishart rank is min(dim, dof)") {
    RngState rng(36);
    for (Field f : {Field::R, Field::C, Field::H}) {
        for (auto [n, r] : {std::pair<std::size_t, std::size_t>{5, 2}, {4, 7}, {3, 3}}) {
            const FieldMatrix w = wishart_bartlett(f, n, r, rng).matrix;
            const std::vector<double> sv = singular_values(w);
            std::size_t rank = 0;
            for (double s : sv) {
                rank += s > 1e-8 ? 1 : 0;
            }
            CHECK(rank == std::min(n, r));
        }
    }
}

TEST_CASE("direct Wishart with one real dof is singular") {
    RngState rng(37);
    const FieldMatrix w = wishart_direct(Field::R, 2, 1, rng).matrix;
    const double det = w.entry(0, 0)[0] * w.entry(1, 1)[0] - w.entry(0, 1)[0] * w.entry(1, 0)[0];
    CHECK(std::abs(det) < 1e-12 * (1.0 + w.frobenius_norm() * w.frobenius_norm()));
}

TEST_CASE("direct Wishart trace concentrates") {
    RngState rng(38);
    const FieldMatrix w = wishart_direct(Field::C, 100, 100, rng).matrix;
    double tr = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        tr += w.entry(i, i)[0];
    }
    CHECK(tr / 1e4 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("Bartlett and direct samplers agree in distribution") {
    RngState rng(39);
    for (Field f : {Field::R, Field::C, Field::H}) {
        std::vector<double> a00, a01, b00, b01;
        for (int t = 0; t < 10000; ++t) {
            const FieldMatrix wa = wishart_bartlett(f, 6, 9, rng).matrix;
            const FieldMatrix wb = wishart_direct(f, 6, 9, rng).matrix;
            a00.push_back(wa.entry(0, 0)[0]);
            a01.push_back(wa.entry(0, 1)[0]);
            b00.push_back(wb.entry(0, 0)[0]);
            b01.push_back(wb.entry(0, 1)[0]);
        }
        CHECK(ks_two_sample(EmpiricalDistribution(a00), EmpiricalDistribution(b00)).p_value > 0.01);
        CHECK(ks_two_sample(EmpiricalDistribution(a01), EmpiricalDistribution(b01)).p_value > 0.01);
    }
}

TEST_CASE("dropping the first Bartlett column is a small perturbation at large dof") {
    RngState rng(40);
    const std::size_t n = 4, r = 10000;
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        FieldMatrix l = bartlett_factor(Field::C, n, r, rng);
        const FieldMatrix w = multiply_adjoint(l, l);
        for (std::size_t i = 0; i < n; ++i) {
            l.entry(i, 0)[0] = 0.0;
            l.entry(i, 0)[1] = 0.0;
        }
        FieldMatrix d = multiply_adjoint(l, l);
        d -= w;
        double mx = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 1; j < n; ++j) {
                mx = std::max(mx, d.get(i, j).norm());
            }
        }
        // Entries of W are O(r); the change away from row 0 is O(1).
        ok += mx / r / std::sqrt(double(r)) < 0.1 ? 1 : 0;
    }
    CHECK(ok >= 99);
}

TEST_CASE("Haar samples are unitary and special orthogonal over R") {
    RngState rng(41);
    for (Field f : {Field::R, Field::C, Field::H}) {
        for (int t = 0; t < 20; ++t) {
            const FieldMatrix u = haar_group(f, 7, rng);
            FieldMatrix d = multiply_adjoint(u, u);
            d -= FieldMatrix::identity(f, 7);
            CHECK(d.frobenius_norm() < 1e-10);
            FieldMatrix e = multiply(u.adjoint(), u);
            e -= FieldMatrix::identity(f, 7);
            CHECK(e.frobenius_norm() < 1e-10);
            if (f == Field::R) {
                Eigen::MatrixXd a(7, 7);
                for (int i = 0; i < 7; ++i) {
                    for (int j = 0; j < 7; ++j) {
                        a(i, j) = u.entry(i, j)[0];
                    }
                }
                CHECK(a.determinant() == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("Haar first moment averages to the normalized trace") {
    RngState rng(42);
    const std::size_t n = 3, samples = 100000;
    for (Field f : {Field::R, Field::C, Field::H}) {
        FieldMatrix m(f, n, n);
        m.set(0, 0, 2.0);
        m.set(1, 1, -1.0);
        m.set(2, 2, 0.5);
        m.set(0, 1, 0.3);
        m.set(1, 0, 0.3);
        std::vector<std::vector<double>> acc(n * n);
        for (std::size_t t = 0; t < samples; ++t) {
            const FieldMatrix u = haar_group(f, n, rng);
            const FieldMatrix x = multiply(multiply(u, m), u.adjoint());
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    acc[i * n + j].push_back(x.entry(i, j)[0]);
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const EmpiricalDistribution e(acc[i * n + j]);
                const double want = i == j ? 1.5 / 3.0 : 0.0;
                CHECK(std::abs(e.mean() - want) < 5.0 * std::sqrt(e.variance() / samples));
            }
        }
    }
}

TEST_CASE("Haar measure is left invariant") {
    RngState rng(43);
    const FieldMatrix g = haar_group(Field::C, 4, rng);
    std::vector<double> a, b;
    for (int t = 0; t < 5000; ++t) {
        const FieldMatrix u = haar_group(Field::C, 4, rng);
        const FieldMatrix v = multiply(g, haar_group(Field::C, 4, rng));
        // Tr(rho U O U^dagger) with rho = |0><0| and O = diag(0, 1, 2, 3).
        double la = 0.0, lb = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            la += double(k) * u.get(0, k).norm2();
            lb += double(k) * v.get(0, k).norm2();
        }
        a.push_back(la);
        b.push_back(lb);
    }
    CHECK(ks_two_sample(EmpiricalDistribution(a), EmpiricalDistribution(b)).p_value > 0.01);
}

TEST_CASE("chi-squared moments and the exponential special case") {
    RngState rng(44);
    std::vector<double> x;
    for (int t = 0; t < 20000; ++t) {
        x.push_back(chi2_sample(2.0, rng));
    }
    const EmpiricalDistribution e(x);
    CHECK(std::abs(e.mean() - 2.0) < 5.0 * 2.0 / std::sqrt(20000.0));
    CHECK(ks_one_sample(e, [](double v) { return 1.0 - std::exp(-v / 2.0); }).p_value > 0.01);
    CHECK_THROWS_AS(chi2_sample(0.0, rng), ValidationError);
}

TEST_CASE("chi concentration bound holds empirically") {
    RngState rng(45);
    const double d = 400.0;
    for (double t : {0.5, 1.0, 1.5}) {
        const double dev = std::pow(d, 0.25) * (4.0 / 3.0 * t + t * t / std::pow(d, 0.25));
        int hits = 0;
        const int n = 20000;
        for (int k = 0; k < n; ++k) {
            hits += std::abs(chi_sample(d, rng) - std::sqrt(d)) >= dev ? 1 : 0;
        }
        const double bound = 2.0 * std::exp(-std::sqrt(d) * t * t);
        CHECK(double(hits) / n <= bound + 3.0 * std::sqrt(bound / n) + 1.0 / n);
    }
}

TEST_CASE("Marcenko-Pastur support, density and atom") {
    auto [lo, hi] = marchenko_pastur_support(1.0);
    CHECK(lo == doctest::Approx(0.0));
    CHECK(hi == doctest::Approx(4.0));
    CHECK(marchenko_pastur_pdf(1.0, 4.0) == 0.0);
    CHECK(marchenko_pastur_pdf(1.0, 2.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-14));
    auto [l2, h2] = marchenko_pastur_support(0.25);
    CHECK(l2 == doctest::Approx(0.25));
    CHECK(h2 == doctest::Approx(2.25));
    CHECK(marchenko_pastur_atom(0.25) == 0.0);
    CHECK(marchenko_pastur_atom(2.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(marchenko_pastur_support(0.0), ValidationError);
}

TEST_CASE("Marcenko-Pastur density integrates to one") {
    for (double g : {0.1, 0.5, 0.9}) {
        auto [lo, hi] = marchenko_pastur_support(g);
        const int n = 200000;
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += marchenko_pastur_pdf(g, lo + (hi - lo) * (k + 0.5) / n);
        }
        CHECK(s * (hi - lo) / n == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("Marcenko-Pastur log moment") {
    CHECK(mp_log_moment(1.0) == doctest::Approx(-1.0).epsilon(1e-8));
    for (double g : {0.01, 0.1, 0.3, 0.5, 0.7, 0.95}) {
        CHECK(std::abs(mp_log_moment(g) - mp_log_oracle(g)) < 1e-8);
    }
    CHECK(std::abs(mp_log_moment(1e-6)) < 1e-5);
    double prev = 0.0;
    for (int k = 1; k <= 50; ++k) {
        const double v = mp_log_moment(k / 50.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(mp_log_moment(1.5), UnsupportedError);
}

TEST_CASE("Wishart spectra match the Marcenko-Pastur log moment") {
    RngState rng(46);
    const std::size_t n = 200, r = 400;
    const FieldMatrix w = wishart_bartlett(Field::C, n, r, rng).matrix;
    double s = 0.0;
    for (double v : hermitian_eigenvalues(w)) {
        s += std::log(v / r);
    }
    CHECK(s / n == doctest::Approx(mp_log_oracle(0.5)).epsilon(0.02));
}

TEST_CASE("seeded streams replay bit-exactly and substreams differ") {
    RngState a(99), b(99);
    const FieldMatrix wa = wishart_bartlett(Field::H, 4, 5, a).matrix;
    const FieldMatrix wb = wishart_bartlett(Field::H, 4, 5, b).matrix;
    for (std::size_t k = 0; k < 4 * 4 * 4; ++k) {
        CHECK(wa.data()[k] == wb.data()[k]);
    }
    RngState s0 = a.split(0), s0b = RngState(99).split(0), s1 = a.split(1);
    const double x0 = s0.normal();
    CHECK(x0 == s0b.normal());
    CHECK(x0 != s1.normal());
}

TEST_CASE("Marcenko-Pastur histogram distance") {
    RngState rng(47);
    for (Field f : {Field::R, Field::C, Field::H}) {
        std::vector<double> pooled;
        for (int t = 0; t < 20; ++t) {
            for (double v : hermitian_eigenvalues(wishart_bartlett(f, 200, 400, rng).matrix)) {
                pooled.push_back(v / 400.0);
            }
        }
        CHECK(marchenko_pastur_l1(pooled, 0.5, 20) <= 0.05);
    }
    // All mass in one bin misses the rest of the law.
    CHECK(marchenko_pastur_l1({1.0, 1.0, 1.0}, 0.5, 20) > 1.0);
    CHECK_THROWS_AS(marchenko_pastur_l1({1.0}, 2.0, 10), ValidationError);
}
