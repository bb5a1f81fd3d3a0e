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

#include "jaws/field_matrix.hpp"
#include "jaws/randmat.hpp"

using namespace jaws;

TEST_CASE("quaternion units multiply per Hamilton's table") {
    const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * i == Quaternion(-1.0));
    CHECK(j * j == Quaternion(-1.0));
    CHECK(k * k == Quaternion(-1.0));
    CHECK(i * j * k == Quaternion(-1.0));
    CHECK(i * j == k);
    CHECK(j * i == -k);
}

TEST_CASE("quaternion norm is multiplicative") {
    RngState rng(3);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        const Quaternion b(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        CHECK((a * b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
    }
}

TEST_CASE("field product agrees with the complex embedding") {
    RngState rng(4);
    for (Field f : {Field::R, Field::C, Field::H}) {
        const FieldMatrix a = gauss_matrix(f, 3, 5, rng);
        const FieldMatrix b = gauss_matrix(f, 5, 4, rng);
        const Eigen::MatrixXcd want = complex_embedding(a) * complex_embedding(b);
        const Eigen::MatrixXcd got = complex_embedding(multiply(a, b));
        CHECK((want - got).norm() < 1e-12 * want.norm());
    }
}

TEST_CASE("adjoint reverses products") {
    RngState rng(5);
    const FieldMatrix a = gauss_matrix(Field::H, 4, 4, rng);
    const FieldMatrix b = gauss_matrix(Field::H, 4, 4, rng);
    FieldMatrix lhs = multiply(a, b).adjoint();
    lhs -= multiply(b.adjoint(), a.adjoint());
    CHECK(lhs.frobenius_norm() < 1e-12);
}

TEST_CASE("quaternion Hermitian eigenvalues pair up once") {
    RngState rng(6);
    const FieldMatrix x = gauss_matrix(Field::H, 5, 5, rng);
    const FieldMatrix h = multiply_adjoint(x, x);
    CHECK(h.is_hermitian());
    const std::vector<double> ev = hermitian_eigenvalues(h);
    REQUIRE(ev.size() == 5);
    double tr = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        tr += h.get(i, i).w;
    }
    double s = 0.0;
    for (double v : ev) {
        CHECK(v > 0.0);
        s += v;
    }
    CHECK(s == doctest::Approx(tr).epsilon(1e-10));
}

TEST_CASE("re_trace_product is the real Frobenius pairing") {
    RngState rng(7);
    const FieldMatrix a = gauss_matrix(Field::C, 3, 3, rng);
    CHECK(re_trace_product(a, a.adjoint()) == doctest::Approx(a.frobenius_norm() * a.frobenius_norm()));
}
