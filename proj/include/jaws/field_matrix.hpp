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
 * Field tags and dense matrices over R, C and H.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jaws/quaternion.hpp"

namespace jaws {

/// The associative field of a simple component; the value is beta.
enum class Field : int { R = 1, C = 2, H = 4 };

inline int beta(Field f) { return static_cast<int>(f); }
Field field_from_beta(int beta);
Field field_from_letter(const std::string &s);
char field_letter(Field f);

template <Field F> struct ScalarOf;
template <> struct ScalarOf<Field::R> { using type = double; };
template <> struct ScalarOf<Field::C> { using type = std::complex<double>; };
template <> struct ScalarOf<Field::H> { using type = Quaternion; };
template <Field F> using Scalar = typename ScalarOf<F>::type;

/**
 * Row-major dense matrix whose scalars are beta packed doubles.
 *
 * Rows are contiguous, so row inner products map straight onto the
 * `kernels::dotc` routines.
 */
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);

    static FieldMatrix identity(Field field, std::size_t n);

    Field field() const { return field_; }
    int beta() const { return jaws::beta(field_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double *data() { return data_.data(); }
    const double *data() const { return data_.data(); }
    double *row(std::size_t i) { return data_.data() + i * cols_ * beta(); }
    const double *row(std::size_t i) const { return data_.data() + i * cols_ * beta(); }
    double *entry(std::size_t i, std::size_t j) { return row(i) + j * beta(); }
    const double *entry(std::size_t i, std::size_t j) const { return row(i) + j * beta(); }

    /// Entry embedded in H; components outside the field read as 0.
    Quaternion get(std::size_t i, std::size_t j) const;
    /// Stores the components that belong to the field and drops the rest.
    void set(std::size_t i, std::size_t j, const Quaternion &q);

    template <class S> S *as() { return reinterpret_cast<S *>(data_.data()); }
    template <class S> const S *as() const {
        return reinterpret_cast<const S *>(data_.data());
    }

    FieldMatrix adjoint() const;
    FieldMatrix operator*(double s) const;
    FieldMatrix &operator+=(const FieldMatrix &o);
    FieldMatrix &operator-=(const FieldMatrix &o);

    double frobenius_norm() const;
    bool is_hermitian(double tol = 1e-10) const;

  private:
    Field field_ = Field::R;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// a * b^dagger.
FieldMatrix multiply_adjoint(const FieldMatrix &a, const FieldMatrix &b);
/// a * b.
FieldMatrix multiply(const FieldMatrix &a, const FieldMatrix &b);

/// Complex matrix of the same linear map. H entries w + xi + yj + zk become
/// the 2x2 blocks [[a, b], [-conj(b), conj(a)]] with a = w + xi, b = y + zi.
Eigen::MatrixXcd complex_embedding(const FieldMatrix &m);

/// Eigenvalues of a Hermitian matrix, ascending. For H the Kramers pairs of
/// the complex embedding are merged so the result has rows() entries.
std::vector<double> hermitian_eigenvalues(const FieldMatrix &m);

/// Singular values, descending, with the same pairing rule for H.
std::vector<double> singular_values(const FieldMatrix &m);

/// Real part of the trace of m1 * m2.
double re_trace_product(const FieldMatrix &m1, const FieldMatrix &m2);

} // namespace jaws
