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

#include "jaws/field_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "jaws/error.hpp"
#include "jaws/kernels.hpp"

namespace jaws {

Field field_from_beta(int b) {
    switch (b) {
    case 1:
        return Field::R;
    case 2:
        return Field::C;
    case 4:
        return Field::H;
    default:
        throw ValidationError("field tag beta must be 1, 2 or 4, got " + std::to_string(b));
    }
}

Field field_from_letter(const std::string &s) {
    if (s == "R") {
        return Field::R;
    }
    if (s == "C") {
        return Field::C;
    }
    if (s == "H") {
        return Field::H;
    }
    throw ValidationError("field must be one of \"R\", \"C\", \"H\", got \"" + s + "\"");
}

char field_letter(Field f) {
    switch (f) {
    case Field::R:
        return 'R';
    case Field::C:
        return 'C';
    default:
        return 'H';
    }
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols * static_cast<std::size_t>(jaws::beta(field)), 0.0) {}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entry(i, i)[0] = 1.0;
    }
    return m;
}

Quaternion FieldMatrix::get(std::size_t i, std::size_t j) const {
    const double *e = entry(i, j);
    Quaternion q;
    q.w = e[0];
    if (beta() >= 2) {
        q.x = e[1];
    }
    if (beta() == 4) {
        q.y = e[2];
        q.z = e[3];
    }
    return q;
}

void FieldMatrix::set(std::size_t i, std::size_t j, const Quaternion &q) {
    double *e = entry(i, j);
    e[0] = q.w;
    if (beta() >= 2) {
        e[1] = q.x;
    }
    if (beta() == 4) {
        e[2] = q.y;
        e[3] = q.z;
    }
}

FieldMatrix FieldMatrix::adjoint() const {
    FieldMatrix out(field_, cols_, rows_);
    const int b = beta();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const double *src = entry(i, j);
            double *dst = out.entry(j, i);
            dst[0] = src[0];
            for (int c = 1; c < b; ++c) {
                dst[c] = -src[c];
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(double s) const {
    FieldMatrix out(*this);
    for (double &v : out.data_) {
        v *= s;
    }
    return out;
}

FieldMatrix &FieldMatrix::operator+=(const FieldMatrix &o) {
    if (o.field_ != field_ || o.rows_ != rows_ || o.cols_ != cols_) {
        throw ValidationError("matrix shape mismatch in +=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

FieldMatrix &FieldMatrix::operator-=(const FieldMatrix &o) {
    if (o.field_ != field_ || o.rows_ != rows_ || o.cols_ != cols_) {
        throw ValidationError("matrix shape mismatch in -=");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

double FieldMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) {
        s += v * v;
    }
    return std::sqrt(s);
}

bool FieldMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            const Quaternion d = get(i, j) - get(j, i).conj();
            if (d.norm() > tol) {
                return false;
            }
        }
    }
    return true;
}

FieldMatrix multiply_adjoint(const FieldMatrix &a, const FieldMatrix &b) {
    if (a.field() != b.field() || a.cols() != b.cols()) {
        throw ValidationError("shape mismatch in multiply_adjoint");
    }
    FieldMatrix c(a.field(), a.rows(), b.rows());
    const int be = a.beta();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            kernels::dotc(be, a.row(i), b.row(j), a.cols(), c.entry(i, j));
        }
    }
    return c;
}

FieldMatrix multiply(const FieldMatrix &a, const FieldMatrix &b) {
    return multiply_adjoint(a, b.adjoint());
}

Eigen::MatrixXcd complex_embedding(const FieldMatrix &m) {
    using cd = std::complex<double>;
    if (m.field() != Field::H) {
        Eigen::MatrixXcd out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Quaternion q = m.get(i, j);
                out(i, j) = cd(q.w, q.x);
            }
        }
        return out;
    }
    Eigen::MatrixXcd out(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Quaternion q = m.get(i, j);
            const cd a(q.w, q.x);
            const cd b(q.y, q.z);
            out(2 * i, 2 * j) = a;
            out(2 * i, 2 * j + 1) = b;
            out(2 * i + 1, 2 * j) = -std::conj(b);
            out(2 * i + 1, 2 * j + 1) = std::conj(a);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const FieldMatrix &m) {
    if (m.rows() != m.cols()) {
        throw ValidationError("eigenvalues need a square matrix");
    }
    Eigen::VectorXd ev;
    if (m.field() == Field::R) {
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            a(m.data(), m.rows(), m.cols());
        Eigen::MatrixXd dense = a;
        ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense, Eigen::EigenvaluesOnly)
                 .eigenvalues();
    } else {
        ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(complex_embedding(m),
                                                             Eigen::EigenvaluesOnly)
                 .eigenvalues();
    }
    std::vector<double> out;
    const std::size_t stride = m.field() == Field::H ? 2 : 1;
    for (Eigen::Index k = 0; k < ev.size(); k += static_cast<Eigen::Index>(stride)) {
        out.push_back(stride == 2 ? 0.5 * (ev(k) + ev(k + 1)) : ev(k));
    }
    return out;
}

std::vector<double> singular_values(const FieldMatrix &m) {
    Eigen::VectorXd sv;
    if (m.field() == Field::R) {
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            a(m.data(), m.rows(), m.cols());
        Eigen::MatrixXd dense = a;
        sv = Eigen::BDCSVD<Eigen::MatrixXd>(dense).singularValues();
    } else {
        sv = Eigen::BDCSVD<Eigen::MatrixXcd>(complex_embedding(m)).singularValues();
    }
    std::vector<double> out;
    const std::size_t stride = m.field() == Field::H ? 2 : 1;
    for (Eigen::Index k = 0; k < sv.size(); k += static_cast<Eigen::Index>(stride)) {
        out.push_back(sv(k));
    }
    return out;
}

double re_trace_product(const FieldMatrix &m1, const FieldMatrix &m2) {
    if (m1.cols() != m2.rows() || m1.rows() != m2.cols()) {
        throw ValidationError("shape mismatch in re_trace_product");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < m1.rows(); ++i) {
        for (std::size_t j = 0; j < m1.cols(); ++j) {
            s += (m1.get(i, j) * m2.get(j, i)).w;
        }
    }
    return s;
}

} // namespace jaws
