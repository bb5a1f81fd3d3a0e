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

#pragma once

#include <cmath>
#include <complex>

namespace jaws {

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0,
                         double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    constexpr Quaternion &operator+=(const Quaternion &o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion &operator-=(const Quaternion &o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion &b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion &b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion &a) { return {-a.w, -a.x, -a.y, -a.z}; }

constexpr Quaternion operator*(const Quaternion &a, const Quaternion &b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion &q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}
constexpr Quaternion operator*(const Quaternion &q, double s) { return s * q; }

constexpr bool operator==(const Quaternion &a, const Quaternion &b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

/// exp(theta * u) for a unit pure quaternion u.
inline Quaternion exp_pure(double theta, const Quaternion &u) {
    return std::cos(theta) + std::sin(theta) * u;
}

// Field-generic scalar helpers used by templated code over double,
// std::complex<double> and Quaternion.
inline double conjugate(double a) { return a; }
inline std::complex<double> conjugate(const std::complex<double> &a) { return std::conj(a); }
inline Quaternion conjugate(const Quaternion &a) { return a.conj(); }

inline double real_part(double a) { return a; }
inline double real_part(const std::complex<double> &a) { return a.real(); }
inline double real_part(const Quaternion &a) { return a.w; }

inline double abs2(double a) { return a * a; }
inline double abs2(const std::complex<double> &a) { return std::norm(a); }
inline double abs2(const Quaternion &a) { return a.norm2(); }

} // namespace jaws
