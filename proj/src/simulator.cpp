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

#include "jaws/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

#include "jaws/error.hpp"
#include "jaws/randmat.hpp"

namespace jaws {

namespace {

using cd = std::complex<double>;

template <class S> using Vec = std::vector<S>;

template <class Fn> auto with_scalar(Field f, Fn &&fn) {
    switch (f) {
    case Field::R:
        return fn(double{});
    case Field::C:
        return fn(cd{});
    default:
        return fn(Quaternion{});
    }
}

template <class S> S inner(const Vec<S> &a, const Vec<S> &b) {
    S s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += conjugate(a[i]) * b[i];
    }
    return s;
}

/// sum_k w_k v_k v_k^dagger, or diag(d) when d is set.
template <class S> struct HermOp {
    std::vector<Vec<S>> vecs;
    std::vector<double> w;
    std::vector<double> diag;

    Vec<S> apply(const Vec<S> &x) const {
        Vec<S> out(x.size(), S{});
        if (!diag.empty()) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                out[i] = diag[i] * x[i];
            }
            return out;
        }
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            const S c = inner(vecs[k], x);
            for (std::size_t i = 0; i < x.size(); ++i) {
                out[i] += w[k] * (vecs[k][i] * c);
            }
        }
        return out;
    }
};

/// One rank-1 piece x s y^dagger of a generator, with its images under R, Q.
template <class S> struct Term {
    Vec<S> x, y;
    S s{};
    Vec<S> rx, ry, qx, qy;
};

template <class S> S phase_unit(std::size_t param) {
    if constexpr (std::is_same_v<S, cd>) {
        return cd(0.0, 1.0);
    } else if constexpr (std::is_same_v<S, Quaternion>) {
        const std::size_t a = param % 3;
        return a == 0 ? Quaternion::i() : (a == 1 ? Quaternion::j() : Quaternion::k());
    } else {
        return 1.0;
    }
}

/// Generator terms from the first one (C, H) or two (R) frame vectors.
template <class S>
std::vector<Term<S>> make_terms(std::size_t param, const Vec<S> &v0, const Vec<S> *v1) {
    std::vector<Term<S>> t;
    if constexpr (std::is_same_v<S, double>) {
        t.push_back({v0, *v1, 1.0, {}, {}, {}, {}});
        t.push_back({*v1, v0, -1.0, {}, {}, {}, {}});
    } else {
        (void)v1;
        t.push_back({v0, v0, phase_unit<S>(param), {}, {}, {}, {}});
    }
    return t;
}

template <class S>
LandscapeSample evaluate(const HermOp<S> &r, const HermOp<S> &q, std::vector<std::vector<Term<S>>> gens,
                         double index, bool with_hessian) {
    LandscapeSample out;
    double l = 0.0;
    for (std::size_t k = 0; k < r.vecs.size(); ++k) {
        l += r.w[k] * real_part(inner(r.vecs[k], q.apply(r.vecs[k])));
    }
    out.loss = index * l;
    for (auto &g : gens) {
        for (Term<S> &t : g) {
            t.rx = r.apply(t.x);
            t.ry = r.apply(t.y);
            t.qx = q.apply(t.x);
            t.qy = q.apply(t.y);
        }
    }
    const std::size_t p = gens.size();
    out.grad.assign(p, 0.0);
    for (std::size_t k = 0; k < p; ++k) {
        double v = 0.0;
        for (const Term<S> &t : gens[k]) {
            v += real_part(t.s * (inner(t.qy, t.rx) - inner(t.ry, t.qx)));
        }
        out.grad[k] = index * v;
    }
    if (!with_hessian) {
        return out;
    }
    // H_kl = Re Tr([R, K_k][K_l, Q]) for k <= l in product order; each
    // commutator is a signed sum of a s b^dagger pieces.
    struct Piece {
        const Vec<S> *a;
        S s;
        const Vec<S> *b;
        double sign;
    };
    std::vector<std::vector<Piece>> e(p), f(p);
    for (std::size_t k = 0; k < p; ++k) {
        for (const Term<S> &t : gens[k]) {
            e[k].push_back({&t.rx, t.s, &t.y, 1.0});
            e[k].push_back({&t.x, t.s, &t.ry, -1.0});
            f[k].push_back({&t.x, t.s, &t.qy, 1.0});
            f[k].push_back({&t.qx, t.s, &t.y, -1.0});
        }
    }
    const auto ip = static_cast<Eigen::Index>(p);
    out.hessian = Eigen::MatrixXd::Zero(ip, ip);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = k; l < p; ++l) {
            double v = 0.0;
            for (const Piece &pe : e[k]) {
                for (const Piece &pf : f[l]) {
                    v += pe.sign * pf.sign *
                         real_part(pe.s * inner(*pe.b, *pf.a) * pf.s * inner(*pf.b, *pe.a));
                }
            }
            const auto ek = static_cast<Eigen::Index>(k);
            const auto el = static_cast<Eigen::Index>(l);
            out.hessian(ek, el) = index * v;
            out.hessian(el, ek) = index * v;
        }
    }
    return out;
}

template <class S> Vec<S> column(const FieldMatrix &m, std::size_t j) {
    Vec<S> v(m.rows());
    const S *d = m.as<S>();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        v[i] = d[i * m.cols() + j];
    }
    return v;
}

/// Row k of a Haar frame, conjugated into a column of the adjoint.
template <class S> Vec<S> conj_row(const FieldMatrix &m, std::size_t k) {
    Vec<S> v(m.cols());
    const S *d = m.as<S>() + k * m.cols();
    for (std::size_t i = 0; i < m.cols(); ++i) {
        v[i] = conjugate(d[i]);
    }
    return v;
}

void check_spectra(const SimpleComponent &c, const std::vector<double> &rho,
                   const std::vector<double> &o) {
    if (rho.size() != c.dim || o.size() != c.dim) {
        throw ValidationError("spectrum length does not match component dim " +
                              std::to_string(c.dim));
    }
}

std::size_t layer_count(Field f, std::size_t p) { return f == Field::H ? (p + 2) / 3 : p; }

} // namespace

std::size_t AnsatzInstance::layer_of(std::size_t param) const {
    return component.field == Field::H ? param / 3 : param;
}

AnsatzInstance build_ansatz(const SimpleComponent &c, RngState &rng) {
    if (c.dim < 2) {
        throw ValidationError("dim 1 admits no nontrivial generator");
    }
    AnsatzInstance a;
    a.component = c;
    a.num_params = c.sector_params;
    a.theta.assign(a.num_params, 0.0);
    a.g0 = haar_group(c.field, c.dim, rng);
    a.h = haar_group(c.field, c.dim, rng);
    for (std::size_t l = 0; l < layer_count(c.field, a.num_params); ++l) {
        a.layers.push_back(haar_group(c.field, c.dim, rng));
    }
    return a;
}

FieldMatrix generator(Field field, std::size_t dim, std::size_t param) {
    if (dim < 2) {
        throw ValidationError("dim 1 admits no nontrivial generator");
    }
    FieldMatrix a(field, dim, dim);
    switch (field) {
    case Field::R:
        a.set(0, 1, 1.0);
        a.set(1, 0, -1.0);
        break;
    case Field::C:
        a.set(0, 0, Quaternion::i());
        break;
    case Field::H:
        a.set(0, 0, phase_unit<Quaternion>(param));
        break;
    }
    return a;
}

FieldMatrix assemble_unitary(const AnsatzInstance &a, const std::vector<double> &theta) {
    if (theta.size() != a.num_params) {
        throw ValidationError("theta length does not match the parameter count");
    }
    const Field f = a.component.field;
    const std::size_t n = a.component.dim;
    FieldMatrix p = FieldMatrix::identity(f, n);
    for (std::size_t l = 0; l < a.layers.size(); ++l) {
        const FieldMatrix &g = a.layers[l];
        FieldMatrix ge = g;
        if (f == Field::R) {
            const double c = std::cos(theta[l]), s = std::sin(theta[l]);
            for (std::size_t i = 0; i < n; ++i) {
                const double x0 = g.entry(i, 0)[0], x1 = g.entry(i, 1)[0];
                ge.entry(i, 0)[0] = c * x0 - s * x1;
                ge.entry(i, 1)[0] = s * x0 + c * x1;
            }
        } else {
            Quaternion e(1.0);
            const std::size_t first = f == Field::H ? 3 * l : l;
            const std::size_t last = f == Field::H ? std::min(first + 3, a.num_params) : l + 1;
            for (std::size_t k = first; k < last; ++k) {
                e = e * exp_pure(theta[k], f == Field::H ? phase_unit<Quaternion>(k) : Quaternion::i());
            }
            for (std::size_t i = 0; i < n; ++i) {
                ge.set(i, 0, g.get(i, 0) * e);
            }
        }
        p = multiply(p, multiply_adjoint(ge, g));
    }
    return multiply(multiply(a.g0.adjoint(), p), a.h);
}

double loss_at(const AnsatzInstance &a, const std::vector<double> &theta,
               const std::vector<double> &rho_eigs, const std::vector<double> &o_eigs) {
    check_spectra(a.component, rho_eigs, o_eigs);
    const FieldMatrix u = assemble_unitary(a, theta);
    double l = 0.0;
    for (std::size_t mu = 0; mu < u.rows(); ++mu) {
        if (rho_eigs[mu] == 0.0) {
            continue;
        }
        double row = 0.0;
        for (std::size_t nu = 0; nu < u.cols(); ++nu) {
            row += o_eigs[nu] * u.get(mu, nu).norm2();
        }
        l += rho_eigs[mu] * row;
    }
    return a.component.index * l;
}

double loss_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                 const std::vector<double> &o_eigs) {
    return loss_at(a, a.theta, rho_eigs, o_eigs);
}

namespace {

LandscapeSample evaluate_dense(const AnsatzInstance &a, const std::vector<double> &rho,
                               const std::vector<double> &o, bool with_hessian) {
    check_spectra(a.component, rho, o);
    return with_scalar(a.component.field, [&](auto tag) {
        using S = decltype(tag);
        HermOp<S> r, q;
        for (std::size_t mu = 0; mu < rho.size(); ++mu) {
            if (rho[mu] != 0.0) {
                r.vecs.push_back(column<S>(a.g0, mu));
                r.w.push_back(rho[mu]);
            }
        }
        for (std::size_t nu = 0; nu < o.size(); ++nu) {
            q.vecs.push_back(column<S>(a.h, nu));
            q.w.push_back(o[nu]);
        }
        std::vector<std::vector<Term<S>>> gens;
        for (std::size_t k = 0; k < a.num_params; ++k) {
            const FieldMatrix &g = a.layers[a.layer_of(k)];
            const Vec<S> v0 = column<S>(g, 0);
            const Vec<S> v1 = column<S>(g, 1);
            gens.push_back(make_terms<S>(k, v0, &v1));
        }
        return evaluate<S>(r, q, std::move(gens), a.component.index, with_hessian);
    });
}

} // namespace

std::vector<double> grad_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                              const std::vector<double> &o_eigs) {
    return evaluate_dense(a, rho_eigs, o_eigs, false).grad;
}

Eigen::MatrixXd hessian_eval(const AnsatzInstance &a, const std::vector<double> &rho_eigs,
                             const std::vector<double> &o_eigs) {
    return evaluate_dense(a, rho_eigs, o_eigs, true).hessian;
}

LandscapeSample draw_landscape(const SimpleComponent &c, const std::vector<double> &rho_eigs,
                               const std::vector<double> &o_eigs, RngState &rng,
                               bool with_hessian) {
    check_spectra(c, rho_eigs, o_eigs);
    if (c.dim < 2) {
        throw ValidationError("dim 1 admits no nontrivial generator");
    }
    return with_scalar(c.field, [&](auto tag) {
        using S = decltype(tag);
        // In the frame of h, Q is diagonal and g0, g_i stay independent Haar.
        HermOp<S> r, q;
        q.diag = o_eigs;
        std::size_t m = 0;
        for (double v : rho_eigs) {
            m += v != 0.0 ? 1 : 0;
        }
        if (m > 0) {
            const FieldMatrix frame = haar_rows(c.field, c.dim, m, rng);
            std::size_t k = 0;
            for (double v : rho_eigs) {
                if (v != 0.0) {
                    r.vecs.push_back(conj_row<S>(frame, k++));
                    r.w.push_back(v);
                }
            }
        }
        const std::size_t p = c.sector_params;
        const std::size_t width = c.field == Field::R ? 2 : 1;
        std::vector<std::vector<Term<S>>> gens;
        Vec<S> v0, v1;
        for (std::size_t k = 0; k < p; ++k) {
            const bool fresh = c.field != Field::H || k % 3 == 0;
            if (fresh) {
                const FieldMatrix g = haar_rows(c.field, c.dim, width, rng);
                v0 = conj_row<S>(g, 0);
                if (width == 2) {
                    v1 = conj_row<S>(g, 1);
                }
            }
            gens.push_back(make_terms<S>(k, v0, &v1));
        }
        return evaluate<S>(r, q, std::move(gens), c.index, with_hessian);
    });
}

McLandscape mc_landscape(const SimpleComponent &c, const std::vector<double> &rho_eigs,
                         const std::vector<double> &o_eigs, std::size_t n_samples,
                         const RngState &rng, bool with_hessian) {
    if (n_samples < 100) {
        throw ValidationError("mc_landscape needs at least 100 samples");
    }
    McLandscape out;
    out.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        RngState s = rng.split(i);
        out.samples.push_back(draw_landscape(c, rho_eigs, o_eigs, s, with_hessian));
    }
    std::vector<double> loss;
    for (const auto &s : out.samples) {
        loss.push_back(s.loss);
    }
    out.loss = EmpiricalDistribution(std::move(loss));
    for (std::size_t k = 0; k < c.sector_params; ++k) {
        std::vector<double> g, h;
        for (const auto &s : out.samples) {
            g.push_back(s.grad[k]);
            if (with_hessian) {
                h.push_back(s.hessian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
            }
        }
        out.grad.emplace_back(std::move(g));
        if (with_hessian) {
            out.hessian_diag.emplace_back(std::move(h));
        }
    }
    return out;
}

std::vector<LandscapeSample> simulate_model(const JawsModel &model, std::size_t n_samples,
                                            const RngState &rng, bool with_hessian) {
    model.validate();
    const std::size_t p = model.total_params;
    std::vector<LandscapeSample> out;
    out.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const RngState s = rng.split(i);
        LandscapeSample t;
        t.grad.assign(p, 0.0);
        if (with_hessian) {
            t.hessian = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
        }
        for (std::size_t a = 0; a < model.components.size(); ++a) {
            const SimpleComponent &c = model.components[a];
            RngState sa = s.split(a);
            const LandscapeSample d =
                draw_landscape(c, c.input_spectrum, c.observable_spectrum, sa, with_hessian);
            t.loss += d.loss;
            for (std::size_t k = 0; k < c.sector_params; ++k) {
                const std::size_t gk = model.parameter_index(a, k);
                t.grad[gk] += d.grad[k];
                if (!with_hessian) {
                    continue;
                }
                for (std::size_t l = 0; l < c.sector_params; ++l) {
                    t.hessian(static_cast<Eigen::Index>(gk),
                              static_cast<Eigen::Index>(model.parameter_index(a, l))) +=
                        d.hessian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
                }
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

double loss_floor(const SimpleComponent &c) {
    if (c.observable_spectrum.empty()) {
        throw ValidationError("empty observable spectrum");
    }
    return c.index * c.observable_spectrum.front() * trace(c.input_spectrum);
}

std::vector<PauliTerm> parse_pauli_text(const std::string &text) {
    std::vector<PauliTerm> terms;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](std::size_t col, const std::string &what) {
        throw ValidationError("pauli line " + std::to_string(lineno) + " column " +
                              std::to_string(col + 1) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') {
            continue;
        }
        const char *start = line.c_str() + pos;
        char *end = nullptr;
        const double coeff = std::strtod(start, &end);
        if (end == start || !std::isfinite(coeff)) {
            fail(pos, "expected a coefficient");
        }
        pos = static_cast<std::size_t>(end - line.c_str());
        const std::size_t word = line.find_first_not_of(" \t\r", pos);
        if (word == pos || word == std::string::npos) {
            fail(pos, "expected whitespace and a Pauli string");
        }
        std::size_t k = word;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) {
            if (std::string("IXYZ").find(line[k]) == std::string::npos) {
                fail(k, std::string("invalid Pauli letter '") + line[k] + "'");
            }
            ++k;
        }
        const std::size_t rest = line.find_first_not_of(" \t\r", k);
        if (rest != std::string::npos && line[rest] != '#') {
            fail(rest, "unexpected trailing text");
        }
        terms.push_back({coeff, line.substr(word, k - word)});
    }
    if (terms.empty()) {
        throw ValidationError("pauli input has no terms");
    }
    return terms;
}

std::vector<double> spectrum_from_pauli(const std::vector<PauliTerm> &terms) {
    if (terms.empty()) {
        throw ValidationError("pauli input has no terms");
    }
    const std::size_t n = terms.front().pauli.size();
    if (n < 1 || n > 12) {
        throw ValidationError("pauli strings need 1 to 12 qubits");
    }
    bool diagonal = true;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string &s = terms[t].pauli;
        if (s.size() != n) {
            throw ValidationError("pauli term " + std::to_string(t) + " has length " +
                                  std::to_string(s.size()) + ", expected " + std::to_string(n));
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (std::string("IXYZ").find(s[q]) == std::string::npos) {
                throw ValidationError("pauli term " + std::to_string(t) + " position " +
                                      std::to_string(q) + ": invalid letter");
            }
            diagonal = diagonal && (s[q] == 'I' || s[q] == 'Z');
        }
    }
    const std::size_t dim = std::size_t{1} << n;
    // Qubit 0 is the leftmost letter and the most significant bit.
    auto action = [&](const std::string &s, std::size_t b, std::size_t &target) {
        cd phase(1.0, 0.0);
        target = b;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = std::size_t{1} << (n - 1 - q);
            const bool one = (b & bit) != 0;
            switch (s[q]) {
            case 'X':
                target ^= bit;
                break;
            case 'Y':
                target ^= bit;
                phase *= one ? cd(0.0, -1.0) : cd(0.0, 1.0);
                break;
            case 'Z':
                phase *= one ? -1.0 : 1.0;
                break;
            default:
                break;
            }
        }
        return phase;
    };
    std::vector<double> eig(dim, 0.0);
    if (diagonal) {
        for (const PauliTerm &t : terms) {
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t target = 0;
                eig[b] += t.coeff * action(t.pauli, b, target).real();
            }
        }
    } else {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(dim));
        for (const PauliTerm &t : terms) {
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t target = 0;
                const cd ph = action(t.pauli, b, target);
                m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(b)) += t.coeff * ph;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        for (std::size_t k = 0; k < dim; ++k) {
            eig[k] = es.eigenvalues()(static_cast<Eigen::Index>(k));
        }
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace jaws
