// Model parameters: bulk deformation q = exp(i mu), boundary parameter Q,
// and the scalars (delta, delta_e, kappa, r, r_hat, ...) derived from them
// for each representation/boundary flavour.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "blob/matrix.hpp"

namespace blob {

enum class Model { xxz, twin };
enum class Boundary { trivial, xxz_m, type_i, type_ii, type_plus, type_iii };

inline std::string to_string(Model m) { return m == Model::xxz ? "xxz" : "twin"; }

inline std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::trivial: return "trivial";
        case Boundary::xxz_m: return "xxz-m";
        case Boundary::type_i: return "i";
        case Boundary::type_ii: return "ii";
        case Boundary::type_plus: return "plus";
        case Boundary::type_iii: return "iii";
    }
    return "?";
}

inline bool boundary_compatible(Model m, Boundary b) {
    if (b == Boundary::trivial) return true;
    if (m == Model::xxz) return b == Boundary::xxz_m;
    return b == Boundary::type_i || b == Boundary::type_ii || b == Boundary::type_plus || b == Boundary::type_iii;
}

struct AlgebraParams {
    double mu = 0.0;
    cplx q, delta;
    cplx Q_rep;
    cplx zeta;
    cplx r, r_hat;
    cplx delta_e, kappa;
    double crossing_rho = 1.0;
    cplx c_plus, c_minus; // scalars in K^{+-} = pi(e) + c_{+-} I
    Model model = Model::xxz;
    Boundary boundary = Boundary::trivial;

    int local_dim() const { return model == Model::xxz ? 2 : 4; }
};

namespace detail {

inline cplx boundary_kappa(Boundary b, cplx q, cplx Q, cplx denom) {
    switch (b) {
        case Boundary::trivial:
        case Boundary::xxz_m:
        case Boundary::type_i:
            return (q / Q + Q / q) / denom;
        case Boundary::type_ii:
            return (cplx(0, 1) * (Q - 1.0 / Q)) / denom;
        case Boundary::type_plus:
            return (q / Q + Q / q) / denom + (cplx(0, 1) * (Q - 1.0 / Q)) / denom;
        case Boundary::type_iii:
            return (q / Q + Q / q + 2.0) / denom;
    }
    throw std::invalid_argument("boundary_kappa: unknown boundary");
}

} // namespace detail

// Asymptotic boundary scalars from the leading terms of x(lambda), y(lambda).
inline std::pair<cplx, cplx> asymptotic_k_scalars(cplx delta_e, cplx kappa, cplx q) {
    const cplx qq = q - 1.0 / q;
    return {(-delta_e * q - kappa) / qq, (delta_e / q + kappa) / qq};
}

inline AlgebraParams make_params(double mu, cplx Q, cplx zeta, Model model, Boundary boundary) {
    if (!boundary_compatible(model, boundary))
        throw std::invalid_argument("make_params: boundary " + to_string(boundary) + " incompatible with model " +
                                    to_string(model));
    if (std::abs(std::sin(mu)) < 1e-12)
        throw std::invalid_argument("make_params: mu in pi*Z degenerates sinh(i mu)");
    if (std::abs(Q + 1.0 / Q) < 1e-10)
        throw std::invalid_argument("make_params: Q + 1/Q vanishes, boundary normalization degenerate");

    AlgebraParams p;
    p.mu = mu;
    p.q = std::exp(cplx(0.0, mu));
    p.delta = -(p.q + 1.0 / p.q);
    p.Q_rep = Q;
    p.zeta = zeta;
    p.model = model;
    p.boundary = boundary;
    p.r_hat = std::sqrt(cplx(0, 1) * p.q);
    p.r = cplx(0, 1) * p.r_hat;

    const cplx denom = 2.0 * cplx(0, 1) * std::sinh(cplx(0.0, mu));
    p.delta_e = -(Q + 1.0 / Q) / denom;
    p.kappa = detail::boundary_kappa(boundary == Boundary::trivial
                                         ? (model == Model::xxz ? Boundary::xxz_m : Boundary::type_i)
                                         : boundary,
                                     p.q, Q, denom);
    const auto [cp, cm] = asymptotic_k_scalars(p.delta_e, p.kappa, p.q);
    p.c_plus = cp;
    p.c_minus = cm;
    return p;
}

// Representation parameters of boundary type (iii): Q1 = i sqrt(iQ),
// Q2 = sqrt(iQ).
inline std::pair<cplx, cplx> type_iii_parameters(cplx Q) {
    const cplx root = std::sqrt(cplx(0, 1) * Q);
    return {cplx(0, 1) * root, root};
}

} // namespace blob
