// Deformed sl2 triples (E, F, H), their N-fold coproduct towers, and the
// boundary non-local charges Q_g = g^{-1/2} H E + g^{1/2} H F + x (H^2 - I).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "blob/matrix.hpp"
#include "blob/params.hpp"
#include "blob/reps.hpp"

namespace blob {

enum class QRep { rho, sigma1, sigma2, rho1, rho2 };

inline std::string to_string(QRep r) {
    switch (r) {
        case QRep::rho: return "rho";
        case QRep::sigma1: return "sigma1";
        case QRep::sigma2: return "sigma2";
        case QRep::rho1: return "rho1";
        case QRep::rho2: return "rho2";
    }
    return "?";
}

struct QGroupRep {
    QRep name = QRep::rho;
    CMatrix E, F, H;
    cplx deformation; // the g in U_g(sl2): q, i, r or r_hat
    int dim = 0;
};

namespace detail {

inline CMatrix unit(int d, int i, int j) {
    CMatrix m(d, d);
    m(i, j) = 1.0;
    return m;
}

inline CMatrix diag(std::initializer_list<cplx> v) {
    CMatrix m(static_cast<int>(v.size()), static_cast<int>(v.size()));
    int i = 0;
    for (cplx c : v) m(i, i) = c, ++i;
    return m;
}

} // namespace detail

inline QGroupRep qgroup_rep(QRep name, const AlgebraParams& p) {
    using detail::diag;
    using detail::unit;
    QGroupRep rep;
    rep.name = name;
    const cplx qh = std::exp(cplx(0.0, p.mu / 2.0)); // q^{1/2}
    const cplx ih = std::exp(cplx(0.0, M_PI / 4.0)); // i^{1/2}
    const cplx rh_half = std::sqrt(p.r_hat);
    const cplx r_half = std::sqrt(p.r);
    switch (name) {
        case QRep::rho:
            rep.dim = 2;
            rep.deformation = p.q;
            rep.H = diag({qh, 1.0 / qh});
            rep.E = unit(2, 0, 1);
            rep.F = unit(2, 1, 0);
            break;
        case QRep::sigma1:
            rep.dim = 4;
            rep.deformation = cplx(0, 1);
            rep.H = diag({ih, 1.0, 1.0, 1.0 / ih});
            rep.E = unit(4, 0, 3);
            rep.F = unit(4, 3, 0);
            break;
        case QRep::sigma2:
            rep.dim = 4;
            rep.deformation = p.q;
            rep.H = diag({1.0, 1.0 / qh, qh, 1.0});
            rep.E = unit(4, 2, 1);
            rep.F = unit(4, 1, 2);
            break;
        case QRep::rho1:
            rep.dim = 4;
            rep.deformation = p.r_hat;
            rep.H = kron(CMatrix::identity(2), diag({rh_half, 1.0 / rh_half}));
            rep.E = kron(CMatrix::identity(2), unit(2, 0, 1));
            rep.F = kron(CMatrix::identity(2), unit(2, 1, 0));
            break;
        case QRep::rho2:
            rep.dim = 4;
            rep.deformation = p.r;
            rep.H = kron(diag({1.0 / r_half, r_half}), CMatrix::identity(2));
            rep.E = kron(unit(2, 1, 0), CMatrix::identity(2));
            rep.F = kron(unit(2, 0, 1), CMatrix::identity(2));
            break;
    }
    return rep;
}

// Residuals of HE = g EH, HF = g^{-1} FH, [E,F] = (H^2 - H^{-2})/(g - g^{-1}).
inline CheckList qgroup_relation_residuals(const CMatrix& E, const CMatrix& F, const CMatrix& H, cplx g,
                                           const std::string& prefix) {
    CheckList out;
    out.push_back({prefix + "/he", rel_residual(H * E, g * (E * H)), ""});
    out.push_back({prefix + "/hf", rel_residual(H * F, (1.0 / g) * (F * H)), ""});
    const CMatrix h2 = H * H;
    const CMatrix h2inv = invert(h2);
    out.push_back({prefix + "/ef", rel_residual(comm(E, F), (1.0 / (g - 1.0 / g)) * (h2 - h2inv)), ""});
    return out;
}

// Generators of U_g(sl2) acting on N sites through the iterated coproduct
// Delta(chi) = H^{-1} (x) chi + chi (x) H, Delta(H) = H (x) H.
struct ChargeTower {
    QGroupRep rep;
    int num_sites = 1;
    CMatrix E, F, H, Hinv;
    CMatrix Q;    // boundary charge tower, when built
    cplx x = 0.0; // constant used in the charge
    bool has_charge = false;
};

inline ChargeTower tower(const QGroupRep& rep, int num_sites) {
    if (num_sites < 1) throw std::invalid_argument("tower: need at least one site");
    ChargeTower t;
    t.rep = rep;
    t.num_sites = num_sites;
    t.E = rep.E;
    t.F = rep.F;
    t.H = rep.H;
    const CMatrix h_inv_local = invert(rep.H);
    for (int n = 2; n <= num_sites; ++n) {
        t.E = kron(h_inv_local, t.E) + kron(rep.E, t.H);
        t.F = kron(h_inv_local, t.F) + kron(rep.F, t.H);
        t.H = kron(rep.H, t.H);
    }
    t.Hinv = invert(t.H);
    return t;
}

// Local boundary charge in the given representation.
inline CMatrix local_charge(const QGroupRep& rep, cplx x) {
    const cplx g_half = std::sqrt(rep.deformation);
    const CMatrix h2 = rep.H * rep.H;
    return (1.0 / g_half) * (rep.H * rep.E) + g_half * (rep.H * rep.F) + x * (h2 - CMatrix::identity(rep.dim));
}

// N-fold charge through Delta(Q) = I (x) Q + Q (x) H^2.
inline ChargeTower boundary_charge(const QGroupRep& rep, cplx x, int num_sites) {
    ChargeTower t = tower(rep, num_sites);
    t.x = x;
    t.has_charge = true;
    const CMatrix q_local = local_charge(rep, x);
    const CMatrix h2_local = rep.H * rep.H;
    CMatrix q = q_local;
    CMatrix h2 = h2_local;
    for (int n = 2; n <= num_sites; ++n) {
        q = kron(CMatrix::identity(rep.dim), q) + kron(q_local, h2);
        h2 = kron(h2_local, h2);
    }
    t.Q = q;
    return t;
}

// Charge constants fixed by the K-matrix intertwining conditions.
inline cplx charge_constant(QRep name, const AlgebraParams& p) {
    const cplx Q = p.Q_rep;
    switch (name) {
        case QRep::rho:
        case QRep::sigma2:
            return (Q - 1.0 / Q) / (p.q - 1.0 / p.q);
        case QRep::sigma1:
            return -(Q - 1.0 / Q) / (2.0 * cplx(0, 1));
        case QRep::rho2: {
            const cplx root_p = std::sqrt(cplx(0, 1) * Q);
            const cplx root_m = std::sqrt(-cplx(0, 1) / Q);
            return cplx(0, 1) * (root_p + root_m) / (p.r - 1.0 / p.r);
        }
        case QRep::rho1: {
            const cplx root_p = std::sqrt(cplx(0, 1) * Q);
            const cplx root_m = std::sqrt(-cplx(0, 1) / Q);
            return (root_p - root_m) / (p.r_hat - 1.0 / p.r_hat);
        }
    }
    throw std::invalid_argument("charge_constant: unknown representation");
}

// Commutators of a tower triple with the blob generators (the centralizer
// property of the quantum-group action).
inline CheckList check_centralizer_local(const LocalRep& rep, const ChargeTower& t) {
    if (t.E.rows() != rep.u_gens.front().rows())
        throw std::invalid_argument("check_centralizer_local: tower dimension does not match representation");
    CheckList out;
    const std::string base = "centralizer/" + to_string(t.rep.name);
    for (std::size_t l = 0; l < rep.u_gens.size(); ++l) {
        const std::string site = "/u" + std::to_string(l + 1);
        out.push_back({base + "/E" + site, comm_residual(t.E, rep.u_gens[l]), ""});
        out.push_back({base + "/F" + site, comm_residual(t.F, rep.u_gens[l]), ""});
        out.push_back({base + "/H" + site, comm_residual(t.H, rep.u_gens[l]), ""});
    }
    return out;
}

} // namespace blob
