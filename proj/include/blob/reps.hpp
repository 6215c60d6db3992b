// Representations of the boundary Temperley-Lieb (blob) algebra: the XXZ
// chain generators on (C^2)^N and the asymmetric twin generators on
// (C^4)^N in the folded space/mirror-space layout, together with the four
// twin boundary elements and the defining-relation checker.
#pragma once

#include <string>
#include <vector>

#include "blob/matrix.hpp"
#include "blob/params.hpp"
#include "blob/tensor.hpp"

namespace blob {

struct CheckResult {
    std::string id;
    double residual = 0.0;
    std::string notes;
    double tol_scale = 0.0; // > 0 scales the run tolerance for this check
};

using CheckList = std::vector<CheckResult>;

// Temperley-Lieb generator on C^2 (x) C^2 with loop weight -(x + 1/x).
inline CMatrix tl_u_matrix(cplx x) {
    CMatrix u(4, 4);
    u(1, 1) = -x;
    u(1, 2) = 1.0;
    u(2, 1) = 1.0;
    u(2, 2) = -1.0 / x;
    return u;
}

// XXZ boundary element on site 1 (2x2 before embedding).
inline CMatrix xxz_boundary_m(const AlgebraParams& p) {
    const cplx Q = p.Q_rep;
    CMatrix m(2, 2);
    m(0, 0) = -1.0 / Q;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = -Q;
    return (-p.delta_e / (Q + 1.0 / Q)) * m;
}

// Folded twin generator on C^4 (x) C^4, entered entry by entry.  Basis
// order per folded site is (minus factor, plus factor).
inline CMatrix twin_theta_u(const AlgebraParams& p) {
    const cplx q = p.q, r = p.r, rh = p.r_hat;
    const cplx i(0, 1);
    CMatrix u(16, 16);
    // nonzero rows/columns 3, 6, 9, 12 (0-based)
    u(3, 3) = -i;       u(3, 6) = -1.0 / r;  u(3, 9) = -rh;      u(3, 12) = 1.0;
    u(6, 3) = -1.0 / r; u(6, 6) = -1.0 / q;  u(6, 9) = 1.0;      u(6, 12) = -1.0 / rh;
    u(9, 3) = -rh;      u(9, 6) = 1.0;       u(9, 9) = -q;       u(9, 12) = -r;
    u(12, 3) = 1.0;     u(12, 6) = -1.0 / rh; u(12, 9) = -r;     u(12, 12) = i;
    return u;
}

// Same operator built from the two underlying XXZ generators: U(1/r) on
// the minus legs, U(r_hat) on the plus legs, then relabelled from
// (1-,2-,1+,2+) to the folded order (1-,1+,2-,2+).
inline CMatrix twin_theta_u_product(const AlgebraParams& p) {
    const CMatrix a = kron(tl_u_matrix(1.0 / p.r), tl_u_matrix(p.r_hat));
    return leg_permute(a, {1, 3, 2, 4}, 2);
}

// Twin boundary element on folded site 1 (4x4 before embedding).
inline CMatrix twin_boundary_m(const AlgebraParams& p, Boundary b) {
    const cplx Q = p.Q_rep;
    const cplx norm = -p.delta_e / (Q + 1.0 / Q);
    switch (b) {
        case Boundary::type_i: {
            CMatrix m(4, 4);
            m(1, 1) = -Q;
            m(1, 2) = 1.0;
            m(2, 1) = 1.0;
            m(2, 2) = -1.0 / Q;
            return norm * m;
        }
        case Boundary::type_ii: {
            CMatrix m(4, 4);
            m(0, 0) = -Q;
            m(0, 3) = 1.0;
            m(3, 0) = 1.0;
            m(3, 3) = -1.0 / Q;
            return norm * m;
        }
        case Boundary::type_plus:
            return twin_boundary_m(p, Boundary::type_i) + twin_boundary_m(p, Boundary::type_ii);
        case Boundary::type_iii: {
            const auto [q1, q2] = type_iii_parameters(Q);
            CMatrix a(2, 2), c(2, 2);
            a(0, 0) = -q1;
            a(0, 1) = 1.0;
            a(1, 0) = 1.0;
            a(1, 1) = -1.0 / q1;
            c(0, 0) = -1.0 / q2;
            c(0, 1) = 1.0;
            c(1, 0) = 1.0;
            c(1, 1) = -q2;
            const cplx norm3 = p.delta_e / ((q1 + 1.0 / q1) * (q2 + 1.0 / q2));
            return norm3 * kron(a, c);
        }
        default:
            throw std::invalid_argument("twin_boundary_m: boundary type " + to_string(b) + " has no twin element");
    }
}

// A blob-algebra representation with generators already embedded on the
// full chain.
struct LocalRep {
    SiteLayout layout;
    std::vector<CMatrix> u_gens; // U_1 .. U_{N-1}
    CMatrix e_gen;
    CMatrix u_local; // d^2 x d^2 two-site generator
    CMatrix e_local; // d x d boundary element (identity scale excluded for trivial)
    AlgebraParams params;
};

inline LocalRep xxz_rep(const AlgebraParams& p, int num_sites) {
    if (num_sites < 2) throw std::invalid_argument("xxz_rep: need at least two sites");
    LocalRep rep;
    rep.layout = SiteLayout(num_sites, 2);
    rep.params = p;
    rep.u_local = tl_u_matrix(p.q);
    rep.e_local = xxz_boundary_m(p);
    for (int l = 1; l < num_sites; ++l) rep.u_gens.push_back(embed(rep.u_local, l, 2, rep.layout));
    rep.e_gen = embed(rep.e_local, 1, 1, rep.layout);
    return rep;
}

inline LocalRep twin_rep(const AlgebraParams& p, int num_sites, Boundary b) {
    if (num_sites < 2) throw std::invalid_argument("twin_rep: need at least two sites");
    LocalRep rep;
    rep.layout = SiteLayout(num_sites, 4);
    rep.params = p;
    rep.u_local = twin_theta_u(p);
    rep.e_local = twin_boundary_m(p, b);
    for (int l = 1; l < num_sites; ++l) rep.u_gens.push_back(embed(rep.u_local, l, 2, rep.layout));
    rep.e_gen = embed(rep.e_local, 1, 1, rep.layout);
    return rep;
}

inline LocalRep make_rep(const AlgebraParams& p, int num_sites) {
    if (p.model == Model::xxz) return xxz_rep(p, num_sites);
    const Boundary b = (p.boundary == Boundary::trivial) ? Boundary::type_i : p.boundary;
    return twin_rep(p, num_sites, b);
}

// Residuals for every defining relation of the blob quotient.
inline CheckList check_blob(const LocalRep& rep) {
    CheckList out;
    const auto& u = rep.u_gens;
    const auto& e = rep.e_gen;
    const cplx delta = rep.params.delta;
    const cplx delta_e = rep.params.delta_e;
    const cplx kappa = rep.params.kappa;
    const int m = static_cast<int>(u.size());

    for (int l = 0; l < m; ++l)
        out.push_back({"u-square/l" + std::to_string(l + 1), rel_residual(u[l] * u[l], delta * u[l]), ""});
    for (int l = 0; l + 1 < m; ++l)
        out.push_back({"hecke-braid/l" + std::to_string(l + 1),
                       rel_residual(u[l] * u[l + 1] * u[l] - u[l], u[l + 1] * u[l] * u[l + 1] - u[l + 1]), ""});
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            out.push_back({"distant-comm/u" + std::to_string(i + 1) + "-u" + std::to_string(j + 1),
                           comm_residual(u[i], u[j]), ""});
    out.push_back({"e-square", rel_residual(e * e, delta_e * e), ""});
    out.push_back({"b-hecke-quadratic",
                   rel_residual(u[0] * e * u[0] * e - kappa * (u[0] * e), e * u[0] * e * u[0] - kappa * (e * u[0])),
                   ""});
    for (int i = 1; i < m; ++i)
        out.push_back({"e-distant-comm/u" + std::to_string(i + 1), comm_residual(u[i], e), ""});
    for (int l = 0; l + 1 < m; ++l) {
        out.push_back({"tl-quotient/l" + std::to_string(l + 1) + "+",
                       rel_residual(u[l] * u[l + 1] * u[l], u[l]), ""});
        out.push_back({"tl-quotient/l" + std::to_string(l + 2) + "-",
                       rel_residual(u[l + 1] * u[l] * u[l + 1], u[l + 1]), ""});
    }
    out.push_back({"blob-quotient", rel_residual(u[0] * e * u[0], kappa * u[0]), ""});
    return out;
}

} // namespace blob
