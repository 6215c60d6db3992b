#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "blob/matrix.hpp"
#include "blob/params.hpp"
#include "blob/qgroup.hpp"
#include "blob/reps.hpp"
#include "blob/tensor.hpp"

using namespace blob;

namespace {
const double kMuGrid[] = {0.7, 1.1, M_PI / 3.0};
const cplx kQGrid[] = {cplx(2.0, 0.0), 1.3 * std::exp(cplx(0.0, 0.4))};
const cplx kZeta(0.3, 0.0);
} // namespace

TEST_CASE("parameter construction") {
    auto p = make_params(M_PI / 3.0, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    REQUIRE(std::abs(p.q + 1.0 / p.q - cplx(1.0)) < 1e-14); // 2 cos(pi/3) = 1
    REQUIRE(std::abs(p.delta + 1.0) < 1e-14);
    REQUIRE(std::abs(p.r - std::polar(1.0, 11.0 * M_PI / 12.0)) < 1e-14);
    REQUIRE(std::abs(p.r_hat - std::polar(1.0, 5.0 * M_PI / 12.0)) < 1e-14);
    REQUIRE(std::abs(p.r * p.r_hat + p.q) < 1e-14);

    auto p2 = make_params(M_PI / 2.0, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    REQUIRE(std::abs(p2.q - cplx(0, 1)) < 1e-14);
    REQUIRE(std::abs(p2.delta) < 1e-14);

    REQUIRE_THROWS(make_params(0.0, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m));
    REQUIRE_THROWS(make_params(M_PI, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m));
    REQUIRE_THROWS(make_params(0.7, cplx(0, 1), kZeta, Model::xxz, Boundary::xxz_m)); // Q + 1/Q = 0
    REQUIRE_THROWS(make_params(0.7, cplx(2, 0), kZeta, Model::xxz, Boundary::type_i));
    REQUIRE_THROWS(make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::xxz_m));
}

TEST_CASE("asymptotic scalars reduce to the algebraic boundary parameter") {
    // with delta_e = -(S + 1/S), kappa = q/S + S/q the limits are S and 1/S
    const cplx S(1.7, 0.4);
    auto p = make_params(0.9, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    const cplx delta_e = -(S + 1.0 / S);
    const cplx kappa = p.q / S + S / p.q;
    const auto [cp, cm] = asymptotic_k_scalars(delta_e, kappa, p.q);
    REQUIRE(std::abs(cp - S) < 1e-12);
    REQUIRE(std::abs(cm - 1.0 / S) < 1e-12);
}

TEST_CASE("XXZ representation") {
    auto p = make_params(0.7, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    const CMatrix u = tl_u_matrix(p.q);
    REQUIRE(max_abs(u * u - p.delta * u) < 1e-14);
    REQUIRE(std::abs(trace(u) - p.delta) < 1e-15);

    const CMatrix m = xxz_boundary_m(p);
    REQUIRE(rel_residual(m * m, p.delta_e * m) < 1e-14);

    for (double mu : kMuGrid)
        for (cplx Q : kQGrid) {
            auto pg = make_params(mu, Q, kZeta, Model::xxz, Boundary::xxz_m);
            for (const auto& c : check_blob(xxz_rep(pg, 4)))
                { INFO(c.id); REQUIRE(c.residual < 1e-10); }
        }
}

TEST_CASE("twin generator matches its two-factor construction") {
    auto p = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
    const CMatrix theta = twin_theta_u(p);
    REQUIRE(rel_residual(theta, twin_theta_u_product(p)) < 1e-14);
    REQUIRE(rel_residual(theta * theta, p.delta * theta) < 1e-14);
    // the scalar identity behind Theta^2 = delta Theta
    const cplx scal = (p.r + 1.0 / p.r) * (p.r_hat + 1.0 / p.r_hat);
    REQUIRE(std::abs(scal - p.delta) < 1e-14);
    // diagonal phases at the (-,-,+,+) block positions (1-based 4 and 13)
    REQUIRE(std::abs(theta(3, 3) + cplx(0, 1)) < 1e-15);
    REQUIRE(std::abs(theta(12, 12) - cplx(0, 1)) < 1e-15);
}

TEST_CASE("twin blob relations for every boundary element") {
    for (double mu : kMuGrid)
        for (cplx Q : kQGrid)
            for (Boundary b : {Boundary::type_i, Boundary::type_ii, Boundary::type_plus, Boundary::type_iii}) {
                auto p = make_params(mu, Q, kZeta, Model::twin, b);
                for (const auto& c : check_blob(twin_rep(p, 3, b)))
                    { INFO(to_string(b) << " " << c.id); REQUIRE(c.residual < 1e-10); }
            }
}

TEST_CASE("perturbed boundary constant breaks the blob quotient") {
    auto p = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
    auto rep = twin_rep(p, 3, Boundary::type_i);
    const CMatrix& u0 = rep.u_gens.front();
    REQUIRE(rel_residual(u0 * rep.e_gen * u0, (p.kappa + 0.1) * u0) > 1e-3);
}

TEST_CASE("quantum group representations") {
    auto p = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);

    const auto s1 = qgroup_rep(QRep::sigma1, p);
    REQUIRE(std::abs(s1.H(0, 0) - std::polar(1.0, M_PI / 4.0)) < 1e-15);
    REQUIRE(std::abs(s1.H(1, 1) - 1.0) < 1e-15);
    REQUIRE(std::abs(s1.H(2, 2) - 1.0) < 1e-15);
    REQUIRE(std::abs(s1.H(3, 3) - std::polar(1.0, -M_PI / 4.0)) < 1e-15);

    for (QRep name : {QRep::rho, QRep::sigma1, QRep::sigma2, QRep::rho1, QRep::rho2}) {
        const auto qr = qgroup_rep(name, p);
        for (const auto& c : qgroup_relation_residuals(qr.E, qr.F, qr.H, qr.deformation, to_string(name)))
            { INFO(c.id); REQUIRE(c.residual < 1e-12); }
    }

    const auto s2 = qgroup_rep(QRep::sigma2, p);
    const auto r1 = qgroup_rep(QRep::rho1, p);
    const auto r2 = qgroup_rep(QRep::rho2, p);
    REQUIRE(rel_residual(s1.E, r1.E * r2.F) == 0.0);
    REQUIRE(rel_residual(s1.F, r1.F * r2.E) == 0.0);
    REQUIRE(rel_residual(s2.E, r1.E * r2.E) == 0.0);
    REQUIRE(rel_residual(s2.F, r1.F * r2.F) == 0.0);
}

TEST_CASE("sigma/rho Cartan products differ by a signed phase, not a scalar") {
    // The H-product relation holds entrywise as
    //   sigma1(H) sigma2(H) = i * rho1(H) rho2(H) * diag(1, 1, -1, -1)
    // under principal branches; phase i matches entries 1,2 and phase -i
    // matches entries 3,4, so no single scalar works.
    for (double mu : kMuGrid) {
        auto p = make_params(mu, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
        const CMatrix lhs = qgroup_rep(QRep::sigma1, p).H * qgroup_rep(QRep::sigma2, p).H;
        const CMatrix rhs = qgroup_rep(QRep::rho1, p).H * qgroup_rep(QRep::rho2, p).H;
        const cplx i(0, 1);
        for (int k = 0; k < 4; ++k) {
            const cplx ratio = lhs(k, k) / rhs(k, k);
            REQUIRE(std::abs(ratio - (k < 2 ? i : -i)) < 1e-13);
        }
        CMatrix signature = CMatrix::identity(4);
        signature(2, 2) = -1.0;
        signature(3, 3) = -1.0;
        REQUIRE(rel_residual(lhs, i * (rhs * signature)) < 1e-13);
    }
}

TEST_CASE("coproduct towers") {
    auto p = make_params(0.7, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    const auto rho = qgroup_rep(QRep::rho, p);

    const auto t1 = tower(rho, 1);
    REQUIRE(rel_residual(t1.E, rho.E) == 0.0);
    REQUIRE(rel_residual(t1.H, rho.H) == 0.0);

    const auto t3 = tower(rho, 3);
    REQUIRE(rel_residual(t3.H, kron(rho.H, kron(rho.H, rho.H))) < 1e-15);

    // E^(2) = q^{-sz/2} (x) s+ + s+ (x) q^{sz/2}, built by hand
    const auto t2 = tower(rho, 2);
    CMatrix sp(2, 2), hz = rho.H, hzi = invert(rho.H);
    sp(0, 1) = 1.0;
    REQUIRE(rel_residual(t2.E, kron(hzi, sp) + kron(sp, hz)) < 1e-15);

    for (int n : {2, 3, 4})
        for (QRep name : {QRep::rho}) {
            const auto t = tower(qgroup_rep(name, p), n);
            for (const auto& c : qgroup_relation_residuals(t.E, t.F, t.H, t.rep.deformation, "tower"))
                { INFO(n << " " << c.id); REQUIRE(c.residual < 1e-10); }
        }
    auto pt = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
    for (int n : {2, 3, 4})
        for (QRep name : {QRep::sigma1, QRep::sigma2, QRep::rho1, QRep::rho2}) {
            const auto t = tower(qgroup_rep(name, pt), n);
            for (const auto& c : qgroup_relation_residuals(t.E, t.F, t.H, t.rep.deformation, "tower"))
                { INFO(n << " " << c.id); REQUIRE(c.residual < 1e-10); }
        }
}

TEST_CASE("boundary charge constants and the 2x2 charge") {
    // x_q = 1 when the boundary parameter equals q
    auto p = make_params(0.8, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    AlgebraParams pq = p;
    pq.Q_rep = p.q;
    REQUIRE(std::abs(charge_constant(QRep::rho, pq) - 1.0) < 1e-14);
    AlgebraParams p1 = p;
    p1.Q_rep = 1.0;
    REQUIRE(std::abs(charge_constant(QRep::sigma1, p1)) < 1e-14);

    // the rho charge is [[x(q-1), 1], [1, x(1/q - 1)]]
    const cplx x = charge_constant(QRep::rho, p);
    const CMatrix qc = local_charge(qgroup_rep(QRep::rho, p), x);
    CMatrix expect(2, 2);
    expect(0, 0) = x * (p.q - 1.0);
    expect(0, 1) = 1.0;
    expect(1, 0) = 1.0;
    expect(1, 1) = x * (1.0 / p.q - 1.0);
    REQUIRE(rel_residual(qc, expect) < 1e-14);

    // it commutes with the XXZ boundary element exactly at x = x_q
    REQUIRE(comm_residual(qc, xxz_boundary_m(p)) < 1e-14);
    REQUIRE(comm_residual(local_charge(qgroup_rep(QRep::rho, p), x + 0.2), xxz_boundary_m(p)) > 1e-3);
}

TEST_CASE("charge tower equals the generator combination") {
    // Delta(Q) iteration must agree with assembling the charge from tower
    // generators; both routes are exact.
    auto p = make_params(1.1, 1.3 * std::exp(cplx(0.0, 0.4)), kZeta, Model::twin, Boundary::type_i);
    for (QRep name : {QRep::sigma2, QRep::sigma1, QRep::rho1, QRep::rho2}) {
        const auto qr = qgroup_rep(name, p);
        const cplx x = charge_constant(name, p);
        const auto ct = boundary_charge(qr, x, 3);
        const auto tw = tower(qr, 3);
        const cplx g_half = std::sqrt(qr.deformation);
        const CMatrix direct = (1.0 / g_half) * (tw.H * tw.E) + g_half * (tw.H * tw.F) +
                               x * (tw.H * tw.H - CMatrix::identity(tw.H.rows()));
        INFO(to_string(name));
        REQUIRE(rel_residual(ct.Q, direct) < 1e-12);
    }
}

TEST_CASE("towers centralize the blob generators") {
    auto px = make_params(0.7, cplx(2, 0), kZeta, Model::xxz, Boundary::xxz_m);
    const auto repx = xxz_rep(px, 3);
    for (const auto& c : check_centralizer_local(repx, tower(qgroup_rep(QRep::rho, px), 3)))
        { INFO(c.id); REQUIRE(c.residual < 1e-10); }

    auto pt = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
    const auto rept = twin_rep(pt, 2, Boundary::type_i);
    for (QRep name : {QRep::sigma1, QRep::sigma2, QRep::rho1, QRep::rho2})
        for (const auto& c : check_centralizer_local(rept, tower(qgroup_rep(name, pt), 2)))
            { INFO(to_string(name) << " " << c.id); REQUIRE(c.residual < 1e-10); }
}
