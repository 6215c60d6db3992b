#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "blob/lax.hpp"
#include "blob/params.hpp"
#include "blob/reps.hpp"
#include "blob/rng.hpp"

using namespace blob;

namespace {
const cplx kZeta(0.3, 0.0);

LaxFactory lax_for(Model m, Boundary b, double mu = 0.7, cplx Q = cplx(2, 0), cplx zeta = kZeta) {
    return make_lax(make_params(mu, Q, zeta, m, b));
}
} // namespace

TEST_CASE("R at the origin is the permutation times sinh(i mu)") {
    for (Model m : {Model::xxz, Model::twin}) {
        const auto lax = lax_for(m, m == Model::xxz ? Boundary::xxz_m : Boundary::type_i);
        const cplx s = std::sinh(cplx(0.0, lax.params().mu));
        REQUIRE(rel_residual(lax.R(0.0), s * lax.perm()) < 1e-15);
        REQUIRE(std::abs(lax.b_of(0.0)) == 0.0);
    }
}

TEST_CASE("Rcheck unitarity carries the scalar a(l) a(-l)") {
    const auto lax = lax_for(Model::twin, Boundary::type_i);
    const cplx l(0.63, -0.21);
    const CMatrix prod = lax.Rcheck(l) * lax.Rcheck(-l);
    const auto fit = scalar_fit(prod, CMatrix::identity(16));
    REQUIRE(fit.residual < 1e-14);
    REQUIRE(std::abs(fit.factor - lax.a_of(l) * lax.a_of(-l)) < 1e-12);
}

TEST_CASE("rescaled inverse equals the reflected R matrix") {
    for (Model m : {Model::xxz, Model::twin}) {
        const auto lax = lax_for(m, m == Model::xxz ? Boundary::xxz_m : Boundary::type_ii);
        LambdaSampler smp(99, lax.params().mu);
        for (int k = 0; k < 4; ++k) {
            const cplx l = smp.sample();
            REQUIRE(rel_residual(lax.Rhat(l), lax.Rcheck(l) * lax.perm()) < 1e-12);
        }
    }
}

TEST_CASE("Yang-Baxter equation on the seeded grid") {
    for (Model m : {Model::xxz, Model::twin}) {
        const auto lax = lax_for(m, Boundary::trivial);
        LambdaSampler smp(fnv1a64("ybe-test-" + to_string(m)), lax.params().mu);
        for (int k = 0; k < 10; ++k) {
            const auto [l1, l2] = smp.sample_pair();
            INFO(to_string(m) << " pair " << k);
            REQUIRE(lax.ybe_residual(l1, l2) < 1e-10);
        }
    }
}

TEST_CASE("perturbed twin entry is detected by the Yang-Baxter residual") {
    const auto p = make_params(0.7, cplx(2, 0), kZeta, Model::twin, Boundary::type_i);
    CMatrix u = twin_theta_u(p);
    u(3, 6) += 0.01; // entry (4,7) 1-based
    const LaxFactory bad(p, u, twin_boundary_m(p, Boundary::type_i), false);
    REQUIRE(bad.ybe_residual(cplx(0.4, 0.2), cplx(-0.3, 0.5)) > 1e-4);
}

TEST_CASE("reflection equation for all five boundary matrices and two zetas") {
    struct Case {
        Model m;
        Boundary b;
    };
    const Case cases[] = {{Model::xxz, Boundary::xxz_m},
                          {Model::twin, Boundary::type_i},
                          {Model::twin, Boundary::type_ii},
                          {Model::twin, Boundary::type_plus},
                          {Model::twin, Boundary::type_iii}};
    for (const auto& c : cases)
        for (cplx zeta : {kZeta, kZeta + 0.4}) {
            const auto lax = lax_for(c.m, c.b, 0.7, cplx(2, 0), zeta);
            LambdaSampler smp(fnv1a64("re-test-" + to_string(c.b)), 0.7);
            for (int k = 0; k < 10; ++k) {
                const auto [l1, l2] = smp.sample_pair();
                INFO(to_string(c.b) << " zeta " << zeta.real() << " pair " << k);
                REQUIRE(lax.re_residual(l1, l2) < 1e-10);
            }
        }
}

TEST_CASE("trivial K solves the reflection equation identically") {
    const auto lax = lax_for(Model::twin, Boundary::trivial);
    REQUIRE(lax.re_residual(cplx(0.5, 0.1), cplx(-0.2, 0.35)) < 1e-14);
}

TEST_CASE("K at the origin is proportional to the identity") {
    const auto lax = lax_for(Model::twin, Boundary::type_ii);
    const CMatrix k0 = lax.K(0.0);
    REQUIRE(rel_residual(k0, lax.x_of(0.0) * CMatrix::identity(4)) < 1e-15);
    REQUIRE(std::abs(lax.y_of(0.0)) == 0.0);
}

TEST_CASE("all boundary K matrices are symmetric") {
    for (Boundary b : {Boundary::type_i, Boundary::type_ii, Boundary::type_plus, Boundary::type_iii}) {
        const auto lax = lax_for(Model::twin, b);
        const CMatrix k = lax.K(cplx(0.44, 0.2));
        REQUIRE(rel_residual(k, transpose(k)) < 1e-14);
    }
    const auto laxx = lax_for(Model::xxz, Boundary::xxz_m);
    const CMatrix k = laxx.K(cplx(0.44, 0.2));
    REQUIRE(rel_residual(k, transpose(k)) < 1e-14);
}

TEST_CASE("unitarity, crossing and twist conditions") {
    for (Model m : {Model::xxz, Model::twin}) {
        const auto lax = lax_for(m, m == Model::xxz ? Boundary::xxz_m : Boundary::type_i);
        LambdaSampler smp(fnv1a64("cond-" + to_string(m)), lax.params().mu);
        REQUIRE(lax.twist_symmetry_residual() == 0.0);
        for (int k = 0; k < 5; ++k) {
            const cplx l = smp.sample();
            INFO(to_string(m) << " sample " << k);
            REQUIRE(lax.unitarity_residual(l) < 1e-10);
            REQUIRE(lax.crossing_residual(l) < 1e-10);
            REQUIRE(lax.twist_comm_residual(l) < 1e-12);
        }
    }
}

TEST_CASE("braid limits of the Yang-Baxter equation") {
    for (Model m : {Model::xxz, Model::twin}) {
        const auto lax = lax_for(m, Boundary::trivial);
        for (int sign : {+1, -1})
            for (bool hat : {false, true}) {
                INFO(to_string(m) << " sign " << sign << " hat " << hat);
                REQUIRE(lax.braid_residual(sign, hat) < 1e-10);
            }
    }
}

TEST_CASE("constant-limit reflection relation") {
    for (Boundary b : {Boundary::type_i, Boundary::type_ii, Boundary::type_plus, Boundary::type_iii}) {
        const auto lax = lax_for(Model::twin, b);
        for (int s : {+1, -1})
            for (int d : {+1, -1}) {
                INFO(to_string(b) << " sum " << s << " diff " << d);
                REQUIRE(lax.constant_re_residual(s, d) < 1e-10);
            }
    }
    const auto laxx = lax_for(Model::xxz, Boundary::xxz_m);
    for (int s : {+1, -1})
        for (int d : {+1, -1}) REQUIRE(laxx.constant_re_residual(s, d) < 1e-10);
}

TEST_CASE("asymptotic limits") {
    const auto lax = lax_for(Model::twin, Boundary::type_i);
    const cplx q = lax.params().q;

    // Rcheck+ Rcheck- = (U + q)(U + 1/q) = U^2 - delta U + I = I
    REQUIRE(rel_residual(lax.Rcheck_pm(+1) * lax.Rcheck_pm(-1), CMatrix::identity(16)) < 1e-14);
    (void)q;

    // numeric limit of K(lambda)/y(lambda) at |lambda| = 30
    for (int sign : {+1, -1}) {
        const cplx big(sign * 30.0, 0.0);
        REQUIRE(rel_residual((1.0 / lax.y_of(big)) * lax.K(big), lax.K_pm(sign)) < 1e-8);
    }
}
