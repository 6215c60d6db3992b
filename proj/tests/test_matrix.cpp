#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "blob/eig.hpp"
#include "blob/matrix.hpp"
#include "blob/params.hpp"
#include "blob/reps.hpp"
#include "blob/rng.hpp"
#include "blob/tensor.hpp"

using namespace blob;

namespace {
CMatrix pauli(char which) {
    CMatrix m(2, 2);
    switch (which) {
        case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        case '+': m(0, 1) = 1.0; break;
        case '-': m(1, 0) = 1.0; break;
    }
    return m;
}

CMatrix random_matrix(int n, Rng& rng) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return m;
}
} // namespace

TEST_CASE("kron basics") {
    const CMatrix i2 = CMatrix::identity(2);
    REQUIRE(rel_residual(kron(i2, i2), CMatrix::identity(4)) == 0.0);

    CMatrix d(2, 2);
    d(0, 0) = cplx(2.0, 1.0);
    d(1, 1) = cplx(-3.0, 0.5);
    const CMatrix k = kron(d, i2);
    REQUIRE(k(0, 0) == d(0, 0));
    REQUIRE(k(1, 1) == d(0, 0));
    REQUIRE(k(2, 2) == d(1, 1));
    REQUIRE(k(3, 3) == d(1, 1));

    // sigma+ (x) sigma- has its single 1 at row 1, col 2 (0-based)
    const CMatrix sp = kron(pauli('+'), pauli('-'));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE(sp(i, j) == ((i == 1 && j == 2) ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("kron mixed product and associativity") {
    Rng rng(11);
    const CMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
    const CMatrix c = random_matrix(2, rng), d = random_matrix(3, rng);
    REQUIRE(rel_residual(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-14);
    // associativity up to the 1-ulp regrouping of complex products
    REQUIRE(rel_residual(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-15);
}

TEST_CASE("permutation operator") {
    REQUIRE(rel_residual(permutation(1), CMatrix::identity(1)) == 0.0);
    const CMatrix p2 = permutation(2);
    REQUIRE(rel_residual(p2 * p2, CMatrix::identity(4)) == 0.0);
    REQUIRE(rel_residual(p2, transpose(p2)) == 0.0);
    REQUIRE(trace(permutation(4)) == cplx(4.0));

    Rng rng(3);
    const CMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
    REQUIRE(rel_residual(p2 * kron(a, b) * p2, kron(b, a)) < 1e-15);
}

TEST_CASE("embed") {
    const SiteLayout chain3(3, 2);
    REQUIRE(rel_residual(embed(CMatrix::identity(4), 1, 2, chain3), CMatrix::identity(8)) == 0.0);

    const auto p = make_params(0.7, cplx(2, 0), cplx(0.3, 0), Model::xxz, Boundary::xxz_m);
    const CMatrix u = tl_u_matrix(p.q);
    REQUIRE(rel_residual(embed(u, 1, 2, SiteLayout(2, 2)), u) == 0.0);
    REQUIRE(rel_residual(embed(u, 2, 2, chain3), kron(CMatrix::identity(2), u)) == 0.0);
    REQUIRE_THROWS(embed(u, 3, 2, chain3));
    REQUIRE_THROWS(embed(CMatrix::identity(3), 1, 1, chain3));
}

TEST_CASE("leg_permute") {
    Rng rng(5);
    const CMatrix op = random_matrix(8, rng);
    REQUIRE(rel_residual(leg_permute(op, {1, 2, 3}, 2), op) == 0.0);

    const CMatrix two = random_matrix(4, rng);
    const CMatrix p = permutation(2);
    REQUIRE(rel_residual(leg_permute(two, {2, 1}, 2), p * two * p) < 1e-15);

    // composition: applying perm then sigma equals the composed permutation
    const std::vector<int> perm = {2, 3, 1}, sigma = {3, 1, 2};
    std::vector<int> composed(3);
    for (int i = 0; i < 3; ++i) composed[i] = sigma[perm[i] - 1];
    REQUIRE(rel_residual(leg_permute(leg_permute(op, perm, 2), sigma, 2), leg_permute(op, composed, 2)) == 0.0);

    REQUIRE_THROWS(leg_permute(op, {1, 1, 2}, 2));
}

TEST_CASE("comm_residual") {
    Rng rng(7);
    const CMatrix a = random_matrix(4, rng);
    REQUIRE(comm_residual(a, a) == 0.0);
    CMatrix d1(3, 3), d2(3, 3);
    for (int i = 0; i < 3; ++i) {
        d1(i, i) = cplx(i + 1, 0.5 * i);
        d2(i, i) = cplx(2 - i, -0.25 * i);
    }
    REQUIRE(comm_residual(d1, d2) == 0.0);
    // ||[sx, sz]||_F = ||-2i sy||_F = 2 sqrt(2); max(1, ||sx sz||, ||sz sx||) = sqrt(2)
    REQUIRE(comm_residual(pauli('x'), pauli('z')) == Catch::Approx(2.0));
    REQUIRE_THROWS(comm_residual(a, d1));
}

TEST_CASE("scalar_fit") {
    const CMatrix i3 = CMatrix::identity(3);
    auto fit = scalar_fit(2.0 * i3, i3);
    REQUIRE(std::abs(fit.factor - cplx(2.0)) < 1e-15);
    REQUIRE(fit.residual == 0.0);

    fit = scalar_fit(CMatrix::zero(3, 3), i3);
    REQUIRE(fit.factor == cplx(0.0));
    REQUIRE(fit.residual == 0.0);

    const double eps = 1e-4;
    const CMatrix a = CMatrix::identity(2) + eps * pauli('x');
    fit = scalar_fit(a, CMatrix::identity(2));
    REQUIRE(std::abs(fit.factor - cplx(1.0)) < 1e-15);
    REQUIRE(fit.residual == Catch::Approx(eps * frobenius_norm(pauli('x')) / frobenius_norm(a)).epsilon(1e-10));

    REQUIRE_THROWS(scalar_fit(i3, CMatrix::zero(3, 3)));
}

TEST_CASE("invert") {
    REQUIRE(rel_residual(invert(CMatrix::identity(5)), CMatrix::identity(5)) == 0.0);
    Rng rng(13);
    for (int n : {2, 8, 32}) {
        const CMatrix a = random_matrix(n, rng);
        REQUIRE(frobenius_norm(a * invert(a) - CMatrix::identity(n)) <= 1e-10 * n);
    }
    CMatrix sing(2, 2);
    sing(0, 0) = 1.0;
    sing(0, 1) = 1.0;
    sing(1, 0) = 1.0;
    sing(1, 1) = 1.0;
    REQUIRE_THROWS(invert(sing));
}

TEST_CASE("eigenvalues") {
    CMatrix d(3, 3);
    d(0, 0) = cplx(1, 0);
    d(1, 1) = cplx(2, 0);
    d(2, 2) = cplx(3, 0);
    auto e = eigenvalues(d);
    sort_spectrum(e);
    REQUIRE(std::abs(e[0] - cplx(1, 0)) < 1e-12);
    REQUIRE(std::abs(e[1] - cplx(2, 0)) < 1e-12);
    REQUIRE(std::abs(e[2] - cplx(3, 0)) < 1e-12);

    const auto p = make_params(0.7, cplx(2, 0), cplx(0.3, 0), Model::xxz, Boundary::xxz_m);
    CMatrix dq(2, 2);
    dq(0, 0) = p.q;
    dq(1, 1) = 1.0 / p.q;
    REQUIRE(compare_spectra(eigenvalues(dq), {p.q, 1.0 / p.q}) < 1e-12);

    // U(q) has spectrum {0, 0, 0, delta} since U^2 = delta U, tr U = delta
    const CMatrix u = tl_u_matrix(p.q);
    REQUIRE(compare_spectra(eigenvalues(u), {0.0, 0.0, 0.0, p.delta}) < 1e-12);
}

TEST_CASE("eigenvalue sum and product match trace and determinant") {
    Rng rng(17);
    for (int n : {3, 6, 12, 24}) {
        const CMatrix a = random_matrix(n, rng);
        const auto e = eigenvalues(a);
        cplx sum = 0.0, prod = 1.0;
        for (const auto& v : e) {
            sum += v;
            prod *= v;
        }
        REQUIRE(std::abs(sum - trace(a)) / std::max(1.0, std::abs(trace(a))) < 1e-8);
        const cplx det = determinant(a);
        REQUIRE(std::abs(prod - det) / std::max(1.0, std::abs(det)) < 1e-6);
    }
}

TEST_CASE("span_fit") {
    Rng rng(19);
    const CMatrix b1 = CMatrix::identity(4), b2 = random_matrix(4, rng), b3 = random_matrix(4, rng);
    const CMatrix a = cplx(0.3, 1.1) * b1 + cplx(-2.0, 0.4) * b2 + cplx(0.0, 5.0) * b3;
    const auto fit = span_fit(a, {b1, b2, b3});
    REQUIRE(fit.residual < 1e-12);
    REQUIRE(std::abs(fit.coeff[1] - cplx(-2.0, 0.4)) < 1e-10);
    const auto off = span_fit(a + random_matrix(4, rng), {b1});
    REQUIRE(off.residual > 1e-2);
}

TEST_CASE("gram_rank") {
    Rng rng(23);
    const CMatrix a = random_matrix(3, rng), b = random_matrix(3, rng);
    REQUIRE(gram_rank({a, b, a + b}) == 2);
    REQUIRE(gram_rank({a, b, random_matrix(3, rng)}) == 3);
    REQUIRE(gram_rank({CMatrix::zero(3, 3)}) == 0);
}

TEST_CASE("partial transpose and auxiliary blocks") {
    Rng rng(29);
    const CMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
    REQUIRE(rel_residual(partial_transpose_first(kron(a, b), 2, 3), kron(transpose(a), b)) < 1e-15);

    const CMatrix m = kron(a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) REQUIRE(rel_residual(block_first(m, i, j, 2), a(i, j) * b) < 1e-15);

    // tr_0 { W (x) B } = tr(W^T ... ): partial_trace_first(kron(a,b), w) = sum w_ab a_ba * b
    const CMatrix w = random_matrix(2, rng);
    cplx scal = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) scal += w(i, j) * a(j, i);
    REQUIRE(rel_residual(partial_trace_first(kron(a, b), w), scal * b) < 1e-14);
}

TEST_CASE("spectra comparison helpers") {
    std::vector<cplx> s1 = {cplx(1, 0), cplx(0, 1), cplx(2, -1)};
    std::vector<cplx> s2 = {cplx(2, -1), cplx(1, 0), cplx(0, 1)};
    REQUIRE(compare_spectra(s1, s2) == 0.0);
    const auto counts = degeneracy_counts({cplx(1, 0), cplx(1, 0), cplx(2, 0)});
    REQUIRE(counts == std::vector<int>{2, 1});
}
