// Double-row transfer matrix machinery: the dressed operator script-T on
// auxiliary (x) chain, the open-chain transfer matrix and Hamiltonian, the
// asymptotic boundary charges, and the commutator/exchange-relation suites
// built on them.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "blob/eig.hpp"
#include "blob/lax.hpp"
#include "blob/matrix.hpp"
#include "blob/qgroup.hpp"
#include "blob/reps.hpp"
#include "blob/tensor.hpp"

namespace blob {

class DoubleRow {
public:
    DoubleRow(const LaxFactory& lax, int num_sites)
        : lax_(lax), n_(num_sites), d_(lax.local_dim()), chain_(ipow(d_, num_sites)), total_(d_ * chain_) {
        if (num_sites < 1) throw std::invalid_argument("DoubleRow: need at least one site");
    }

    int num_sites() const { return n_; }
    int local_dim() const { return d_; }
    long chain_dim() const { return chain_; }
    long total_dim() const { return total_; }
    const LaxFactory& lax() const { return lax_; }

    // R_{0 i}(lambda) on the (N+1)-leg space, auxiliary = leg 1.
    CMatrix embedded_R(const CMatrix& r_local, int site) const {
        return op_on_legs(r_local, 1, 1 + site, n_ + 1, d_);
    }
    CMatrix embedded_K(const CMatrix& k_local) const {
        return kron(k_local, CMatrix::identity(static_cast<int>(chain_)));
    }

    // script-T(lambda) = R_{0N} ... R_{01} K_0 Rhat_{01} ... Rhat_{0N}
    CMatrix script_T(cplx lambda) const {
        const CMatrix r = lax_.R(lambda);
        const CMatrix rhat = lax_.Rhat(lambda);
        CMatrix acc = embedded_R(r, n_);
        for (int i = n_ - 1; i >= 1; --i) acc = acc * embedded_R(r, i);
        acc = acc * embedded_K(lax_.K(lambda));
        for (int i = 1; i <= n_; ++i) acc = acc * embedded_R(rhat, i);
        return acc;
    }

    // Same product built from the lambda -> +-infinity limit factors.
    CMatrix script_T_limit(int sign) const {
        const CMatrix r = lax_.R_pm(sign);
        const CMatrix rhat = lax_.Rhat_pm(sign);
        CMatrix acc = embedded_R(r, n_);
        for (int i = n_ - 1; i >= 1; --i) acc = acc * embedded_R(r, i);
        acc = acc * embedded_K(lax_.K_pm(sign));
        for (int i = 1; i <= n_; ++i) acc = acc * embedded_R(rhat, i);
        return acc;
    }

    CMatrix aux_block(const CMatrix& m, int a, int b) const { return block_first(m, a, b, d_); }

    // t(lambda) = tr_0 { M_0 script-T_0(lambda) }, trivial left boundary.
    CMatrix transfer(cplx lambda) const { return partial_trace_first(script_T(lambda), lax_.twist()); }

    static std::vector<std::vector<std::string>> block_labels(int d) {
        if (d == 2) return {{"A", "B"}, {"C", "D"}};
        if (d == 4)
            return {{"A", "B1", "B2", "B"},
                    {"C1", "A1", "B5", "B3"},
                    {"C2", "C5", "A2", "B4"},
                    {"C", "C3", "C4", "D"}};
        throw std::invalid_argument("block_labels: no label table for this dimension");
    }

    std::map<std::string, CMatrix> labelled_blocks(const CMatrix& script_t) const {
        const auto labels = block_labels(d_);
        std::map<std::string, CMatrix> blocks;
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b) blocks[labels[a][b]] = aux_block(script_t, a, b);
        return blocks;
    }

    // t(lambda) assembled from the labelled blocks and the printed twisted
    // sum; cross-checks the trace route.
    CMatrix transfer_from_blocks(cplx lambda) const {
        auto blocks = labelled_blocks(script_T(lambda));
        const cplx q = lax_.params().q;
        if (d_ == 2) return q * blocks["A"] + (1.0 / q) * blocks["D"];
        const cplx i(0, 1);
        return i * blocks["A"] + (1.0 / q) * blocks["A1"] + q * blocks["A2"] - i * blocks["D"];
    }

    // Exact derivative of t at lambda = 0 by the product rule over all
    // 2N+1 factors, using the analytic factor derivatives.
    CMatrix hamiltonian() const {
        const AlgebraParams& p = lax_.params();
        const double mu = p.mu;
        const cplx a0 = std::sinh(cplx(0.0, mu));
        const cplx da0 = mu * std::cosh(cplx(0.0, mu));
        const cplx db0 = mu;
        const CMatrix perm = lax_.perm();
        const CMatrix id2 = CMatrix::identity(d_ * d_);

        const CMatrix r0 = a0 * perm;
        const CMatrix dr0 = perm * (da0 * id2 + db0 * lax_.u_local());
        const CMatrix rhat0 = a0 * perm;
        const CMatrix drhat0 = (da0 * id2 + db0 * lax_.u_local()) * perm;

        CMatrix k0 = CMatrix::identity(d_);
        CMatrix dk0 = CMatrix::zero(d_, d_);
        if (!lax_.trivial_boundary()) {
            k0 = lax_.x_of(0.0) * CMatrix::identity(d_);
            const cplx dx0 = -2.0 * mu * p.delta_e * std::sinh(cplx(0.0, mu));
            const cplx dy0 = 4.0 * mu * std::sinh(cplx(0.0, mu));
            dk0 = dx0 * CMatrix::identity(d_) + dy0 * lax_.e_local();
        }

        std::vector<CMatrix> val, der;
        for (int i = n_; i >= 1; --i) {
            val.push_back(embedded_R(r0, i));
            der.push_back(embedded_R(dr0, i));
        }
        val.push_back(embedded_K(k0));
        der.push_back(embedded_K(dk0));
        for (int i = 1; i <= n_; ++i) {
            val.push_back(embedded_R(rhat0, i));
            der.push_back(embedded_R(drhat0, i));
        }
        const int m = static_cast<int>(val.size());
        std::vector<CMatrix> prefix(m + 1), suffix(m + 1);
        prefix[0] = CMatrix::identity(static_cast<int>(total_));
        for (int k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * val[k];
        suffix[m] = CMatrix::identity(static_cast<int>(total_));
        for (int k = m - 1; k >= 0; --k) suffix[k] = val[k] * suffix[k + 1];
        CMatrix dT(static_cast<int>(total_), static_cast<int>(total_));
        for (int k = 0; k < m; ++k) dT += prefix[k] * der[k] * suffix[k + 1];
        return partial_trace_first(dT, lax_.twist());
    }

    // script-T is itself a solution of the reflection equation in a pair
    // of auxiliary spaces.
    double re_in_aux_residual(cplx l1, cplx l2) const {
        const CMatrix t1a = dress(script_T(l1), true);
        const CMatrix t2b = dress(script_T(l2), false);
        const CMatrix idc = CMatrix::identity(static_cast<int>(chain_));
        const CMatrix& perm = lax_.perm();
        const CMatrix r12m = kron(lax_.R(l1 - l2), idc);
        const CMatrix r12p = kron(lax_.R(l1 + l2), idc);
        const CMatrix r21m = kron(perm * lax_.R(l1 - l2) * perm, idc);
        const CMatrix r21p = kron(perm * lax_.R(l1 + l2) * perm, idc);
        return rel_residual(r12m * t1a * r21p * t2b, t2b * r12p * t1a * r21m);
    }

private:
    // Lift script-T from aux (x) chain to aux1 (x) aux2 (x) chain, acting on
    // the first or the second auxiliary copy.
    CMatrix dress(const CMatrix& t, bool first) const {
        const int dc = static_cast<int>(chain_);
        CMatrix out(d_ * d_ * dc, d_ * d_ * dc);
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b) {
                const CMatrix blk = aux_block(t, a, b);
                for (int s = 0; s < d_; ++s) {
                    const long row0 = first ? (static_cast<long>(a) * d_ + s) : (static_cast<long>(s) * d_ + a);
                    const long col0 = first ? (static_cast<long>(b) * d_ + s) : (static_cast<long>(s) * d_ + b);
                    for (int i = 0; i < dc; ++i)
                        for (int j = 0; j < dc; ++j) {
                            const cplx v = blk(i, j);
                            if (v.real() == 0.0 && v.imag() == 0.0) continue;
                            out(static_cast<int>(row0 * dc + i), static_cast<int>(col0 * dc + j)) = v;
                        }
                }
            }
        return out;
    }

    LaxFactory lax_;
    int n_;
    int d_;
    long chain_;
    long total_;
};

// ---------------------------------------------------------------------------
// Coproduct intertwiners X = (h (x) h^{(x)N}) Delta'^{(N+1)}(x) on
// aux (x) chain; they commute with script-T when the boundary preserves the
// corresponding charge.

inline CMatrix generator_intertwiner(const QGroupRep& rep, const ChargeTower& t, char which) {
    const long chain = t.E.rows();
    const CMatrix idc = CMatrix::identity(static_cast<int>(chain));
    switch (which) {
        case 'E': return kron(rep.E, t.Hinv) + kron(rep.H, t.E);
        case 'F': return kron(rep.F, t.Hinv) + kron(rep.H, t.F);
        case 'H': return kron(rep.H, t.H);
        default: throw std::invalid_argument("generator_intertwiner: unknown generator");
    }
    (void)idc;
}

inline CMatrix charge_intertwiner(const QGroupRep& rep, const ChargeTower& t) {
    if (!t.has_charge) throw std::invalid_argument("charge_intertwiner: tower carries no charge");
    const long chain = t.Q.rows();
    return kron(local_charge(rep, t.x), CMatrix::identity(static_cast<int>(chain))) + kron(rep.H * rep.H, t.Q);
}

// ---------------------------------------------------------------------------
// Exchange relations between script-T blocks and the charge towers.

namespace detail {

struct Rel {
    std::string id;
    CMatrix lhs, rhs;
};

inline void push(CheckList& out, const std::string& id, const CMatrix& lhs, const CMatrix& rhs) {
    out.push_back({id, rel_residual(lhs, rhs), ""});
}

inline void push_zero(CheckList& out, const std::string& id, const CMatrix& lhs) {
    out.push_back({id, rel_residual(lhs, CMatrix::zero(lhs.rows(), lhs.cols())), ""});
}

} // namespace detail

// XXZ with trivial boundaries: the Bethe-ansatz type relations between
// the monodromy blocks and the U_q(sl2) tower.
inline CheckList exchange_relations_xxz(const DoubleRow& dr, const AlgebraParams& p, cplx lambda,
                                        const std::string& tag) {
    using detail::push;
    using detail::push_zero;
    auto blocks = dr.labelled_blocks(dr.script_T(lambda));
    const CMatrix &A = blocks["A"], &B = blocks["B"], &C = blocks["C"], &D = blocks["D"];
    const ChargeTower t = tower(qgroup_rep(QRep::rho, p), dr.num_sites());
    const CMatrix &E = t.E, &F = t.F, &H = t.H, &Hi = t.Hinv;
    const cplx q = p.q;
    const cplx qh = std::exp(cplx(0.0, p.mu / 2.0));
    CheckList out;
    push_zero(out, "co1/comm-A-H" + tag, comm(A, H));
    push_zero(out, "co1/comm-D-H" + tag, comm(D, H));
    push_zero(out, "co1/qcomm-C-H" + tag, qcomm(C, H, 1.0 / q));
    push_zero(out, "co1/qcomm-C-Hinv" + tag, qcomm(C, Hi, q));
    push_zero(out, "co1/qcomm-B-H" + tag, qcomm(B, H, q));
    push_zero(out, "co1/qcomm-B-Hinv" + tag, qcomm(B, Hi, 1.0 / q));
    push(out, "co2/comm-E-A" + tag, comm(E, A), (-1.0 / qh) * (Hi * C));
    push(out, "co2/comm-E-D" + tag, comm(E, D), qh * (C * Hi));
    push_zero(out, "co2/qcomm-E-C" + tag, qcomm(E, C, q));
    push(out, "co2/qcomm-E-B" + tag, qcomm(E, B, 1.0 / q), (1.0 / qh) * (A * Hi - Hi * D));
    push(out, "co3/comm-F-A" + tag, comm(F, A), (1.0 / qh) * (B * Hi));
    push(out, "co3/comm-F-D" + tag, comm(F, D), -qh * (Hi * B));
    push_zero(out, "co3/qcomm-F-B" + tag, qcomm(F, B, 1.0 / q));
    push(out, "co3/qcomm-F-C" + tag, qcomm(F, C, q), qh * (D * Hi - Hi * A));
    return out;
}

// Twin with trivial boundaries: relations for the sigma towers ...
inline CheckList exchange_relations_twin_sigma(const DoubleRow& dr, const AlgebraParams& p, cplx lambda,
                                               const std::string& tag) {
    using detail::push;
    using detail::push_zero;
    auto blocks = dr.labelled_blocks(dr.script_T(lambda));
    const int n = dr.num_sites();
    const ChargeTower t1 = tower(qgroup_rep(QRep::sigma1, p), n);
    const ChargeTower t2 = tower(qgroup_rep(QRep::sigma2, p), n);
    const cplx q = p.q;
    const cplx qh = std::exp(cplx(0.0, p.mu / 2.0));
    const cplx i(0, 1);
    const cplx ih = std::exp(cplx(0.0, M_PI / 4.0));
    CheckList out;
    for (const char* lbl : {"A", "D", "A1", "A2"}) {
        push_zero(out, std::string("comu1/comm-H1-") + lbl + tag, comm(t1.H, blocks[lbl]));
        push_zero(out, std::string("comu1/comm-H2-") + lbl + tag, comm(t2.H, blocks[lbl]));
    }
    push_zero(out, "comu1/qcomm-C-H1inv" + tag, qcomm(blocks["C"], t1.Hinv, i));
    push_zero(out, "comu1/qcomm-B-H1inv" + tag, qcomm(blocks["B"], t1.Hinv, 1.0 / i));
    push_zero(out, "comu1/qcomm-C5-H2inv" + tag, qcomm(blocks["C5"], t2.Hinv, 1.0 / q));
    push_zero(out, "comu1/qcomm-B5-H2inv" + tag, qcomm(blocks["B5"], t2.Hinv, q));
    push(out, "comu2/comm-E1-A" + tag, comm(t1.E, blocks["A"]), (-1.0 / ih) * (t1.Hinv * blocks["C"]));
    push(out, "comu2/comm-E1-D" + tag, comm(t1.E, blocks["D"]), ih * (blocks["C"] * t1.Hinv));
    push_zero(out, "comu2/comm-E1-A1" + tag, comm(t1.E, blocks["A1"]));
    push_zero(out, "comu2/comm-E1-A2" + tag, comm(t1.E, blocks["A2"]));
    push(out, "comu2/comm-F1-A" + tag, comm(t1.F, blocks["A"]), (1.0 / ih) * (blocks["B"] * t1.Hinv));
    push(out, "comu2/comm-F1-D" + tag, comm(t1.F, blocks["D"]), -ih * (t1.Hinv * blocks["B"]));
    push_zero(out, "comu2/comm-F1-A1" + tag, comm(t1.F, blocks["A1"]));
    push_zero(out, "comu2/comm-F1-A2" + tag, comm(t1.F, blocks["A2"]));
    push(out, "comu2/comm-F2-A1" + tag, comm(t2.F, blocks["A1"]), -qh * (t2.Hinv * blocks["C5"]));
    push(out, "comu2/comm-F2-A2" + tag, comm(t2.F, blocks["A2"]), (1.0 / qh) * (blocks["C5"] * t2.Hinv));
    push_zero(out, "comu2/comm-F2-A" + tag, comm(t2.F, blocks["A"]));
    push_zero(out, "comu2/comm-F2-D" + tag, comm(t2.F, blocks["D"]));
    push(out, "comu2/comm-E2-A1" + tag, comm(t2.E, blocks["A1"]), qh * (blocks["B5"] * t2.Hinv));
    push(out, "comu2/comm-E2-A2" + tag, comm(t2.E, blocks["A2"]), (-1.0 / qh) * (t2.Hinv * blocks["B5"]));
    push_zero(out, "comu2/comm-E2-A" + tag, comm(t2.E, blocks["A"]));
    push_zero(out, "comu2/comm-E2-D" + tag, comm(t2.E, blocks["D"]));
    return out;
}

// ... and for the rho towers.
inline CheckList exchange_relations_twin_rho(const DoubleRow& dr, const AlgebraParams& p, cplx lambda,
                                             const std::string& tag) {
    using detail::push;
    using detail::push_zero;
    auto blocks = dr.labelled_blocks(dr.script_T(lambda));
    const int n = dr.num_sites();
    const ChargeTower t1 = tower(qgroup_rep(QRep::rho1, p), n); // deformation r_hat
    const ChargeTower t2 = tower(qgroup_rep(QRep::rho2, p), n); // deformation r
    const cplx r = p.r, rh = p.r_hat;
    const cplx r_half = std::sqrt(p.r), rh_half = std::sqrt(p.r_hat);
    CheckList out;
    push_zero(out, "tcomu1/qcomm-B1-Ht1inv" + tag, qcomm(blocks["B1"], t1.Hinv, 1.0 / rh));
    push_zero(out, "tcomu1/qcomm-B4-Ht1inv" + tag, qcomm(blocks["B4"], t1.Hinv, 1.0 / rh));
    push_zero(out, "tcomu1/qcomm-C1-Ht1inv" + tag, qcomm(blocks["C1"], t1.Hinv, rh));
    push_zero(out, "tcomu1/qcomm-C4-Ht1inv" + tag, qcomm(blocks["C4"], t1.Hinv, rh));
    push_zero(out, "tcomu1/qcomm-B2-Ht2inv" + tag, qcomm(blocks["B2"], t2.Hinv, r));
    push_zero(out, "tcomu1/qcomm-B3-Ht2inv" + tag, qcomm(blocks["B3"], t2.Hinv, r));
    push_zero(out, "tcomu1/qcomm-C2-Ht2inv" + tag, qcomm(blocks["C2"], t2.Hinv, 1.0 / r));
    push_zero(out, "tcomu1/qcomm-C3-Ht2inv" + tag, qcomm(blocks["C3"], t2.Hinv, 1.0 / r));
    push(out, "tcomu2/comm-E1-A" + tag, comm(t1.E, blocks["A"]), (-1.0 / rh_half) * (t1.Hinv * blocks["C1"]));
    push(out, "tcomu2/comm-E1-A1" + tag, comm(t1.E, blocks["A1"]), rh_half * (blocks["C1"] * t1.Hinv));
    push(out, "tcomu2/comm-E1-A2" + tag, comm(t1.E, blocks["A2"]), (-1.0 / rh_half) * (t1.Hinv * blocks["C4"]));
    push(out, "tcomu2/comm-E1-D" + tag, comm(t1.E, blocks["D"]), rh_half * (blocks["C4"] * t1.Hinv));
    push(out, "tcomu2/comm-F1-A" + tag, comm(t1.F, blocks["A"]), (1.0 / rh_half) * (blocks["B1"] * t1.Hinv));
    push(out, "tcomu2/comm-F1-A1" + tag, comm(t1.F, blocks["A1"]), -rh_half * (t1.Hinv * blocks["B1"]));
    push(out, "tcomu2/comm-F1-A2" + tag, comm(t1.F, blocks["A2"]), (1.0 / rh_half) * (blocks["B4"] * t1.Hinv));
    push(out, "tcomu2/comm-F1-D" + tag, comm(t1.F, blocks["D"]), -rh_half * (t1.Hinv * blocks["B4"]));
    push(out, "tcomu2/comm-E2-A" + tag, comm(t2.E, blocks["A"]), r_half * (blocks["B2"] * t2.Hinv));
    push(out, "tcomu2/comm-E2-A1" + tag, comm(t2.E, blocks["A1"]), r_half * (blocks["B3"] * t2.Hinv));
    push(out, "tcomu2/comm-E2-A2" + tag, comm(t2.E, blocks["A2"]), (-1.0 / r_half) * (t2.Hinv * blocks["B2"]));
    push(out, "tcomu2/comm-E2-D" + tag, comm(t2.E, blocks["D"]), (-1.0 / r_half) * (t2.Hinv * blocks["B3"]));
    push(out, "tcomu2/comm-F2-A" + tag, comm(t2.F, blocks["A"]), -r_half * (t2.Hinv * blocks["C2"]));
    push(out, "tcomu2/comm-F2-A1" + tag, comm(t2.F, blocks["A1"]), -r_half * (t2.Hinv * blocks["C3"]));
    push(out, "tcomu2/comm-F2-A2" + tag, comm(t2.F, blocks["A2"]), (1.0 / r_half) * (blocks["C2"] * t2.Hinv));
    push(out, "tcomu2/comm-F2-D" + tag, comm(t2.F, blocks["D"]), (1.0 / r_half) * (blocks["C3"] * t2.Hinv));
    return out;
}

// Boundary (i): relations between the sigma2 charge tower and the blocks
// of the dressed operator with the type (i) right boundary.
inline CheckList exchange_relations_boundary_i(const DoubleRow& dr, const AlgebraParams& p, cplx lambda,
                                               const std::string& tag) {
    using detail::push;
    using detail::push_zero;
    auto blocks = dr.labelled_blocks(dr.script_T(lambda));
    const cplx q = p.q;
    const ChargeTower ct = boundary_charge(qgroup_rep(QRep::sigma2, p), charge_constant(QRep::sigma2, p),
                                           dr.num_sites());
    CheckList out;
    push_zero(out, "comu1b/comm-Qq-A" + tag, comm(ct.Q, blocks["A"]));
    push_zero(out, "comu1b/comm-Qq-D" + tag, comm(ct.Q, blocks["D"]));
    push(out, "comu1b/comm-Qq-A1" + tag, comm(ct.Q, blocks["A1"]), q * (blocks["B5"] - blocks["C5"]));
    push(out, "comu1b/comm-Qq-A2" + tag, comm(ct.Q, blocks["A2"]), (-1.0 / q) * (blocks["B5"] - blocks["C5"]));
    return out;
}

// Boundary (ii): the sigma1 charge tower against the type (ii) blocks.
inline CheckList exchange_relations_boundary_ii(const DoubleRow& dr, const AlgebraParams& p, cplx lambda,
                                                const std::string& tag) {
    using detail::push;
    using detail::push_zero;
    auto blocks = dr.labelled_blocks(dr.script_T(lambda));
    const cplx i(0, 1);
    const ChargeTower ct = boundary_charge(qgroup_rep(QRep::sigma1, p), charge_constant(QRep::sigma1, p),
                                           dr.num_sites());
    CheckList out;
    push_zero(out, "comu2b/comm-Qi-A1" + tag, comm(ct.Q, blocks["A1"]));
    push_zero(out, "comu2b/comm-Qi-A2" + tag, comm(ct.Q, blocks["A2"]));
    push(out, "comu2b/comm-Qi-A" + tag, comm(ct.Q, blocks["A"]), (1.0 / i) * (blocks["B"] - blocks["C"]));
    push(out, "comu2b/comm-Qi-D" + tag, comm(ct.Q, blocks["D"]), -i * (blocks["B"] - blocks["C"]));
    return out;
}

// ---------------------------------------------------------------------------
// Reflection-algebra intertwiner (XXZ, fundamental L = R): the blocks of
// Kb(l' -+ l) = R(l' -+ l) (K(l') (x) I) Rhat(l' +- l) satisfy
// Kb_ab(l'-l) K(l) = K(l) Kb_ab(l'+l).
inline CheckList reflection_intertwiner_checks(const LaxFactory& lax, cplx lambda_prime, cplx lambda,
                                               const std::string& tag) {
    const int d = lax.local_dim();
    const CMatrix id = CMatrix::identity(d);
    const CMatrix kp = kron(lax.K(lambda_prime), id);
    const CMatrix kb_minus = lax.R(lambda_prime - lambda) * kp * lax.Rhat(lambda_prime + lambda);
    const CMatrix kb_plus = lax.R(lambda_prime + lambda) * kp * lax.Rhat(lambda_prime - lambda);
    const CMatrix k = lax.K(lambda);
    CheckList out;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const CMatrix lhs = block_first(kb_minus, a, b, d) * k;
            const CMatrix rhs = k * block_first(kb_plus, a, b, d);
            out.push_back({"bcomm/ab" + std::to_string(a + 1) + std::to_string(b + 1) + tag, rel_residual(lhs, rhs),
                           ""});
        }
    return out;
}

// Sorted spectrum of an operator.
inline std::vector<cplx> spectrum(const CMatrix& h) {
    auto s = eigenvalues(h);
    sort_spectrum(s);
    return s;
}

} // namespace blob
