// Baxterized spectral-parameter matrices R(lambda), K(lambda) for a blob
// representation, their lambda -> +-infinity limits, and the functional
// equation checks (Yang-Baxter, reflection, unitarity, crossing, twist
// compatibility, braid limits).
#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "blob/matrix.hpp"
#include "blob/params.hpp"
#include "blob/reps.hpp"
#include "blob/tensor.hpp"

namespace blob {

class LaxFactory {
public:
    LaxFactory(const AlgebraParams& p, const CMatrix& u_local, const CMatrix& e_local, bool trivial_boundary)
        : p_(p),
          d_(e_local.rows()),
          u_(u_local),
          e_(e_local),
          perm_(permutation(e_local.rows())),
          trivial_(trivial_boundary) {
        if (u_local.rows() != d_ * d_) throw std::invalid_argument("LaxFactory: U must act on two local legs");
    }

    static LaxFactory from_rep(const LocalRep& rep) {
        return LaxFactory(rep.params, rep.u_local, rep.e_local, rep.params.boundary == Boundary::trivial);
    }

    const AlgebraParams& params() const { return p_; }
    int local_dim() const { return d_; }
    bool trivial_boundary() const { return trivial_; }
    const CMatrix& perm() const { return perm_; }
    const CMatrix& u_local() const { return u_; }
    const CMatrix& e_local() const { return e_; }

    cplx a_of(cplx lambda) const { return std::sinh(mu() * (lambda + cplx(0, 1))); }
    cplx b_of(cplx lambda) const { return std::sinh(mu() * lambda); }
    cplx x_of(cplx lambda) const {
        return -p_.delta_e * std::cosh(mu() * (2.0 * lambda + cplx(0, 1))) - p_.kappa * std::cosh(2.0 * mu() * lambda) -
               std::cosh(2.0 * cplx(0, 1) * mu() * p_.zeta);
    }
    cplx y_of(cplx lambda) const { return 2.0 * std::sinh(2.0 * mu() * lambda) * std::sinh(cplx(0, 1) * mu()); }

    // R = P (a I + b U); Rcheck = P R = a I + b U.
    CMatrix Rcheck(cplx lambda) const { return a_of(lambda) * CMatrix::identity(d_ * d_) + b_of(lambda) * u_; }
    CMatrix R(cplx lambda) const { return perm_ * Rcheck(lambda); }

    // Inverse normalized by the unitarity scalar a(l) a(-l); equals the
    // reflected matrix P R(lambda) P.
    CMatrix Rhat(cplx lambda) const { return (a_of(lambda) * a_of(-lambda)) * invert(R(-lambda)); }

    CMatrix K(cplx lambda) const {
        if (trivial_) return CMatrix::identity(d_);
        return x_of(lambda) * CMatrix::identity(d_) + y_of(lambda) * e_;
    }

    // lambda -> +-infinity limits
    CMatrix Rcheck_pm(int sign) const {
        const cplx qs = (sign > 0) ? p_.q : 1.0 / p_.q;
        return u_ + qs * CMatrix::identity(d_ * d_);
    }
    CMatrix R_pm(int sign) const { return perm_ * Rcheck_pm(sign); }
    CMatrix Rhat_pm(int sign) const { return Rcheck_pm(sign) * perm_; }
    CMatrix K_pm(int sign) const {
        if (trivial_) return CMatrix::identity(d_);
        return e_ + (sign > 0 ? p_.c_plus : p_.c_minus) * CMatrix::identity(d_);
    }

    // Twist matrix of the model.
    CMatrix twist() const {
        if (d_ == 2) {
            CMatrix m(2, 2);
            m(0, 0) = p_.q;
            m(1, 1) = 1.0 / p_.q;
            return m;
        }
        CMatrix m(4, 4);
        m(0, 0) = cplx(0, 1);
        m(1, 1) = 1.0 / p_.q;
        m(2, 2) = p_.q;
        m(3, 3) = -cplx(0, 1);
        return m;
    }

    // R_12(l1-l2) R_13(l1) R_23(l2) = R_23(l2) R_13(l1) R_12(l1-l2) on three legs.
    double ybe_residual(cplx l1, cplx l2) const {
        const CMatrix r12 = op_on_legs(R(l1 - l2), 1, 2, 3, d_);
        const CMatrix r13 = op_on_legs(R(l1), 1, 3, 3, d_);
        const CMatrix r23 = op_on_legs(R(l2), 2, 3, 3, d_);
        return rel_residual(r12 * r13 * r23, r23 * r13 * r12);
    }

    // Reflection equation for the boundary matrix on two legs.
    double re_residual(cplx l1, cplx l2) const {
        const CMatrix id = CMatrix::identity(d_);
        const CMatrix k1 = kron(K(l1), id);
        const CMatrix k2 = kron(id, K(l2));
        const CMatrix r12_m = R(l1 - l2);
        const CMatrix r12_p = R(l1 + l2);
        const CMatrix r21_m = perm_ * r12_m * perm_;
        const CMatrix r21_p = perm_ * r12_p * perm_;
        return rel_residual(r12_m * k1 * r21_p * k2, k2 * r12_p * k1 * r21_m);
    }

    double unitarity_residual(cplx lambda, cplx* factor = nullptr) const {
        const CMatrix prod = R(lambda) * (perm_ * R(-lambda) * perm_);
        const auto fit = scalar_fit(prod, CMatrix::identity(d_ * d_));
        if (factor) *factor = fit.factor;
        return fit.residual;
    }

    // M_1^{-1} R_12^{t1}(l) M_1 R_21^{t1}(-l - 2 i rho) ~ I with rho = 1.
    double crossing_residual(cplx lambda) const {
        const CMatrix m = twist();
        const CMatrix m1 = kron(m, CMatrix::identity(d_));
        const CMatrix m1inv = kron(invert(m), CMatrix::identity(d_));
        const cplx shifted = -lambda - 2.0 * cplx(0, 1) * p_.crossing_rho;
        const CMatrix rt1 = partial_transpose_first(R(lambda), d_, d_);
        const CMatrix r21t1 = partial_transpose_first(perm_ * R(shifted) * perm_, d_, d_);
        return scalar_fit(m1inv * rt1 * m1 * r21t1, CMatrix::identity(d_ * d_)).residual;
    }

    double twist_symmetry_residual() const { return rel_residual(twist(), transpose(twist())); }

    double twist_comm_residual(cplx lambda) const {
        const CMatrix m = twist();
        return comm_residual(kron(m, m), R(lambda));
    }

    // Braid limits of the Yang-Baxter equation on legs (0, i, i+1) = (1, 2, 3).
    double braid_residual(int sign, bool hatted) const {
        const CMatrix rc = op_on_legs(Rcheck_pm(sign), 2, 3, 3, d_);
        if (!hatted) {
            const CMatrix r0i1 = op_on_legs(R_pm(sign), 1, 3, 3, d_);
            const CMatrix r0i = op_on_legs(R_pm(sign), 1, 2, 3, d_);
            return rel_residual(rc * r0i1 * r0i, r0i1 * r0i * rc);
        }
        const CMatrix rh0i = op_on_legs(Rhat_pm(sign), 1, 2, 3, d_);
        const CMatrix rh0i1 = op_on_legs(Rhat_pm(sign), 1, 3, 3, d_);
        return rel_residual(rc * rh0i * rh0i1, rh0i * rh0i1 * rc);
    }

    // Constant reflection-type relation satisfied by the K limits:
    // R^{ds} K_1^{s} Rhat^{s} K_2^{s} = K_2^{s} R^{s} K_1^{s} Rhat^{ds},
    // the difference-sign ds running over +- independently of s.
    double constant_re_residual(int sum_sign, int diff_sign) const {
        const CMatrix id = CMatrix::identity(d_);
        const CMatrix k1 = kron(K_pm(sum_sign), id);
        const CMatrix k2 = kron(id, K_pm(sum_sign));
        return rel_residual(op2(R_pm(diff_sign)) * k1 * op2(Rhat_pm(sum_sign)) * k2,
                            k2 * op2(R_pm(sum_sign)) * k1 * op2(Rhat_pm(diff_sign)));
    }

private:
    cplx mu() const { return cplx(p_.mu, 0.0); }
    static const CMatrix& op2(const CMatrix& m) { return m; }

    AlgebraParams p_;
    int d_;
    CMatrix u_;
    CMatrix e_;
    CMatrix perm_;
    bool trivial_;
};

inline LaxFactory make_lax(const AlgebraParams& p) {
    if (p.model == Model::xxz) {
        const AlgebraParams base = p;
        return LaxFactory(base, tl_u_matrix(p.q), xxz_boundary_m(p), p.boundary == Boundary::trivial);
    }
    const Boundary b = (p.boundary == Boundary::trivial) ? Boundary::type_i : p.boundary;
    return LaxFactory(p, twin_theta_u(p), twin_boundary_m(p, b), p.boundary == Boundary::trivial);
}

} // namespace blob
