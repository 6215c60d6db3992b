// Tensor-leg bookkeeping on chains of identical local spaces: site
// embedding, leg permutation, operator placement and auxiliary-space
// block extraction.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "blob/matrix.hpp"

namespace blob {

inline long ipow(int base, int exp) {
    long r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

// Chain of num_sites local spaces of dimension local_dim; site 1 is the
// site adjacent to the boundary generator.  auxiliary_dim, when nonzero,
// is an extra leading factor.
struct SiteLayout {
    int num_sites = 0;
    int local_dim = 0;
    int auxiliary_dim = 0;

    SiteLayout() = default;
    SiteLayout(int n, int d, int aux = 0) : num_sites(n), local_dim(d), auxiliary_dim(aux) {
        if (n < 1 || d < 1) throw std::invalid_argument("SiteLayout: need at least one site with local_dim >= 1");
    }
    long chain_dim() const { return ipow(local_dim, num_sites); }
    long total_dim() const { return (auxiliary_dim > 0 ? auxiliary_dim : 1) * chain_dim(); }
};

// Swap operator on C^d (x) C^d.
inline CMatrix permutation(int d) {
    if (d < 1) throw std::invalid_argument("permutation: dimension must be positive");
    CMatrix p(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) p(a * d + b, b * d + a) = 1.0;
    return p;
}

// I^(first_site-1) (x) op (x) I^(N-first_site-span+1); sites are 1-based.
inline CMatrix embed(const CMatrix& op, int first_site, int span, const SiteLayout& layout) {
    const int n = layout.num_sites, d = layout.local_dim;
    if (span < 1 || first_site < 1 || first_site + span - 1 > n)
        throw std::invalid_argument("embed: site window [" + std::to_string(first_site) + ", +" +
                                    std::to_string(span) + ") outside chain of " + std::to_string(n));
    const long span_dim = ipow(d, span);
    if (op.rows() != span_dim || op.cols() != span_dim)
        throw std::invalid_argument("embed: operator dimension " + std::to_string(op.rows()) +
                                    " does not match d^span = " + std::to_string(span_dim));
    const long left = ipow(d, first_site - 1);
    const long right = ipow(d, n - first_site - span + 1);
    CMatrix m = op;
    if (left > 1) m = kron(CMatrix::identity(static_cast<int>(left)), m);
    if (right > 1) m = kron(m, CMatrix::identity(static_cast<int>(right)));
    return m;
}

// Conjugate op by the unitary that sends the tensor factor at position p
// to position perm[p] (1-based, perm a permutation of 1..n_legs).
inline CMatrix leg_permute(const CMatrix& op, const std::vector<int>& perm, int d) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("leg_permute: not a permutation of 1..n");
        seen[v - 1] = true;
    }
    const long dim = ipow(d, n);
    if (op.rows() != dim || op.cols() != dim)
        throw std::invalid_argument("leg_permute: operator dimension does not match d^n_legs");
    // index map: digit at source position p moves to target position perm[p]
    std::vector<long> map(dim);
    std::vector<int> digits(n);
    for (long idx = 0; idx < dim; ++idx) {
        long rest = idx;
        for (int p = n - 1; p >= 0; --p) {
            digits[p] = static_cast<int>(rest % d);
            rest /= d;
        }
        long out = 0;
        std::vector<int> tgt(n, 0);
        for (int p = 0; p < n; ++p) tgt[perm[p] - 1] = digits[p];
        for (int p = 0; p < n; ++p) out = out * d + tgt[p];
        map[idx] = out;
    }
    CMatrix res(op.rows(), op.cols());
    for (int i = 0; i < op.rows(); ++i)
        for (int j = 0; j < op.cols(); ++j) {
            const cplx v = op(i, j);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            res(static_cast<int>(map[i]), static_cast<int>(map[j])) = v;
        }
    return res;
}

// Place a two-leg operator on legs (i, j) of an n-leg space (1-based,
// i != j, legs of dimension d each).
inline CMatrix op_on_legs(const CMatrix& op, int leg_i, int leg_j, int n_legs, int d) {
    if (leg_i == leg_j || leg_i < 1 || leg_j < 1 || leg_i > n_legs || leg_j > n_legs)
        throw std::invalid_argument("op_on_legs: bad leg indices");
    const long dim = ipow(d, n_legs);
    CMatrix full = op;
    if (n_legs > 2) full = kron(full, CMatrix::identity(static_cast<int>(dim / (d * d))));
    // current order: (leg_i, leg_j, rest...) -> natural order
    std::vector<int> perm(n_legs);
    perm[0] = leg_i;
    perm[1] = leg_j;
    int next = 2;
    for (int l = 1; l <= n_legs; ++l) {
        if (l == leg_i || l == leg_j) continue;
        perm[next++] = l;
    }
    return leg_permute(full, perm, d);
}

// Block (a, b) over the leading factor of dimension d0.
inline CMatrix block_first(const CMatrix& m, int a, int b, int d0) {
    if (m.rows() % d0 != 0 || !m.square()) throw std::invalid_argument("block_first: bad dimensions");
    const int rest = m.rows() / d0;
    CMatrix blk(rest, rest);
    for (int i = 0; i < rest; ++i)
        for (int j = 0; j < rest; ++j) blk(i, j) = m(a * rest + i, b * rest + j);
    return blk;
}

// tr_0 { W_0 M } over the leading factor: sum_{a,b} W(a,b) M_{(b,a)-block}.
inline CMatrix partial_trace_first(const CMatrix& m, const CMatrix& w) {
    const int d0 = w.rows();
    if (!w.square() || m.rows() % d0 != 0) throw std::invalid_argument("partial_trace_first: bad dimensions");
    const int rest = m.rows() / d0;
    CMatrix t(rest, rest);
    for (int a = 0; a < d0; ++a)
        for (int b = 0; b < d0; ++b) {
            const cplx w_ab = w(a, b);
            if (w_ab.real() == 0.0 && w_ab.imag() == 0.0) continue;
            for (int i = 0; i < rest; ++i)
                for (int j = 0; j < rest; ++j) t(i, j) += w_ab * m(b * rest + i, a * rest + j);
        }
    return t;
}

// Partial transpose on the first factor of C^d1 (x) C^d2.
inline CMatrix partial_transpose_first(const CMatrix& m, int d1, int d2) {
    if (m.rows() != d1 * d2 || !m.square()) throw std::invalid_argument("partial_transpose_first: bad dimensions");
    CMatrix t(m.rows(), m.cols());
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d1; ++b)
            for (int i = 0; i < d2; ++i)
                for (int j = 0; j < d2; ++j) t(b * d2 + i, a * d2 + j) = m(a * d2 + i, b * d2 + j);
    return t;
}

} // namespace blob
