// Small dense complex eigensolver: Householder reduction to Hessenberg
// form followed by explicitly shifted QR with Wilkinson shifts.  Only the
// diagnostic spectrum path uses it.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "blob/matrix.hpp"

namespace blob {

namespace detail {

inline void hessenberg_reduce(CMatrix& h) {
    const int n = h.rows();
    for (int k = 0; k + 2 < n; ++k) {
        double tail = 0.0;
        for (int i = k + 1; i < n; ++i) tail += std::norm(h(i, k));
        tail = std::sqrt(tail);
        if (tail == 0.0) continue;
        std::vector<cplx> v(n - k - 1);
        for (int i = k + 1; i < n; ++i) v[i - k - 1] = h(i, k);
        const cplx x0 = v[0];
        const double ax0 = std::abs(x0);
        const cplx phase = (ax0 == 0.0) ? cplx(1.0) : x0 / ax0;
        const cplx alpha = -phase * tail;
        v[0] -= alpha;
        double vv = 0.0;
        for (const auto& c : v) vv += std::norm(c);
        if (vv == 0.0) continue;
        const double beta = 2.0 / vv;
        // left: rows k+1..n-1
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
            s *= beta;
            for (int i = k + 1; i < n; ++i) h(i, j) -= v[i - k - 1] * s;
        }
        // right: cols k+1..n-1
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
            s *= beta;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
        }
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

inline void eig2x2(cplx a, cplx b, cplx c, cplx d, cplx& l1, cplx& l2) {
    const cplx t = (a + d) * 0.5;
    const cplx disc = std::sqrt(t * t - (a * d - b * c));
    l1 = t + disc;
    l2 = t - disc;
}

inline cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
    cplx l1, l2;
    eig2x2(a, b, c, d, l1, l2);
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

} // namespace detail

inline std::vector<cplx> eigenvalues(const CMatrix& a) {
    if (!a.square()) throw std::invalid_argument("eigenvalues: matrix not square");
    const int n = a.rows();
    if (n > 4096) throw std::invalid_argument("eigenvalues: dimension above supported limit 4096");
    if (n == 0) return {};
    CMatrix h = a;
    detail::hessenberg_reduce(h);

    const double eps = 1e-15;
    std::vector<cplx> eig;
    eig.reserve(n);
    int hi = n - 1;
    int iter = 0;
    long total_iter = 0;
    const long iter_cap = 60L * n + 200;
    while (hi >= 0) {
        if (hi == 0) {
            eig.push_back(h(0, 0));
            --hi;
            continue;
        }
        if (std::abs(h(hi, hi - 1)) <= eps * (std::abs(h(hi - 1, hi - 1)) + std::abs(h(hi, hi)))) {
            eig.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        int lo = hi - 1;
        while (lo > 0 && std::abs(h(lo, lo - 1)) > eps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)))) --lo;
        if (lo > 0) h(lo, lo - 1) = 0.0;
        if (hi - lo == 1) {
            cplx l1, l2;
            detail::eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi), l1, l2);
            eig.push_back(l1);
            eig.push_back(l2);
            hi = lo - 1;
            iter = 0;
            continue;
        }
        if (++total_iter > iter_cap) throw std::runtime_error("eigenvalues: QR iteration failed to converge");
        cplx shift = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        if (++iter % 12 == 0) shift = h(hi, hi) + cplx(std::abs(h(hi, hi - 1)), 0.0);

        // explicit shifted QR sweep on the active block
        const int m = hi - lo + 1;
        for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
        std::vector<cplx> cs(m - 1), sn(m - 1);
        for (int i = lo; i < hi; ++i) {
            const cplx f = h(i, i), g = h(i + 1, i);
            const double af = std::abs(f), ag = std::abs(g);
            const double r = std::hypot(af, ag);
            cplx c, s;
            if (r == 0.0) {
                c = 1.0;
                s = 0.0;
            } else if (af == 0.0) {
                c = 0.0;
                s = std::conj(g) / ag;
            } else {
                c = af / r;
                s = (f / af) * std::conj(g) / r;
            }
            cs[i - lo] = c;
            sn[i - lo] = s;
            for (int j = i; j <= hi; ++j) {
                const cplx x = h(i, j), y = h(i + 1, j);
                h(i, j) = c * x + s * y;
                h(i + 1, j) = -std::conj(s) * x + c * y;
            }
        }
        for (int i = lo; i < hi; ++i) {
            const cplx c = cs[i - lo], s = sn[i - lo];
            const int top = std::min(i + 1, hi);
            for (int r = lo; r <= top; ++r) {
                const cplx x = h(r, i), y = h(r, i + 1);
                h(r, i) = c * x + std::conj(s) * y;
                h(r, i + 1) = -s * x + c * y;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += shift;
    }
    for (const auto& v : eig)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("eigenvalues: non-finite eigenvalue");
    return eig;
}

inline void sort_spectrum(std::vector<cplx>& s) {
    std::sort(s.begin(), s.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// Max matched-pair distance between two equally sized spectra: sort both,
// then greedily pair each value with the nearest unmatched partner (plain
// positional pairing misassigns inside degenerate clusters).
inline double compare_spectra(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("compare_spectra: size mismatch");
    sort_spectrum(a);
    sort_spectrum(b);
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto& va : a) {
        std::size_t best = b.size();
        double best_d = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(va - b[j]);
            if (best == b.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

// Cluster multiplicities of a sorted spectrum at the given resolution.
inline std::vector<int> degeneracy_counts(std::vector<cplx> s, double tol = 1e-8) {
    sort_spectrum(s);
    std::vector<int> counts;
    std::size_t k = 0;
    while (k < s.size()) {
        std::size_t j = k + 1;
        while (j < s.size() && std::abs(s[j] - s[k]) <= tol) ++j;
        counts.push_back(static_cast<int>(j - k));
        k = j;
    }
    return counts;
}

} // namespace blob
