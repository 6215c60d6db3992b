// Dense complex matrices and the small set of algebra primitives the
// whole workbench is built on.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace blob {

using cplx = std::complex<double>;

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative dimension");
    }

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    std::size_t size() const { return a_.size(); }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    cplx* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    const cplx* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    CMatrix& operator+=(const CMatrix& o) {
        check_same_shape(o, "operator+=");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_same_shape(o, "operator-=");
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    bool is_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

private:
    void check_same_shape(const CMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(op) + ": shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
inline CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
inline CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
inline CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
    CMatrix c(a.rows(), b.cols());
    const int n = a.rows(), m = a.cols(), p = b.cols();
    for (int i = 0; i < n; ++i) {
        cplx* ci = c.row(i);
        for (int k = 0; k < m; ++k) {
            const cplx aik = a(i, k);
            if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
            const cplx* bk = b.row(k);
            for (int j = 0; j < p; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

inline CMatrix transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline CMatrix conjugate(const CMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
    return c;
}

inline CMatrix adjoint(const CMatrix& a) { return conjugate(transpose(a)); }

inline cplx trace(const CMatrix& a) {
    if (!a.square()) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij.real() == 0.0 && aij.imag() == 0.0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

inline CMatrix comm(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

// [X, Y]_g = XY - g YX
inline CMatrix qcomm(const CMatrix& a, const CMatrix& b, cplx g) { return a * b - g * (b * a); }

// ||A - B||_F / max(1, ||A||_F, ||B||_F); the normalization used by every
// equation check in the suite.
inline double rel_residual(const CMatrix& a, const CMatrix& b) {
    const double d = frobenius_norm(a - b);
    return d / std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
}

inline double comm_residual(const CMatrix& a, const CMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw std::invalid_argument("comm_residual: need square matrices of equal dimension");
    return rel_residual(a * b, b * a);
}

struct ScalarFit {
    cplx factor;
    double residual;
};

// Least-squares c with A ~ c B under the Frobenius inner product.
inline ScalarFit scalar_fit(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("scalar_fit: shape mismatch");
    cplx bb = 0.0, ba = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            bb += std::conj(b(i, j)) * b(i, j);
            ba += std::conj(b(i, j)) * a(i, j);
        }
    if (std::abs(bb) == 0.0) throw std::invalid_argument("scalar_fit: reference matrix is zero");
    const cplx c = ba / bb;
    const double na = frobenius_norm(a);
    if (na == 0.0) return {cplx(0.0), 0.0};
    return {c, frobenius_norm(a - c * b) / na};
}

inline bool proportional_to_identity(const CMatrix& a, double tol, cplx* factor = nullptr) {
    const auto fit = scalar_fit(a, CMatrix::identity(a.rows()));
    if (factor) *factor = fit.factor;
    return fit.residual <= tol;
}

// Gaussian elimination with partial pivoting; throws on numerically
// singular input (pivot below kPivotTol of its row's 1-norm).
namespace detail {

inline void lu_decompose(CMatrix& a, std::vector<int>& perm, int& sign) {
    const int n = a.rows();
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    sign = 1;
    std::vector<double> row_norm(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(a(i, j));
        row_norm[i] = std::max(s, 1.0);
    }
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-12 * row_norm[perm[piv]])
            throw std::runtime_error("invert: matrix numerically singular (pivot " + std::to_string(best) +
                                     " at column " + std::to_string(k) + ")");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        const cplx akk = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) / akk;
            a(i, k) = f;
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
}

} // namespace detail

inline CMatrix invert(const CMatrix& a) {
    if (!a.square()) throw std::invalid_argument("invert: matrix not square");
    const int n = a.rows();
    CMatrix lu = a;
    std::vector<int> perm;
    int sign;
    detail::lu_decompose(lu, perm, sign);
    CMatrix inv(n, n);
    std::vector<cplx> col(n), y(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = (perm[i] == c) ? cplx(1.0) : cplx(0.0);
        for (int i = 0; i < n; ++i) {
            cplx s = col[i];
            for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            cplx s = y[i];
            for (int j = i + 1; j < n; ++j) s -= lu(i, j) * inv(j, c);
            inv(i, c) = s / lu(i, i);
        }
    }
    if (!inv.is_finite()) throw std::runtime_error("invert: non-finite entries in result");
    return inv;
}

inline cplx determinant(const CMatrix& a) {
    if (!a.square()) throw std::invalid_argument("determinant: matrix not square");
    CMatrix lu = a;
    std::vector<int> perm;
    int sign;
    try {
        detail::lu_decompose(lu, perm, sign);
    } catch (const std::runtime_error&) {
        return 0.0;
    }
    cplx d = static_cast<double>(sign);
    for (int i = 0; i < a.rows(); ++i) d *= lu(i, i);
    return d;
}

struct SpanFit {
    std::vector<cplx> coeff;
    double residual;
};

// Least-squares projection of A onto span{basis}; normal equations on the
// Frobenius Gram matrix.
inline SpanFit span_fit(const CMatrix& a, const std::vector<CMatrix>& basis) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) throw std::invalid_argument("span_fit: empty basis");
    CMatrix gram(k, k);
    std::vector<cplx> rhs(k, 0.0);
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
            cplx s = 0.0;
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) s += std::conj(basis[p](i, j)) * basis[q](i, j);
            gram(p, q) = s;
        }
        cplx s = 0.0;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) s += std::conj(basis[p](i, j)) * a(i, j);
        rhs[p] = s;
    }
    const CMatrix ginv = invert(gram);
    SpanFit fit;
    fit.coeff.assign(k, 0.0);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) fit.coeff[p] += ginv(p, q) * rhs[q];
    CMatrix proj(a.rows(), a.cols());
    for (int p = 0; p < k; ++p) proj += fit.coeff[p] * basis[p];
    fit.residual = frobenius_norm(a - proj) / std::max(1.0, frobenius_norm(a));
    return fit;
}

// Numerical rank of span{mats} from pivoted elimination on the Gram matrix.
inline int gram_rank(const std::vector<CMatrix>& mats, double tol = 1e-9) {
    const int k = static_cast<int>(mats.size());
    if (k == 0) return 0;
    CMatrix g(k, k);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            cplx s = 0.0;
            for (int i = 0; i < mats[p].rows(); ++i)
                for (int j = 0; j < mats[p].cols(); ++j) s += std::conj(mats[p](i, j)) * mats[q](i, j);
            g(p, q) = s;
        }
    double scale = max_abs(g);
    if (scale == 0.0) return 0;
    int rank = 0;
    std::vector<bool> used(k, false);
    for (int step = 0; step < k; ++step) {
        int piv = -1;
        double best = 0.0;
        for (int i = 0; i < k; ++i) {
            if (used[i]) continue;
            const double v = std::abs(g(i, i));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv < 0 || best <= tol * scale) break;
        used[piv] = true;
        ++rank;
        for (int i = 0; i < k; ++i) {
            if (used[i]) continue;
            const cplx f = g(i, piv) / g(piv, piv);
            for (int j = 0; j < k; ++j) g(i, j) -= f * g(piv, j);
        }
    }
    return rank;
}

} // namespace blob
