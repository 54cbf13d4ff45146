#ifndef QUEERKIT_QN_MATRIX_HPP
#define QUEERKIT_QN_MATRIX_HPP

// Matrix model of q(n) inside gl(n|n): block matrices with equal diagonal
// blocks A and equal off-diagonal blocks B.  Serves as the independent
// oracle for the abstract commutator formulas.

#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace qk {

struct QnMatrix {
    int n = 0;
    std::vector<Rat> A, B;  // row-major n x n rational blocks

    QnMatrix() = default;
    explicit QnMatrix(int n_)
        : n(n_), A(static_cast<size_t>(n_) * n_, Rat(0)), B(static_cast<size_t>(n_) * n_, Rat(0)) {}

    Rat& a(int i, int j) { return A[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    Rat& b(int i, int j) { return B[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    const Rat& a(int i, int j) const { return A[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    const Rat& b(int i, int j) const { return B[static_cast<size_t>(i - 1) * n + (j - 1)]; }

    bool is_even() const {
        for (const auto& x : B)
            if (x != 0) return false;
        return true;
    }
    bool is_odd() const {
        for (const auto& x : A)
            if (x != 0) return false;
        return true;
    }
    bool is_zero() const { return is_even() && is_odd(); }

    friend QnMatrix operator+(const QnMatrix& x, const QnMatrix& y) {
        QnMatrix r(x.n);
        for (size_t k = 0; k < x.A.size(); ++k) {
            r.A[k] = x.A[k] + y.A[k];
            r.B[k] = x.B[k] + y.B[k];
        }
        return r;
    }
    friend QnMatrix operator-(const QnMatrix& x, const QnMatrix& y) {
        QnMatrix r(x.n);
        for (size_t k = 0; k < x.A.size(); ++k) {
            r.A[k] = x.A[k] - y.A[k];
            r.B[k] = x.B[k] - y.B[k];
        }
        return r;
    }
    friend QnMatrix operator*(const Rat& c, const QnMatrix& x) {
        QnMatrix r(x.n);
        for (size_t k = 0; k < x.A.size(); ++k) {
            r.A[k] = c * x.A[k];
            r.B[k] = c * x.B[k];
        }
        return r;
    }
    friend bool operator==(const QnMatrix& x, const QnMatrix& y) {
        return x.n == y.n && x.A == y.A && x.B == y.B;
    }
};

// generators in the matrix model
inline QnMatrix qn_h(int n, int i) {
    QnMatrix m(n);
    m.a(i, i) = 1;
    return m;
}
inline QnMatrix qn_hbar(int n, int i) {
    QnMatrix m(n);
    m.b(i, i) = 1;
    return m;
}
inline QnMatrix qn_x(int n, int i, int j) {
    QnMatrix m(n);
    m.a(i, j) = 1;
    return m;
}
inline QnMatrix qn_xbar(int n, int i, int j) {
    QnMatrix m(n);
    m.b(i, j) = 1;
    return m;
}

// full matrix product in gl(n|n) restricted to q(n): (A,B)(A',B') =
// (AA' + BB', AB' + BA')
inline QnMatrix qn_mul(const QnMatrix& x, const QnMatrix& y) {
    QnMatrix r(x.n);
    const int n = x.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rat a(0), b(0);
            for (int k = 1; k <= n; ++k) {
                a += x.a(i, k) * y.a(k, j) + x.b(i, k) * y.b(k, j);
                b += x.a(i, k) * y.b(k, j) + x.b(i, k) * y.a(k, j);
            }
            r.a(i, j) = a;
            r.b(i, j) = b;
        }
    return r;
}

struct QnNonHomogeneous : std::domain_error {
    QnNonHomogeneous() : std::domain_error("qn_bracket: arguments must be homogeneous") {}
};

// super-commutator of homogeneous elements computed from matrix units
inline QnMatrix qn_bracket(const QnMatrix& x, const QnMatrix& y) {
    const bool xe = x.is_even(), xo = x.is_odd();
    const bool ye = y.is_even(), yo = y.is_odd();
    if ((!xe && !xo) || (!ye && !yo)) throw QnNonHomogeneous();
    const bool both_odd = (xo && !x.is_zero()) && (yo && !y.is_zero());
    QnMatrix xy = qn_mul(x, y), yx = qn_mul(y, x);
    return both_odd ? xy + yx : xy - yx;
}

}  // namespace qk

#endif  // QUEERKIT_QN_MATRIX_HPP
