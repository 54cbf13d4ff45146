#ifndef QUEERKIT_TENSORSPACE_HPP
#define QUEERKIT_TENSORSPACE_HPP

// The parity-graded tensor space V^(x)r over the 2n-dimensional natural
// supermodule, and exact sparse operators on it.

#include <map>
#include <vector>

#include "scalar.hpp"
#include "weights.hpp"

namespace qk {

// Basis codes for V: 0..n-1 are v_1..v_n (even), n..2n-1 are v_-1..v_-n
// (odd).  Tensor indices are big-endian in the slot digits: slot 0 is the
// leftmost factor.
struct TensorSpace {
    int n, r;

    TensorSpace(int n_, int r_) : n(n_), r(r_) {}

    int vdim() const { return 2 * n; }
    long dim() const {
        long d = 1;
        for (int k = 0; k < r; ++k) d *= vdim();
        return d;
    }

    static int code_of(int j, int n) { return j > 0 ? j - 1 : n + (-j) - 1; }
    int code(int j) const { return code_of(j, n); }
    int value(int c) const { return c < n ? c + 1 : -(c - n + 1); }  // code -> j
    int code_parity(int c) const { return c >= n ? 1 : 0; }

    int digit(long idx, int slot) const {
        for (int k = r - 1; k > slot; --k) idx /= vdim();
        return static_cast<int>(idx % vdim());
    }
    long with_digit(long idx, int slot, int d) const {
        long w = 1;
        for (int k = r - 1; k > slot; --k) w *= vdim();
        long old = (idx / w) % vdim();
        return idx + (d - old) * w;
    }
    int parity(long idx) const {
        int p = 0;
        for (int k = 0; k < r; ++k) p ^= code_parity(digit(idx, k));
        return p;
    }
    // parity sum of slots strictly before the given slot
    int parity_prefix(long idx, int slot) const {
        int p = 0;
        for (int k = 0; k < slot; ++k) p ^= code_parity(digit(idx, k));
        return p;
    }
    Composition wt(long idx) const {
        Composition mu(static_cast<size_t>(n), 0);
        for (int k = 0; k < r; ++k) {
            int c = digit(idx, k);
            int i = c < n ? c + 1 : c - n + 1;
            mu[static_cast<size_t>(i - 1)] += 1;
        }
        return mu;
    }
};

// exact sparse linear map with declared parity, row-major storage
struct SparseOperator {
    long dim = 0;
    int parity = 0;
    std::vector<std::map<long, Scalar>> rows;

    SparseOperator() = default;
    SparseOperator(long dim_, int parity_) : dim(dim_), parity(parity_), rows(static_cast<size_t>(dim_)) {}

    static SparseOperator identity(long dim_) {
        SparseOperator id(dim_, 0);
        for (long k = 0; k < dim_; ++k) id.rows[static_cast<size_t>(k)][k] = Scalar(1);
        return id;
    }
    static SparseOperator zero(long dim_, int parity_ = 0) { return SparseOperator(dim_, parity_); }

    void add(long row, long col, const Scalar& v) {
        if (v.is_zero()) return;
        auto& r = rows[static_cast<size_t>(row)];
        auto [it, fresh] = r.emplace(col, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    Scalar entry(long row, long col) const {
        const auto& r = rows[static_cast<size_t>(row)];
        auto it = r.find(col);
        return it == r.end() ? Scalar(0) : it->second;
    }
    bool is_zero() const {
        for (const auto& r : rows)
            if (!r.empty()) return false;
        return true;
    }
    long nnz() const {
        long c = 0;
        for (const auto& r : rows) c += static_cast<long>(r.size());
        return c;
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        SparseOperator r(a.dim, a.parity == b.parity ? a.parity : 0);
        r.rows = a.rows;
        for (long u = 0; u < b.dim; ++u)
            for (const auto& [c, v] : b.rows[static_cast<size_t>(u)]) r.add(u, c, v);
        return r;
    }
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
        SparseOperator r(a.dim, a.parity == b.parity ? a.parity : 0);
        r.rows = a.rows;
        for (long u = 0; u < b.dim; ++u)
            for (const auto& [c, v] : b.rows[static_cast<size_t>(u)]) r.add(u, c, -v);
        return r;
    }
    friend SparseOperator operator*(const Scalar& s, const SparseOperator& a) {
        SparseOperator r(a.dim, a.parity);
        if (s.is_zero()) return r;
        for (long u = 0; u < a.dim; ++u)
            for (const auto& [c, v] : a.rows[static_cast<size_t>(u)])
                r.rows[static_cast<size_t>(u)].emplace(c, s * v);
        return r;
    }
    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.dim == b.dim && a.rows == b.rows;
    }

    // operator composition a after b
    friend SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
        SparseOperator r(a.dim, (a.parity + b.parity) % 2);
        for (long u = 0; u < a.dim; ++u)
            for (const auto& [v, av] : a.rows[static_cast<size_t>(u)])
                for (const auto& [w, bv] : b.rows[static_cast<size_t>(v)]) r.add(u, w, av * bv);
        return r;
    }

    SparseOperator pow(int e) const {
        SparseOperator r = identity(dim);
        for (int k = 0; k < e; ++k) r = compose(r, *this);
        return r;
    }

    // declared parity matches the support of the matrix
    bool parity_consistent(const TensorSpace& ts) const {
        for (long u = 0; u < dim; ++u)
            for (const auto& [c, v] : rows[static_cast<size_t>(u)])
                if (((ts.parity(u) ^ ts.parity(c)) & 1) != parity) return false;
        return true;
    }

    // entrywise specialization at a rational point
    SparseOperator eval(const Rat& q0) const {
        SparseOperator r(dim, parity);
        for (long u = 0; u < dim; ++u)
            for (const auto& [c, v] : rows[static_cast<size_t>(u)]) {
                Rat x = v.eval(q0);
                if (x != 0) r.rows[static_cast<size_t>(u)].emplace(c, Scalar(x));
            }
        return r;
    }
};

}  // namespace qk

#endif  // QUEERKIT_TENSORSPACE_HPP
