#ifndef QUEERKIT_WEIGHTS_HPP
#define QUEERKIT_WEIGHTS_HPP

// Compositions, the weight lattice, root data for q(n), and the matrix index
// sets M_n(N|Z_2) with their row/column statistics.

#include <numeric>
#include <stdexcept>
#include <vector>

namespace qk {

using Composition = std::vector<int>;  // lambda_1..lambda_n, entries >= 0

inline int comp_sum(const Composition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

// number of nonzero parts
inline int comp_length(const Composition& lam) {
    int l = 0;
    for (int x : lam) l += (x != 0);
    return l;
}

// lambda <= mu entrywise
inline bool comp_dominated(const Composition& lam, const Composition& mu) {
    if (lam.size() != mu.size()) return false;
    for (size_t k = 0; k < lam.size(); ++k)
        if (lam[k] > mu[k]) return false;
    return true;
}

// all lambda in Lambda(n,r), lexicographically ordered
inline std::vector<Composition> compositions(int n, int r) {
    std::vector<Composition> out;
    Composition cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (n >= 1) rec(rec, 0, r);
    return out;
}

inline bool in_lambda_nr(const Composition& lam, int r) {
    if (lam.empty()) return false;
    for (int x : lam)
        if (x < 0) return false;
    return comp_sum(lam) == r;
}

// Root data for q(n): roots alpha_{i,j} = eps_i - eps_j and the pairing
// (eps_k, alpha_{i,j}) = delta_{ki} - delta_{kj}.
struct RootDatum {
    int n;
    explicit RootDatum(int n_) : n(n_) {
        if (n < 1) throw std::invalid_argument("RootDatum: rank must be >= 1");
    }

    // (eps_k, alpha_{i,j})
    static int pairing(int k, int i, int j) { return (k == i ? 1 : 0) - (k == j ? 1 : 0); }

    // all roots alpha_{i,j}, i != j
    std::vector<std::pair<int, int>> roots() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) out.emplace_back(i, j);
        return out;
    }
    std::vector<std::pair<int, int>> positive_roots() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
        return out;
    }

    // lambda + alpha_{i,j} as a weight vector (1-based indices)
    static Composition add_root(Composition lam, int i, int j, int mult = 1) {
        lam[static_cast<size_t>(i - 1)] += mult;
        lam[static_cast<size_t>(j - 1)] -= mult;
        return lam;
    }

    // sign eps_{i,j;k,l}: +1 if j == k, -1 if i == l (defined when
    // alpha_{i,j} + alpha_{k,l} is a root)
    static int eps_sign(int i, int j, int k, int l) {
        if (j == k) return 1;
        if (i == l) return -1;
        throw std::invalid_argument("eps_sign: sum is not a root");
    }
};

// A = (A0, A1) in M_n(N|Z_2)
struct SuperMatrix {
    int n = 0;
    std::vector<int> a0, a1;  // row-major n*n

    SuperMatrix() = default;
    explicit SuperMatrix(int n_) : n(n_), a0(static_cast<size_t>(n_) * n_, 0),
                                   a1(static_cast<size_t>(n_) * n_, 0) {}

    int& e0(int i, int j) { return a0[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    int& e1(int i, int j) { return a1[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    int e0(int i, int j) const { return a0[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    int e1(int i, int j) const { return a1[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    int e(int i, int j) const { return e0(i, j) + e1(i, j); }

    int total() const {
        int s = 0;
        for (int x : a0) s += x;
        for (int x : a1) s += x;
        return s;
    }

    Composition ro() const {
        Composition r(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) r[static_cast<size_t>(i - 1)] += e(i, j);
        return r;
    }
    Composition co() const {
        Composition r(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) r[static_cast<size_t>(j - 1)] += e(i, j);
        return r;
    }
    // chi(A)_i = a_{ii} + sum_{j>i} (a_{ij} + a_{ji}) with a = a0 + a1
    Composition chi() const {
        Composition r(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i) {
            int v = e(i, i);
            for (int j = i + 1; j <= n; ++j) v += e(i, j) + e(j, i);
            r[static_cast<size_t>(i - 1)] = v;
        }
        return r;
    }

    friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
        return x.n == y.n && x.a0 == y.a0 && x.a1 == y.a1;
    }
};

// enumerate M_n(N|Z_2)_r = { A : sum entries of A0 and A1 equals r }
inline std::vector<SuperMatrix> super_matrices(int n, int r) {
    std::vector<SuperMatrix> out;
    const int cells = n * n;
    SuperMatrix cur(n);
    auto rec = [&](auto&& self, int cell, int rest) -> void {
        if (cell == cells) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int v0 = 0; v0 <= rest; ++v0)
            for (int v1 = 0; v1 <= 1 && v0 + v1 <= rest; ++v1) {
                cur.a0[static_cast<size_t>(cell)] = v0;
                cur.a1[static_cast<size_t>(cell)] = v1;
                self(self, cell + 1, rest - v0 - v1);
            }
        cur.a0[static_cast<size_t>(cell)] = 0;
        cur.a1[static_cast<size_t>(cell)] = 0;
    };
    rec(rec, 0, r);
    return out;
}

}  // namespace qk

#endif  // QUEERKIT_WEIGHTS_HPP
