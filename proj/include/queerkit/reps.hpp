#ifndef QUEERKIT_REPS_HPP
#define QUEERKIT_REPS_HPP

// Exact tensor-space representations: the classical action phi_r and the
// Sergeev action psi_r, the quantum action Phi_r built from the S-matrix by
// comultiplication, and the Hecke-Clifford action Psi_r.

#include "quantum.hpp"
#include "tensorspace.hpp"

namespace qk {

// --- single-factor matrices ---------------------------------------------------

// matrix unit E_{i,j} on V, indices in I(n|n)
inline SparseOperator matrix_unit(const TensorSpace& ts, int i, int j) {
    SparseOperator m(ts.vdim(), SignData::p(i, j));
    m.add(ts.code(i), ts.code(j), Scalar(1));
    return m;
}

// classical generators on V
inline SparseOperator phi1_letter(const TensorSpace& ts, const Gen& g) {
    switch (g.fam) {
        case Fam::CBinomH: {
            if (g.s != 1) break;
            SparseOperator m = matrix_unit(ts, g.i, g.i) + matrix_unit(ts, -g.i, -g.i);
            m.parity = 0;
            return m;
        }
        case Fam::CHbar: {
            SparseOperator m = matrix_unit(ts, g.i, -g.i) + matrix_unit(ts, -g.i, g.i);
            m.parity = 1;
            return m;
        }
        case Fam::CX: {
            if (g.s != 1) break;
            SparseOperator m = matrix_unit(ts, g.i, g.j) + matrix_unit(ts, -g.i, -g.j);
            m.parity = 0;
            return m;
        }
        case Fam::CXbar: {
            SparseOperator m = matrix_unit(ts, g.i, -g.j) + matrix_unit(ts, -g.i, g.j);
            m.parity = 1;
            return m;
        }
        default: break;
    }
    throw std::invalid_argument("phi1_letter: not a first-order classical generator");
}

// place a homogeneous operator Y on V at slot k (0-based) with Koszul signs
inline SparseOperator place_at(const TensorSpace& ts, const SparseOperator& Y, int slot) {
    SparseOperator out(ts.dim(), Y.parity);
    for (long idx = 0; idx < ts.dim(); ++idx) {
        int d = ts.digit(idx, slot);
        for (long u = 0; u < Y.dim; ++u) {
            Scalar v = Y.entry(u, d);
            if (v.is_zero()) continue;
            int sign = (Y.parity && (ts.parity_prefix(idx, slot) & 1)) ? -1 : 1;
            out.add(ts.with_digit(idx, slot, static_cast<int>(u)), idx, Scalar(sign) * v);
        }
    }
    return out;
}

// sum over slots of a placed Lie-algebra generator (comultiplication
// x -> x(x)1 + 1(x)x iterated)
inline SparseOperator sum_over_slots(const TensorSpace& ts, const SparseOperator& Y) {
    SparseOperator out(ts.dim(), Y.parity);
    for (int k = 0; k < ts.r; ++k) out = out + place_at(ts, Y, k);
    out.parity = Y.parity;
    return out;
}

// the classical action of an arbitrary element of U(q(n))
class ClassicalAction {
public:
    ClassicalAction(int n, int r) : ts_(n, r) {}

    const TensorSpace& space() const { return ts_; }

    SparseOperator letter(const Gen& g) const {
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        SparseOperator m = compute_letter(g);
        cache_.emplace(g, m);
        return m;
    }

    SparseOperator act(const Element& e) const {
        SparseOperator out(ts_.dim(), 0);
        bool parity_set = false;
        for (const auto& [w, c] : e.terms()) {
            SparseOperator m = SparseOperator::identity(ts_.dim());
            for (const auto& g : w) m = compose(m, letter(g));
            m.parity = word_parity(w);
            if (!parity_set) {
                out.parity = m.parity;
                parity_set = true;
            }
            out = out + c * m;
            out.parity = m.parity;
        }
        return out;
    }

private:
    SparseOperator compute_letter(const Gen& g) const {
        switch (g.fam) {
            case Fam::CBinomH: {
                // diagonal binomial of the weight
                SparseOperator m(ts_.dim(), 0);
                for (long idx = 0; idx < ts_.dim(); ++idx) {
                    Composition mu = ts_.wt(idx);
                    Int c = int_binom(Int(mu[static_cast<size_t>(g.i - 1)]), g.s);
                    if (c != 0) m.add(idx, idx, Scalar(c));
                }
                return m;
            }
            case Fam::CIdem: {
                SparseOperator m(ts_.dim(), 0);
                for (long idx = 0; idx < ts_.dim(); ++idx)
                    if (ts_.wt(idx) == g.lam) m.add(idx, idx, Scalar(1));
                return m;
            }
            case Fam::CX: {
                if (g.s == 1) return sum_over_slots(ts_, phi1_letter(ts_, g));
                SparseOperator base = letter(cx(g.i, g.j, 1));
                SparseOperator m = base.pow(g.s);
                Int fact(1);
                for (int k = 2; k <= g.s; ++k) fact *= k;
                m = Scalar(Rat(Int(1), fact)) * m;
                m.parity = 0;
                return m;
            }
            case Fam::CHbar:
            case Fam::CXbar: return sum_over_slots(ts_, phi1_letter(ts_, g));
            default: throw std::invalid_argument("phi_r: foreign generator");
        }
    }

    TensorSpace ts_;
    mutable std::map<Gen, SparseOperator> cache_;
};

inline SparseOperator phi_r(const Element& e, int n, int r) {
    return ClassicalAction(n, r).act(e);
}

// --- the Sergeev action ---------------------------------------------------------

// psi_r(s_k): signed swap of slots k, k+1 (1-based k)
inline SparseOperator sergeev_s(const TensorSpace& ts, int k) {
    if (k < 1 || k >= ts.r) throw std::out_of_range("sergeev_s: slot out of range");
    SparseOperator m(ts.dim(), 0);
    for (long idx = 0; idx < ts.dim(); ++idx) {
        int a = ts.digit(idx, k - 1), b = ts.digit(idx, k);
        long swapped = ts.with_digit(ts.with_digit(idx, k - 1, b), k, a);
        int sign = (ts.code_parity(a) & ts.code_parity(b)) ? -1 : 1;
        m.add(swapped, idx, Scalar(sign));
    }
    return m;
}

// psi_r(c_l): J_V at slot l (1-based) with the Koszul prefix sign
inline SparseOperator sergeev_c(const TensorSpace& ts, int l) {
    if (l < 1 || l > ts.r) throw std::out_of_range("sergeev_c: slot out of range");
    SparseOperator m(ts.dim(), 1);
    for (long idx = 0; idx < ts.dim(); ++idx) {
        int d = ts.digit(idx, l - 1);
        // J_V(v_a) = v_-a, J_V(v_-a) = -v_a
        int target;
        int jsign;
        if (d < ts.n) {
            target = d + ts.n;
            jsign = 1;
        } else {
            target = d - ts.n;
            jsign = -1;
        }
        int sign = (ts.parity_prefix(idx, l - 1) & 1) ? -jsign : jsign;
        m.add(ts.with_digit(idx, l - 1, target), idx, Scalar(sign));
    }
    return m;
}

// a word in the Sergeev generators s_k, c_l as an operator
inline SparseOperator sergeev_action(const Word& w, int n, int r) {
    TensorSpace ts(n, r);
    SparseOperator m = SparseOperator::identity(ts.dim());
    int parity = 0;
    for (const auto& g : w) {
        SparseOperator s = g.fam == Fam::SgS ? sergeev_s(ts, g.i)
                         : g.fam == Fam::SgC ? sergeev_c(ts, g.i)
                         : throw std::invalid_argument("sergeev_action: foreign generator");
        parity ^= s.parity;
        m = compose(m, s);
    }
    m.parity = parity;
    return m;
}

// --- the quantum action ----------------------------------------------------------

// Phi_1(L_{i,j}) = S_{i,j} on V (the S-matrix blocks)
inline SparseOperator s_block(const TensorSpace& ts, int i, int j) {
    const int n = ts.n;
    const Scalar qq = q_minus_qinv();
    SparseOperator m(ts.vdim(), SignData::p(i, j));
    auto unit = [&](int a, int b, const Scalar& c) {
        m.add(ts.code(a), ts.code(b), c);
    };
    if (i == j) {
        int a = std::abs(i);
        for (int b = 1; b <= n; ++b) {
            Scalar c = (b == a) ? (i > 0 ? Scalar::q(1) : Scalar::q(-1)) : Scalar(1);
            unit(b, b, c);
            unit(-b, -b, c);
        }
        return m;
    }
    if (i > 0 && j > 0) {
        // S_{b,a} = (q - q^-1)(E_{a,b} + E_{-a,-b}) for b < a
        int b = i, a = j;
        unit(a, b, qq);
        unit(-a, -b, qq);
        return m;
    }
    if (i < 0 && j < 0) {
        // S_{-b,-a} = -(q - q^-1)(E_{a,b} + E_{-a,-b}) for a < b
        int b = -i, a = -j;
        unit(a, b, -qq);
        unit(-a, -b, -qq);
        return m;
    }
    // S_{-b,a} = -(q - q^-1)(E_{-a,b} + E_{a,-b})
    int b = -i, a = j;
    unit(-a, b, -qq);
    unit(a, -b, -qq);
    return m;
}

class QuantumAction {
public:
    QuantumAction(int n, int r) : ts_(n, r), ts1_(n, 1) {}

    const TensorSpace& space() const { return ts_; }

    // Phi_r of an L-alphabet letter via the comultiplication chains
    SparseOperator l_letter_action(int i, int j) const {
        auto key = std::make_pair(i, j);
        auto it = lcache_.find(key);
        if (it != lcache_.end()) return it->second;
        SparseOperator m = build_l(i, j, ts_.r);
        lcache_.emplace(key, m);
        return m;
    }

    SparseOperator act_l(const Element& e) const {
        SparseOperator out(ts_.dim(), 0);
        for (const auto& [w, c] : e.terms()) {
            SparseOperator m = SparseOperator::identity(ts_.dim());
            for (const auto& g : w) {
                if (g.fam == Fam::LGen) m = compose(m, l_letter_action(g.i, g.j));
                else if (g.fam == Fam::KPow) m = compose(m, kpow_action(g.i, g.s));
                else throw std::invalid_argument("act_l: L alphabet only");
            }
            m.parity = word_parity(w);
            out = out + c * m;
            out.parity = m.parity;
        }
        return out;
    }

    // Phi_r of an X/DJ-alphabet element through the closed L-forms
    SparseOperator act_x(const Element& e) const {
        SparseOperator out(ts_.dim(), 0);
        for (const auto& [w, c] : e.terms()) {
            SparseOperator m = SparseOperator::identity(ts_.dim());
            for (const auto& g : w) m = compose(m, x_letter_action(g));
            m.parity = word_parity(w);
            out = out + c * m;
            out.parity = m.parity;
        }
        return out;
    }

    SparseOperator kpow_action(int a, int e) const {
        // diagonal q^(e mu_a)
        SparseOperator m(ts_.dim(), 0);
        for (long idx = 0; idx < ts_.dim(); ++idx) {
            Composition mu = ts_.wt(idx);
            m.add(idx, idx, Scalar::q(e * mu[static_cast<size_t>(a - 1)]));
        }
        return m;
    }

    SparseOperator x_letter_action(const Gen& g) const {
        auto it = xcache_.find(g);
        if (it != xcache_.end()) return it->second;
        SparseOperator m = compute_x_letter(g);
        xcache_.emplace(g, m);
        return m;
    }

private:
    SparseOperator compute_x_letter(const Gen& g) const {
        switch (g.fam) {
            case Fam::KPow: return kpow_action(g.i, g.s);
            case Fam::KBr: {
                SparseOperator m(ts_.dim(), 0);
                for (long idx = 0; idx < ts_.dim(); ++idx) {
                    Composition mu = ts_.wt(idx);
                    Scalar c = bracket_eval(mu[static_cast<size_t>(g.i - 1)], g.c, g.s);
                    if (!c.is_zero()) m.add(idx, idx, c);
                }
                return m;
            }
            case Fam::QIdem: {
                SparseOperator m(ts_.dim(), 0);
                for (long idx = 0; idx < ts_.dim(); ++idx)
                    if (ts_.wt(idx) == g.lam) m.add(idx, idx, Scalar(1));
                return m;
            }
            case Fam::KBar: {
                SparseOperator m = act_l(dj_l_Kbar(g.i));
                m.parity = 1;
                return m;
            }
            case Fam::QXbar: {
                SparseOperator m = act_l(xl_form(g.i, g.j, true));
                m.parity = 1;
                return m;
            }
            case Fam::QX: {
                SparseOperator base = act_l(xl_form(g.i, g.j, false));
                base.parity = 0;
                if (g.s == 1) return base;
                SparseOperator m = base.pow(g.s);
                m = qfact(g.s).inv() * m;
                m.parity = 0;
                return m;
            }
            default: throw std::invalid_argument("Phi_r: foreign generator");
        }
    }

    // recursive Delta-iteration: Phi_r(L_{i,j}) = sum_k Phi_1(L_{i,k}) (x) Phi_{r-1}(L_{k,j})
    SparseOperator build_l(int i, int j, int r) const {
        if (r == 0) {
            // the counit direction is never needed; r >= 1 always
            throw std::logic_error("build_l: r must be >= 1");
        }
        if (r == 1) return s_block(ts1_, i, j);
        TensorSpace sub(ts_.n, r - 1);
        SparseOperator out(pow_dim(r), SignData::p(i, j));
        for (int k = i; k <= j; ++k) {
            if (k == 0) continue;
            SparseOperator head = s_block(ts1_, i, k);
            SparseOperator tail = build_l(k, j, r - 1);
            // (A (x) B)(v (x) w) = (-1)^(p(B) p(v)) Av (x) Bw
            long subdim = tail.dim;
            for (long u = 0; u < head.dim; ++u)
                for (const auto& [v, av] : head.rows[static_cast<size_t>(u)]) {
                    int sign = (tail.parity && ts1_.code_parity(static_cast<int>(v))) ? -1 : 1;
                    for (long x = 0; x < subdim; ++x)
                        for (const auto& [y, bv] : tail.rows[static_cast<size_t>(x)])
                            out.add(u * subdim + x, v * subdim + y, Scalar(sign) * av * bv);
                }
        }
        return out;
    }

    long pow_dim(int r) const {
        long d = 1;
        for (int k = 0; k < r; ++k) d *= ts_.vdim();
        return d;
    }

    TensorSpace ts_, ts1_;
    mutable std::map<std::pair<int, int>, SparseOperator> lcache_;
    mutable std::map<Gen, SparseOperator> xcache_;
};

inline SparseOperator Phi_r(const Element& e_l_alphabet, int n, int r) {
    return QuantumAction(n, r).act_l(e_l_alphabet);
}

// --- the Hecke-Clifford action ----------------------------------------------------

// operators on V (x) V assembled from sum-of-tensor decompositions; koszul
// selects the super or plain convention for (A (x) B)(u (x) v)
inline SparseOperator tensor2_op(const TensorSpace& ts1,
                                 const std::vector<std::pair<SparseOperator, SparseOperator>>& parts,
                                 bool koszul) {
    long d = ts1.vdim();
    SparseOperator out(d * d, 0);
    for (const auto& [A, B] : parts)
        for (long u = 0; u < d; ++u)
            for (const auto& [v, av] : A.rows[static_cast<size_t>(u)]) {
                int sign = (koszul && B.parity && ts1.code_parity(static_cast<int>(v))) ? -1 : 1;
                for (long x = 0; x < d; ++x)
                    for (const auto& [y, bv] : B.rows[static_cast<size_t>(x)])
                        out.add(u * d + x, v * d + y, Scalar(sign) * av * bv);
            }
    return out;
}

// S = sum_{i <= j} S_{i,j} (x) E_{i,j}
inline SparseOperator build_S(int n, bool koszul = true) {
    TensorSpace ts1(n, 1);
    std::vector<std::pair<SparseOperator, SparseOperator>> parts;
    std::vector<int> idx;
    for (int a = n; a >= 1; --a) idx.push_back(-a);
    for (int a = 1; a <= n; ++a) idx.push_back(a);
    for (size_t x = 0; x < idx.size(); ++x)
        for (size_t y = x; y < idx.size(); ++y)
            parts.emplace_back(s_block(ts1, idx[x], idx[y]), matrix_unit(ts1, idx[x], idx[y]));
    return tensor2_op(ts1, parts, koszul);
}

// T = sum_{i,j} sgn(j) E_{i,j} (x) E_{j,i}
inline SparseOperator build_T(int n, bool koszul = true) {
    TensorSpace ts1(n, 1);
    std::vector<std::pair<SparseOperator, SparseOperator>> parts;
    std::vector<int> idx;
    for (int a = n; a >= 1; --a) idx.push_back(-a);
    for (int a = 1; a <= n; ++a) idx.push_back(a);
    for (int i : idx)
        for (int j : idx) {
            SparseOperator e1 = matrix_unit(ts1, i, j);
            e1 = Scalar(SignData::sgn(j)) * e1;
            e1.parity = SignData::p(i, j);
            parts.emplace_back(e1, matrix_unit(ts1, j, i));
        }
    return tensor2_op(ts1, parts, koszul);
}

// Theta = sum_a (E_{-a,a} - E_{a,-a}) on V
inline SparseOperator build_theta(int n) {
    TensorSpace ts1(n, 1);
    SparseOperator m(ts1.vdim(), 1);
    for (int a = 1; a <= n; ++a) {
        m.add(ts1.code(-a), ts1.code(a), Scalar(1));
        m.add(ts1.code(a), ts1.code(-a), Scalar(-1));
    }
    return m;
}

// place an even V(x)V operator at adjacent slots (k, k+1), 1-based
inline SparseOperator place_pair(const TensorSpace& ts, const SparseOperator& Z, int k) {
    if (k < 1 || k >= ts.r) throw std::out_of_range("place_pair: slot out of range");
    long d = ts.vdim();
    SparseOperator out(ts.dim(), 0);
    for (long idx = 0; idx < ts.dim(); ++idx) {
        int a = ts.digit(idx, k - 1), b = ts.digit(idx, k);
        long col2 = static_cast<long>(a) * d + b;
        for (long row2 = 0; row2 < d * d; ++row2) {
            Scalar v = Z.entry(row2, col2);
            if (v.is_zero()) continue;
            int na = static_cast<int>(row2 / d), nb = static_cast<int>(row2 % d);
            long target = ts.with_digit(ts.with_digit(idx, k - 1, na), k, nb);
            out.add(target, idx, v);
        }
    }
    return out;
}

class HeckeCliffordAction {
public:
    HeckeCliffordAction(int n, int r, bool koszul = true) : ts_(n, r) {
        SparseOperator S = build_S(n, koszul);
        SparseOperator T = build_T(n, koszul);
        sbar_ = compose(T, S);
    }

    const TensorSpace& space() const { return ts_; }
    const SparseOperator& sbar() const { return sbar_; }

    SparseOperator t_action(int k) const { return place_pair(ts_, sbar_, k); }

    SparseOperator c_action(int l) const {
        if (l < 1 || l > ts_.r) throw std::out_of_range("c_action: slot out of range");
        SparseOperator theta = build_theta(ts_.n);
        return place_at(ts_, theta, l - 1);
    }

    SparseOperator act(const Word& w) const {
        SparseOperator m = SparseOperator::identity(ts_.dim());
        int parity = 0;
        for (const auto& g : w) {
            SparseOperator s = g.fam == Fam::HcT ? t_action(g.i)
                             : g.fam == Fam::HcC ? c_action(g.i)
                             : throw std::invalid_argument("hecke_clifford_action: foreign generator");
            parity ^= s.parity;
            m = compose(m, s);
        }
        m.parity = parity;
        return m;
    }

private:
    TensorSpace ts_;
    SparseOperator sbar_;
};

inline SparseOperator hecke_clifford_action(const Word& w, int n, int r) {
    return HeckeCliffordAction(n, r).act(w);
}

// quantum Yang-Baxter check for the S-matrix, both placement conventions;
// experimental, not asserted anywhere
inline bool qybe_holds(int n, bool koszul) {
    TensorSpace ts1(n, 1);
    TensorSpace ts3(n, 3);
    std::vector<std::pair<SparseOperator, SparseOperator>> parts;
    std::vector<int> idx;
    for (int a = n; a >= 1; --a) idx.push_back(-a);
    for (int a = 1; a <= n; ++a) idx.push_back(a);
    for (size_t x = 0; x < idx.size(); ++x)
        for (size_t y = x; y < idx.size(); ++y)
            parts.emplace_back(s_block(ts1, idx[x], idx[y]), matrix_unit(ts1, idx[x], idx[y]));
    // place S at slot pairs (j,k) of three factors
    auto place2 = [&](int j, int k) {
        SparseOperator out(ts3.dim(), 0);
        for (const auto& [A, B] : parts) {
            SparseOperator pa = place_at(ts3, A, j - 1);
            SparseOperator pb = place_at(ts3, B, k - 1);
            if (!koszul) {
                // plain Kronecker placement, no prefix signs
                pa = SparseOperator(ts3.dim(), A.parity);
                for (long i2 = 0; i2 < ts3.dim(); ++i2) {
                    int dd = ts3.digit(i2, j - 1);
                    for (long u = 0; u < A.dim; ++u) {
                        Scalar v = A.entry(u, dd);
                        if (!v.is_zero()) pa.add(ts3.with_digit(i2, j - 1, static_cast<int>(u)), i2, v);
                    }
                }
                pb = SparseOperator(ts3.dim(), B.parity);
                for (long i2 = 0; i2 < ts3.dim(); ++i2) {
                    int dd = ts3.digit(i2, k - 1);
                    for (long u = 0; u < B.dim; ++u) {
                        Scalar v = B.entry(u, dd);
                        if (!v.is_zero()) pb.add(ts3.with_digit(i2, k - 1, static_cast<int>(u)), i2, v);
                    }
                }
            }
            out = out + compose(pa, pb);
        }
        return out;
    };
    SparseOperator s12 = place2(1, 2), s13 = place2(1, 3), s23 = place2(2, 3);
    SparseOperator lhs = compose(compose(s12, s13), s23);
    SparseOperator rhs = compose(compose(s23, s13), s12);
    return (lhs - rhs).is_zero();
}

}  // namespace qk

#endif  // QUEERKIT_REPS_HPP
