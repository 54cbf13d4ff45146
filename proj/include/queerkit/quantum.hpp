#ifndef QUEERKIT_QUANTUM_HPP
#define QUEERKIT_QUANTUM_HPP

// The quantum queer superalgebra in both presentations: the L-generator
// exchange engine driven by the single quadratic master relation, and the
// X-generator straightening engine assembled from the commutation-formula
// corpus for (divided powers of) quantum root vectors.  Includes the
// generator dictionary between the two, the anti-involution Omega, the
// comultiplication, the Lusztig integral form and the Schur quotients.

#include <map>
#include <tuple>

#include "element.hpp"
#include "rewrite.hpp"
#include "weights.hpp"

namespace qk {

// --- sign bookkeeping ---------------------------------------------------------

struct SignData {
    static int sgn(int a) { return a > 0 ? 1 : -1; }
    static int phi(int i, int j) { return std::abs(i) == std::abs(j) ? sgn(j) : 0; }
    static int p(int i, int j) { return (static_cast<long>(i) * j < 0) ? 1 : 0; }
    static int theta(int i, int j, int k) { return sgn(sgn(i) + sgn(j) + sgn(k)); }
};

inline Scalar q_minus_qinv() { return Scalar::q(1) - Scalar::q(-1); }

// L_{u,v} with u <= v in I(n|n); diagonal entries are K powers
inline Gen l_letter(int u, int v) {
    if (u == v) return kpow(std::abs(u), SignData::sgn(u));
    return lgen(u, v);
}

// --- position classes ----------------------------------------------------------
//
// Both engines order words as F-part, Cartan part, odd Cartan part, E-part;
// the slot orders inside the F/E parts follow the defining products of the
// integral bases.

namespace detail {
inline int f_slot_index(int n, int row, int col) {  // row > col
    return (col - 1) * n - col * (col - 1) / 2 + (n - row);
}
inline int e_slot_index(int n, int row, int col) {  // row < col
    return (n - row - 1) * (n - row) / 2 + (col - row - 1);
}
}  // namespace detail

struct LOrder {
    int n;

    // classify an L-alphabet letter
    int klass(const Gen& g) const {
        const int nf = n * (n - 1) / 2;
        if (g.fam == Fam::KPow) return g.i - 1;
        if (g.fam != Fam::LGen) throw std::invalid_argument("LOrder: foreign alphabet");
        const int u = g.i, v = g.j;
        const int f_base = n, kbar_base = n + 2 * nf, e_base = kbar_base + n;
        if (u > 0) {
            // L_{i,j}, 0 < i < j: even letter of the F block, root (j, i)
            return f_base + 2 * detail::f_slot_index(n, v, u);
        }
        if (-u < v) {
            // L_{-i,j}, i < j: odd letter of the F block, root (j, i)
            return f_base + 2 * detail::f_slot_index(n, v, -u) + 1;
        }
        if (-u == v) return kbar_base + (v - 1);  // odd diagonal L_{-a,a}
        // L_{-j,-i} or L_{-j,i} with i < j: E block, root (i, j)
        if (v < 0) return e_base + 2 * detail::e_slot_index(n, -v, -u);
        return e_base + 2 * detail::e_slot_index(n, v, -u) + 1;
    }

    static long degree(const Gen& g) {
        if (g.fam == Fam::KPow) return 0;
        const int u = g.i, v = g.j;
        if (-u == v && u < 0) return 1;  // odd diagonal
        return 2 * std::abs(std::abs(v) - std::abs(u));
    }
    static int multiplicity(const Gen& g) {
        return g.fam == Fam::KPow ? std::abs(g.s) : 1;
    }
};

struct XOrder {
    int n;

    // Cartan letters are grouped by index (K_i before [K_i; b]) so that all
    // same-index material is adjacent in sorted words and merges completely
    int klass(const Gen& g) const {
        const int nf = n * (n - 1) / 2;
        const int idem_base = 2 * nf;
        const int cartan_base = idem_base + 1;
        const int kbar_base = cartan_base + 2 * n;
        const int e_base = kbar_base + n;
        switch (g.fam) {
            case Fam::QX:
                return g.i > g.j ? 2 * detail::f_slot_index(n, g.i, g.j)
                                 : e_base + 2 * detail::e_slot_index(n, g.i, g.j);
            case Fam::QXbar:
                return g.i > g.j ? 2 * detail::f_slot_index(n, g.i, g.j) + 1
                                 : e_base + 2 * detail::e_slot_index(n, g.i, g.j) + 1;
            case Fam::QIdem: return idem_base;
            case Fam::KPow: return cartan_base + 2 * (g.i - 1);
            case Fam::KBr: return cartan_base + 2 * (g.i - 1) + 1;
            case Fam::KBar: return kbar_base + (g.i - 1);
            default: throw std::invalid_argument("XOrder: foreign alphabet");
        }
    }

    // twisted degree
    static long degree(const Gen& g) {
        switch (g.fam) {
            case Fam::QX: return 2L * g.s * std::abs(g.j - g.i);
            case Fam::QXbar: return 2L * std::abs(g.j - g.i);
            case Fam::KBar: return 1;
            default: return 0;
        }
    }
    static int multiplicity(const Gen& g) {
        switch (g.fam) {
            case Fam::QX: return g.s;
            case Fam::KPow: return std::abs(g.s);
            case Fam::KBr: return g.s;
            default: return 1;
        }
    }
};

// --- the Olshanski master relation ---------------------------------------------

namespace detail {

// the quadratic exchange relation instance for the ordered pair
// ((i,j),(k,l)), as an element that is zero in U_q(q(n))
inline Element ol_relation(int i, int j, int k, int l) {
    using S = SignData;
    const Scalar qq = q_minus_qinv();
    Element rel;
    Scalar lead = Scalar::q(S::phi(j, l));
    if (S::p(i, j) && S::p(k, l)) lead = -lead;
    rel.add(Word{l_letter(i, j), l_letter(k, l)}, lead);
    if (k <= j && j < l)
        rel.add(Word{l_letter(i, l), l_letter(k, j)}, Scalar(S::theta(i, j, k)) * qq);
    if (i <= -l && -l < j && j <= -k)
        rel.add(Word{l_letter(i, -l), l_letter(k, -j)}, Scalar(S::theta(-i, -j, k)) * qq);
    rel.add(Word{l_letter(k, l), l_letter(i, j)}, -Scalar::q(S::phi(i, k)));
    if (k < i && i <= l)
        rel.add(Word{l_letter(i, l), l_letter(k, j)}, -Scalar(S::theta(i, j, k)) * qq);
    if (-l <= i && i < -k && -k <= j)
        rel.add(Word{l_letter(-i, l), l_letter(-k, j)}, -Scalar(S::theta(-i, -j, k)) * qq);
    return rel;
}

// solve an identity (= 0) for the word [a, b]; returns nullopt when the word
// does not occur
inline std::optional<Element> solve_for(const Element& rel, const Gen& a, const Gen& b) {
    Word w0{a, b};
    auto it = rel.terms().find(w0);
    if (it == rel.terms().end()) return std::nullopt;
    Scalar c0 = it->second;
    Element rest = rel;
    rest.add(w0, -c0);
    return Scalar(-1) / c0 * rest;
}

}  // namespace detail

// Exchange system on the L alphabet whose irreducible words are the ordered
// monomials of the quantum PBW basis.
inline RewriteSystem olshanski_rules(int n) {
    if (n < 1) throw std::invalid_argument("olshanski_rules: rank must be >= 1");
    LOrder ord{n};
    RewriteSystem sys;
    sys.name = "olshanski(" + std::to_string(n) + ")";
    sys.klass = [ord](const Gen& g) { return ord.klass(g); };
    sys.degree = [](const Gen& g) { return LOrder::degree(g); };
    sys.multiplicity = [](const Gen& g) { return LOrder::multiplicity(g); };

    sys.pair_rule = [ord](const Gen& a, const Gen& b) -> std::optional<Element> {
        if (a.fam == Fam::KPow && b.fam == Fam::KPow) {
            if (a.i == b.i) {
                int e = a.s + b.s;
                if (e == 0) return Element::one();
                return Element(Word{kpow(a.i, e)});
            }
            if (a.i > b.i) return Element(Word{b, a});
            return std::nullopt;
        }
        if (a.fam == Fam::LGen && b.fam == Fam::KPow) {
            // L_{u,v} K_a^e = q^(-ce) K_a^e L_{u,v},  c = delta_{|v|,a} - delta_{|u|,a}
            int c = (std::abs(b.i) == std::abs(a.j) ? 1 : 0) - (std::abs(b.i) == std::abs(a.i) ? 1 : 0);
            return Scalar::q(-c * b.s) * Element(Word{b, a});
        }
        if (a.fam == Fam::KPow && b.fam == Fam::LGen) return std::nullopt;
        if (a.fam == Fam::LGen && b.fam == Fam::LGen) {
            const bool same = a == b;
            const bool odd = a.parity() == 1;
            if (!same && ord.klass(a) <= ord.klass(b)) return std::nullopt;
            if (same && !odd) return std::nullopt;
            Element rel = detail::ol_relation(a.i, a.j, b.i, b.j);
            auto r = detail::solve_for(rel, a, b);
            if (!r && same) return std::nullopt;  // tautological instance
            if (!r) throw std::logic_error("olshanski_rules: relation lacks the leading word");
            return r;
        }
        return std::nullopt;
    };
    return sys;
}

// --- Cartan-part normalization ---------------------------------------------------
//
// Laurent polynomials in a single group-like variable Z (one K_i at a time)
// with Scalar coefficients, and their expansion over the integral basis
// {Z^tau [Z; 0/b] : tau in {0,1}, b >= 0}.

using ZLaurent = std::map<int, Scalar>;

namespace detail {

inline ZLaurent z_mul(const ZLaurent& f, const ZLaurent& g) {
    ZLaurent r;
    for (const auto& [e1, c1] : f)
        for (const auto& [e2, c2] : g) {
            Scalar& c = r[e1 + e2];
            c += c1 * c2;
            if (c.is_zero()) r.erase(e1 + e2);
        }
    return r;
}

// [Z; c/t] as a Laurent polynomial in Z
inline ZLaurent z_bracket(int c, int t) {
    ZLaurent r{{0, Scalar(1)}};
    for (int s = 1; s <= t; ++s) {
        Scalar den = Scalar::q(s) - Scalar::q(-s);
        ZLaurent factor{{1, Scalar::q(c - s + 1) / den}, {-1, -Scalar::q(-c + s - 1) / den}};
        r = z_mul(r, factor);
    }
    return r;
}

// word for K_i^tau [K_i; 0/b]
inline Word cartan_word(int i, int tau, int b) {
    Word w;
    if (tau) w.push_back(kpow(i, 1));
    if (b > 0) w.push_back(kbr(i, 0, b));
    return w;
}

// expand a Laurent polynomial in K_i over the integral Cartan basis
inline Element expand_cartan(int i, const ZLaurent& P) {
    if (P.empty()) return Element::zero();
    int N = 1;
    for (const auto& [e, c] : P) N = std::max(N, std::abs(e));
    // basis: [Z;b] for b = 0..N, Z[Z;b] for b = 0..N-1; coordinates are the
    // Z-degrees -N..N
    const int dim = 2 * N + 1;
    std::vector<std::pair<int, int>> basis;  // (tau, b)
    for (int b = 0; b <= N; ++b) basis.emplace_back(0, b);
    for (int b = 0; b <= N - 1; ++b) basis.emplace_back(1, b);
    std::vector<std::vector<Scalar>> M(static_cast<size_t>(dim),
                                       std::vector<Scalar>(basis.size() + 1, Scalar(0)));
    auto row_of = [&](int deg) { return static_cast<size_t>(deg + N); };
    for (size_t col = 0; col < basis.size(); ++col) {
        ZLaurent v = z_bracket(0, basis[col].second);
        if (basis[col].first) {
            ZLaurent shifted;
            for (const auto& [e, c] : v) shifted[e + 1] = c;
            v = std::move(shifted);
        }
        for (const auto& [e, c] : v) M[row_of(e)][col] = c;
    }
    for (const auto& [e, c] : P) M[row_of(e)].back() = c;
    // Gaussian elimination
    const size_t cols = basis.size();
    size_t lead = 0;
    std::vector<size_t> pivot_col_of_row;
    for (size_t col = 0; col < cols && lead < M.size(); ++col) {
        size_t piv = lead;
        while (piv < M.size() && M[piv][col].is_zero()) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[lead]);
        Scalar inv = M[lead][col].inv();
        for (size_t c2 = col; c2 <= cols; ++c2) M[lead][c2] *= inv;
        for (size_t r2 = 0; r2 < M.size(); ++r2) {
            if (r2 == lead || M[r2][col].is_zero()) continue;
            Scalar f = M[r2][col];
            for (size_t c2 = col; c2 <= cols; ++c2) M[r2][c2] -= f * M[lead][c2];
        }
        pivot_col_of_row.push_back(col);
        ++lead;
    }
    // consistency: rows beyond the pivots must have zero rhs
    for (size_t r2 = lead; r2 < M.size(); ++r2)
        if (!M[r2][cols].is_zero())
            throw std::logic_error("expand_cartan: inconsistent system");
    Element out;
    for (size_t r2 = 0; r2 < lead; ++r2) {
        const Scalar& c = M[r2][cols];
        if (c.is_zero()) continue;
        auto [tau, b] = basis[pivot_col_of_row[r2]];
        out.add(cartan_word(i, tau, b), c);
    }
    return out;
}

// the K_i-letter as a Laurent polynomial in Z = K_i
inline ZLaurent z_of_letter(const Gen& g) {
    if (g.fam == Fam::KPow) return {{g.s, Scalar(1)}};
    if (g.fam == Fam::KBr) return z_bracket(g.c, g.s);
    throw std::invalid_argument("z_of_letter: not a Cartan letter");
}

}  // namespace detail

// --- dictionaries: X-letters in L-form, Omega, Delta ----------------------------

// closed L-expressions of the quantum root vectors
inline Element xl_form(int i, int j, bool odd) {
    const Scalar inv = Scalar(1) / q_minus_qinv();
    if (i < j) {
        Gen L = odd ? lgen(-j, i) : lgen(-j, -i);
        return -inv * Element(Word{kpow(j, 1), L});
    }
    // i > j: the paper's X_{j,i}-side formulas with (i, j) swapped
    int a = j, b = i;  // a < b
    if (!odd) return inv * Element(Word{lgen(a, b), kpow(b, -1)});
    return -inv * Element(Word{lgen(-a, b), kpow(b, -1)});
}

// Drinfeld-Jimbo generators as L-expressions
inline Element dj_l_K(int i, int e = 1) { return Element(Word{kpow(i, e)}); }
inline Element dj_l_Kbar(int i) {
    return -(Scalar(1) / q_minus_qinv()) * Element(Word{lgen(-i, i)});
}
inline Element dj_l_E(int j) { return xl_form(j, j + 1, false); }
inline Element dj_l_Ebar(int j) { return xl_form(j, j + 1, true); }
inline Element dj_l_F(int j) { return xl_form(j + 1, j, false); }
inline Element dj_l_Fbar(int j) { return xl_form(j + 1, j, true); }

// X-alphabet generator shorthands
inline Element qE(int j) { return Element(qx(j, j + 1)); }
inline Element qF(int j) { return Element(qx(j + 1, j)); }
inline Element qEb(int j) { return Element(qxbar(j, j + 1)); }
inline Element qFb(int j) { return Element(qxbar(j + 1, j)); }
inline Element qK(int i, int e = 1) { return Element(Word{kpow(i, e)}); }
inline Element qKb(int i) { return Element(kbar(i)); }

// substitute letters by elements (algebra morphism on the term model)
inline Element map_letters(const Element& e, const std::function<Element(const Gen&)>& f) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element prod(c);
        for (const auto& g : w) prod = multiply(prod, f(g));
        out += prod;
    }
    return out;
}

// X-alphabet elements rewritten through the dictionary into the L-alphabet
inline Element to_l_form(const Element& e) {
    return map_letters(e, [](const Gen& g) -> Element {
        switch (g.fam) {
            case Fam::KPow: return Element(Word{g});
            case Fam::KBar: return dj_l_Kbar(g.i);
            case Fam::QXbar: return xl_form(g.i, g.j, true);
            case Fam::QX: {
                Element base = xl_form(g.i, g.j, false);
                Element r = Element::one();
                for (int k = 0; k < g.s; ++k) r = multiply(r, base);
                return Scalar(1) / qfact(g.s) * r;
            }
            case Fam::KBr: {
                ZLaurent v = detail::z_bracket(g.c, g.s);
                Element r;
                for (const auto& [e2, c2] : v) {
                    Word w;
                    if (e2 != 0) w.push_back(kpow(g.i, e2));
                    r.add(std::move(w), c2);
                }
                return r;
            }
            default: throw std::invalid_argument("to_l_form: letter has no L-form");
        }
    });
}

// the anti-involution: reverses words, fixes Kbar and brackets, inverts K,
// transposes root vectors, and bars every coefficient
inline Gen omega_gen(const Gen& g) {
    switch (g.fam) {
        case Fam::QX: return qx(g.j, g.i, g.s);
        case Fam::QXbar: return qxbar(g.j, g.i);
        case Fam::KPow: return kpow(g.i, -g.s);
        case Fam::KBr:
        case Fam::KBar:
        case Fam::QIdem: return g;
        default: throw std::invalid_argument("omega: defined on the DJ/X alphabet");
    }
}

inline Element omega(const Element& e) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Word rw;
        rw.reserve(w.size());
        for (size_t k = w.size(); k-- > 0;) rw.push_back(omega_gen(w[k]));
        out.add(std::move(rw), c.bar());
    }
    return out;
}

// quantum root vectors by the defining recursion, expanded over the simple
// generators; k = 0 picks the canonical intermediate index
inline Element root_vector(int i, int j, bool odd, int k = 0) {
    if (i == j) throw std::invalid_argument("root_vector: i != j required");
    if (std::abs(i - j) == 1) return odd ? Element(qxbar(i, j)) : Element(qx(i, j));
    if (k == 0) k = i < j ? i + 1 : i - 1;
    if (k <= std::min(i, j) || k >= std::max(i, j))
        throw std::invalid_argument("root_vector: k must lie strictly between i and j");
    if (i < j) {
        Element left = root_vector(i, k, false);
        Element right = root_vector(k, j, odd);
        return multiply(left, right) - Scalar::q(1) * multiply(right, left);
    }
    Element left = root_vector(i, k, odd);
    Element right = root_vector(k, j, false);
    return multiply(left, right) - Scalar::q(-1) * multiply(right, left);
}

// --- comultiplication -------------------------------------------------------------

using Tensor2 = std::map<std::pair<Word, Word>, Scalar>;
using Tensor3 = std::map<std::tuple<Word, Word, Word>, Scalar>;

namespace detail {

inline void t2_add(Tensor2& t, std::pair<Word, Word> key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace detail

// multiplication in the super tensor square: (a1 (x) a2)(b1 (x) b2) =
// (-1)^(p(a2) p(b1)) a1 b1 (x) a2 b2
inline Tensor2 t2_mul(const Tensor2& a, const Tensor2& b) {
    Tensor2 r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            int sign = (word_parity(wa.second) & word_parity(wb.first)) ? -1 : 1;
            Word w1 = wa.first;
            w1.insert(w1.end(), wb.first.begin(), wb.first.end());
            Word w2 = wa.second;
            w2.insert(w2.end(), wb.second.begin(), wb.second.end());
            detail::t2_add(r, {std::move(w1), std::move(w2)}, Scalar(sign) * ca * cb);
        }
    return r;
}

namespace detail {
// Delta(L_{i,j}) = sum_{i <= k <= j} L_{i,k} (x) L_{k,j} over I(n|n)
inline Tensor2 delta_letter(const Gen& g) {
    Tensor2 r;
    if (g.fam == Fam::KPow) {
        // group-like diagonal letters
        r[{Word{g}, Word{g}}] = Scalar(1);
        return r;
    }
    if (g.fam != Fam::LGen) throw std::invalid_argument("comultiply: L-alphabet only");
    for (int k = g.i; k <= g.j; ++k) {
        if (k == 0) continue;
        t2_add(r, {Word{l_letter(g.i, k)}, Word{l_letter(k, g.j)}}, Scalar(1));
    }
    return r;
}
}  // namespace detail

// algebra-map extension of the comultiplication to polynomials in the
// L-generators
inline Tensor2 comultiply(const Element& e) {
    Tensor2 out;
    for (const auto& [w, c] : e.terms()) {
        Tensor2 prod{{{Word{}, Word{}}, Scalar(1)}};
        for (const auto& g : w) prod = t2_mul(prod, detail::delta_letter(g));
        for (const auto& [key, cc] : prod) detail::t2_add(out, key, c * cc);
    }
    return out;
}

// (Delta (x) 1) Delta and (1 (x) Delta) Delta of a single L-letter, for
// coassociativity checks
inline Tensor3 delta_left(const Gen& g) {
    Tensor3 r;
    for (const auto& [key, c] : detail::delta_letter(g)) {
        const Word& w1 = key.first;
        if (w1.size() != 1) throw std::logic_error("delta_left: unexpected word");
        for (const auto& [key2, c2] : detail::delta_letter(w1[0])) {
            auto k3 = std::make_tuple(key2.first, key2.second, key.second);
            auto [it, fresh] = r.emplace(k3, c * c2);
            if (!fresh) it->second += c * c2;
        }
    }
    return r;
}
inline Tensor3 delta_right(const Gen& g) {
    Tensor3 r;
    for (const auto& [key, c] : detail::delta_letter(g)) {
        const Word& w2 = key.second;
        if (w2.size() != 1) throw std::logic_error("delta_right: unexpected word");
        for (const auto& [key2, c2] : detail::delta_letter(w2[0])) {
            auto k3 = std::make_tuple(key.first, key2.first, key2.second);
            auto [it, fresh] = r.emplace(k3, c * c2);
            if (!fresh) it->second += c * c2;
        }
    }
    return r;
}

}  // namespace qk

#include "quantum_xrules.hpp"

#endif  // QUEERKIT_QUANTUM_HPP
