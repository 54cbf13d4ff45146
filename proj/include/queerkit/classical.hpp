#ifndef QUEERKIT_CLASSICAL_HPP
#define QUEERKIT_CLASSICAL_HPP

// The enveloping superalgebra of q(n): straightening rules for divided
// powers of root vectors and the Cartan binomial calculus, the Schur
// quotient with its idempotent rules, the integral basis u_A, and the
// closed dimension formulas.

#include <algorithm>
#include <cassert>

#include "element.hpp"
#include "rewrite.hpp"
#include "weights.hpp"

namespace qk {

// --- generator shorthands ---------------------------------------------------

inline Element ch(int i) { return Element(binom_h(i, 1)); }
inline Element chb(int i) { return Element(hbar(i)); }
inline Element ce(int i) { return Element(cx(i, i + 1)); }
inline Element cf(int i) { return Element(cx(i + 1, i)); }
inline Element ceb(int i) { return Element(cxbar(i, i + 1)); }
inline Element cfb(int i) { return Element(cxbar(i + 1, i)); }

// --- integer-valued polynomial expansions ------------------------------------

namespace detail {

// expand an integer-valued polynomial (given by values on 0..deg) in the
// binomial basis: P(x) = sum_a coeff[a] * C(x, a), coeff[a] = Delta^a P(0)
inline std::vector<Int> binomial_coeffs(std::vector<Int> values) {
    std::vector<Int> out;
    out.reserve(values.size());
    for (size_t a = 0; a < values.size(); ++a) {
        out.push_back(values[0]);
        for (size_t k = 0; k + a + 1 < values.size() + 0; ++k) values[k] = values[k + 1] - values[k];
    }
    return out;
}

// word for C(h_i, a) with a >= 0 (empty for a == 0)
inline Word binom_word(int i, long a) {
    if (a == 0) return {};
    return {binom_h(i, static_cast<int>(a))};
}

// C(h_k + shift, s) expanded over the binomial basis of h_k
inline Element binom_shift_expand(int k, long shift, int s) {
    std::vector<Int> values;
    for (int x = 0; x <= s; ++x) values.push_back(int_binom(Int(x + shift), s));
    std::vector<Int> coef = binomial_coeffs(std::move(values));
    Element r;
    for (size_t a = 0; a < coef.size(); ++a)
        if (coef[a] != 0) r.add(binom_word(k, static_cast<long>(a)), Scalar(coef[a]));
    return r;
}

// C(h_i - h_j + shift, t) expanded over C(h_i, a) C(h_j, b); i != j
inline Element binom_diff_expand(int i, int j, long shift, int t) {
    // finite differences in both variables on the window [0..t]^2
    std::vector<std::vector<Int>> w(static_cast<size_t>(t) + 1,
                                    std::vector<Int>(static_cast<size_t>(t) + 1));
    for (int x = 0; x <= t; ++x)
        for (int y = 0; y <= t; ++y) w[static_cast<size_t>(x)][static_cast<size_t>(y)] =
            int_binom(Int(x - y + shift), t);
    Element r;
    for (int a = 0; a <= t; ++a) {
        std::vector<Int> row = w[0];  // Delta_x^a P(0, y), y = 0..t
        for (int b = 0; b <= t; ++b) {
            const Int& cab = row[0];
            if (cab != 0) {
                Word word;
                if (a > 0 && b > 0) {
                    if (i < j) word = {binom_h(i, a), binom_h(j, b)};
                    else word = {binom_h(j, b), binom_h(i, a)};
                } else if (a > 0) {
                    word = {binom_h(i, a)};
                } else if (b > 0) {
                    word = {binom_h(j, b)};
                }
                r.add(std::move(word), Scalar(cab));
            }
            for (size_t k = 0; k + 1 < row.size(); ++k) row[k] = row[k + 1] - row[k];
            row.pop_back();
        }
        for (size_t x = 0; x + 1 < w.size(); ++x)
            for (size_t y = 0; y < w[x].size(); ++y) w[x][y] = w[x + 1][y] - w[x][y];
        w.pop_back();
    }
    return r;
}

// product C(h_i, a) C(h_i, b) re-expanded in the binomial basis of h_i
inline Element binom_product_expand(int i, int a, int b) {
    int d = a + b;
    std::vector<Int> values;
    for (int x = 0; x <= d; ++x) values.push_back(int_binom(Int(x), a) * int_binom(Int(x), b));
    std::vector<Int> coef = binomial_coeffs(std::move(values));
    Element r;
    for (size_t k = 0; k < coef.size(); ++k)
        if (coef[k] != 0) r.add(binom_word(i, static_cast<long>(k)), Scalar(coef[k]));
    return r;
}

}  // namespace detail

// --- position classes for the classical PBW order ----------------------------
//
// Normal words read f_{A^-} [1_lambda] binom(h) hbar e_{A^+}: first the
// negative slots in column-major bottom-up order, then the idempotent, the
// even Cartan letters, the odd Cartan letters, and the positive slots in
// row-major order starting from the bottom row.

struct ClassicalOrder {
    int n;

    int f_index(int k, int j) const {  // slot (k,j), k > j
        return (j - 1) * n - j * (j - 1) / 2 + (n - k);
    }
    int e_index(int j, int k) const {  // slot (j,k), j < k
        return (n - j - 1) * (n - j) / 2 + (k - j - 1);
    }

    int klass(const Gen& g) const {
        const int nf = n * (n - 1) / 2;
        const int idem_base = 2 * nf;
        const int binom_base = idem_base + 1;
        const int hbar_base = binom_base + n;
        const int e_base = hbar_base + n;
        switch (g.fam) {
            case Fam::CX:
                return g.i > g.j ? 2 * f_index(g.i, g.j) : e_base + 2 * e_index(g.i, g.j);
            case Fam::CXbar:
                return g.i > g.j ? 2 * f_index(g.i, g.j) + 1 : e_base + 2 * e_index(g.i, g.j) + 1;
            case Fam::CIdem: return idem_base;
            case Fam::CBinomH: return binom_base + (g.i - 1);
            case Fam::CHbar: return hbar_base + (g.i - 1);
            default: throw std::invalid_argument("ClassicalOrder: foreign alphabet");
        }
    }

    static long degree(const Gen& g) {
        switch (g.fam) {
            case Fam::CX: return static_cast<long>(g.s) * std::abs(g.j - g.i);
            case Fam::CXbar: return std::abs(g.j - g.i);
            case Fam::CHbar: return 1;
            default: return 0;
        }
    }
    static int multiplicity(const Gen& g) {
        switch (g.fam) {
            case Fam::CX:
            case Fam::CBinomH: return g.s;
            default: return 1;
        }
    }
};

// --- the straightening rules --------------------------------------------------

namespace detail {

inline Word cx_word(int i, int j, int s) {
    if (s == 0) return {};
    return {cx(i, j, s)};
}

// commutation of divided powers of even root vectors, all index patterns
inline Element rule_xx(int i, int j, int m, int k, int l, int s) {
    Element r;
    if (k == j && l == i) {
        // opposite roots
        for (int t = 0; t <= std::min(m, s); ++t) {
            Element mid = t == 0 ? Element::one()
                                 : binom_diff_expand(i, j, -static_cast<long>(m) - s + 2 * t, t);
            Element term = Element(cx_word(k, l, s - t)) * mid * Element(cx_word(i, j, m - t));
            r += term;
        }
        return r;
    }
    bool sum_is_root = (j == k && i != l) || (i == l && j != k);
    if (sum_is_root) {
        int bi = (j == k) ? i : k;
        int bj = (j == k) ? l : j;
        int eps = RootDatum::eps_sign(i, j, k, l);
        for (int t = 0; t <= std::min(m, s); ++t) {
            Scalar c(1);
            if (eps < 0 && (t % 2)) c = Scalar(-1);
            Element term = Element(cx_word(k, l, s - t)) *
                           Element(cx_word(bi, bj, t)) * Element(cx_word(i, j, m - t));
            r += c * term;
        }
        return r;
    }
    r.add(Word{cx(k, l, s), cx(i, j, m)}, Scalar(1));
    return r;
}

// x^(m)_{i,j} xbar_{k,l}
inline Element rule_x_xbar(int i, int j, int m, int k, int l) {
    Element r(Word{cxbar(k, l)});
    r = r * Element(cx_word(i, j, m));
    if (k == j && l == i) {
        Element hb_term = (chb(i) - chb(j)) * Element(cx_word(i, j, m - 1));
        r += hb_term;
        if (m >= 2) r -= Element(Word{cxbar(i, j)}) * Element(cx_word(i, j, m - 2));
        return r;
    }
    bool sum_is_root = (j == k && i != l) || (i == l && j != k);
    if (sum_is_root) {
        int bi = (j == k) ? i : k;
        int bj = (j == k) ? l : j;
        int eps = RootDatum::eps_sign(i, j, k, l);
        Element tail = Element(Word{cxbar(bi, bj)}) * Element(cx_word(i, j, m - 1));
        r += Scalar(eps) * tail;
    }
    return r;
}

// xbar_{i,j} xbar_{k,l}
inline Element rule_xbar_xbar(int i, int j, int k, int l) {
    Element r = -Element(Word{cxbar(k, l), cxbar(i, j)});
    if (k == j && l == i) {
        r += ch(i) + ch(j);
        return r;
    }
    bool sum_is_root = (j == k && i != l) || (i == l && j != k);
    if (sum_is_root) {
        int bi = (j == k) ? i : k;
        int bj = (j == k) ? l : j;
        r += Element(Word{cx(bi, bj, 1)});
    }
    return r;
}

}  // namespace detail

// Complete adjacent-pair exchange system whose irreducible words are the
// Kostant PBW monomials m_A.  With r >= 0 the system is extended by the
// idempotent alphabet of the Schur quotient U(n,r).
inline RewriteSystem make_classical_system(int n, int r = -1) {
    if (n < 1) throw std::invalid_argument("classical system: rank must be >= 1");
    const bool quotient = r >= 0;
    ClassicalOrder ord{n};
    RewriteSystem sys;
    sys.name = quotient ? "schur(" + std::to_string(n) + "," + std::to_string(r) + ")"
                        : "classical(" + std::to_string(n) + ")";
    sys.klass = [ord](const Gen& g) { return ord.klass(g); };
    sys.degree = [](const Gen& g) { return ClassicalOrder::degree(g); };
    sys.multiplicity = [](const Gen& g) { return ClassicalOrder::multiplicity(g); };

    std::vector<Composition> lambdas = quotient ? compositions(n, r) : std::vector<Composition>{};

    if (quotient) {
        sys.unit_rule = [r](const Gen& g) -> std::optional<Element> {
            if (g.fam == Fam::CBinomH && g.s > r) return Element::zero();
            return std::nullopt;
        };
        sys.word_rule = [lambdas](const Word& w) -> std::optional<Element> {
            for (const auto& g : w)
                if (g.fam == Fam::CIdem) return std::nullopt;
            Element r;
            for (const auto& lam : lambdas) {
                Word ext = w;
                ext.push_back(cidem(lam));
                r.add(std::move(ext), Scalar(1));
            }
            return r;
        };
    }

    sys.pair_rule = [ord, r](const Gen& a, const Gen& b) -> std::optional<Element> {
        const bool a_root = a.fam == Fam::CX || a.fam == Fam::CXbar;
        const bool b_root = b.fam == Fam::CX || b.fam == Fam::CXbar;
        const int ca = ord.klass(a), cb = ord.klass(b);

        // idempotent calculus of the quotient
        if (a.fam == Fam::CIdem || b.fam == Fam::CIdem) {
            if (a.fam == Fam::CIdem && b.fam == Fam::CIdem)
                return a.lam == b.lam ? Element(Word{a}) : Element::zero();
            // binom(h, b) evaluates on idempotents from either side
            if (a.fam == Fam::CIdem && b.fam == Fam::CBinomH) {
                Int c = int_binom(Int(a.lam[static_cast<size_t>(b.i - 1)]), b.s);
                return Scalar(c) * Element(Word{a});
            }
            if (a.fam == Fam::CBinomH && b.fam == Fam::CIdem) {
                Int c = int_binom(Int(b.lam[static_cast<size_t>(a.i - 1)]), a.s);
                return Scalar(c) * Element(Word{b});
            }
            if (a.fam == Fam::CHbar && b.fam == Fam::CIdem) {
                if (b.lam[static_cast<size_t>(a.i - 1)] == 0) return Element::zero();
                return Element(Word{b, a});
            }
            if (a.fam == Fam::CIdem && b.fam == Fam::CHbar) {
                if (a.lam[static_cast<size_t>(b.i - 1)] == 0) return Element::zero();
                return std::nullopt;  // 1_lambda hbar_i is normally ordered
            }
            if (a_root && b.fam == Fam::CIdem && ca > cb) {
                int m = a.fam == Fam::CX ? a.s : 1;
                Composition lam = RootDatum::add_root(b.lam, a.i, a.j, m);
                if (!in_lambda_nr(lam, r)) return Element::zero();
                return Element(Word{cidem(lam), a});
            }
            if (a.fam == Fam::CIdem && b_root && ca > cb) {
                int m = b.fam == Fam::CX ? b.s : 1;
                Composition lam = RootDatum::add_root(a.lam, b.i, b.j, -m);
                if (!in_lambda_nr(lam, r)) return Element::zero();
                return Element(Word{b, cidem(lam)});
            }
            return std::nullopt;
        }

        // same-slot merges
        if (ca == cb) {
            if (a.fam == Fam::CX && b.fam == Fam::CX) {
                Int c = int_binom(Int(a.s + b.s), a.s);
                return Scalar(c) * Element(Word{cx(a.i, a.j, a.s + b.s)});
            }
            if (a.fam == Fam::CXbar && b.fam == Fam::CXbar) return Element::zero();
            if (a.fam == Fam::CBinomH && b.fam == Fam::CBinomH)
                return detail::binom_product_expand(a.i, a.s, b.s);
            if (a.fam == Fam::CHbar && b.fam == Fam::CHbar) return ch(a.i);
            return std::nullopt;
        }
        if (ca < cb) return std::nullopt;

        // root x root
        if (a_root && b_root) {
            if (a.fam == Fam::CX && b.fam == Fam::CX)
                return detail::rule_xx(a.i, a.j, a.s, b.i, b.j, b.s);
            if (a.fam == Fam::CX && b.fam == Fam::CXbar)
                return detail::rule_x_xbar(a.i, a.j, a.s, b.i, b.j);
            if (a.fam == Fam::CXbar && b.fam == Fam::CXbar)
                return detail::rule_xbar_xbar(a.i, a.j, b.i, b.j);
            // odd then even: solve the even-odd formula for the reversed pair
            Element id = detail::rule_x_xbar(b.i, b.j, b.s, a.i, a.j);
            // id = x^(s) xbar expressed with xbar x^(s) leading; extract
            Word lead{a, b};
            Scalar c0 = id.terms().count(lead) ? id.terms().at(lead) : Scalar(0);
            if (c0.is_zero()) throw std::logic_error("classical rules: malformed exchange");
            Element rest = id;
            rest.add(lead, -c0);
            // b a = id  =>  a b = (b a - rest)/c0
            Element r = Element(Word{b, a});
            r -= rest;
            return Scalar(1) / c0 * r;
        }

        // root x Cartan (positive root vector left of a Cartan letter)
        if (a_root && b.fam == Fam::CBinomH) {
            int m = a.fam == Fam::CX ? a.s : 1;
            int c = RootDatum::pairing(b.i, a.i, a.j);
            if (c == 0) return Element(Word{b, a});
            return detail::binom_shift_expand(b.i, -static_cast<long>(m) * c, b.s) * Element(Word{a});
        }
        if (a_root && b.fam == Fam::CHbar) {
            int c = RootDatum::pairing(b.i, a.i, a.j);
            if (a.fam == Fam::CX) {
                Element r(Word{b, a});
                if (c != 0)
                    r -= Scalar(c) * (Element(Word{cxbar(a.i, a.j)}) *
                                      Element(detail::cx_word(a.i, a.j, a.s - 1)));
                return r;
            }
            // xbar h_k-bar = -h_k-bar xbar + |(eps_k, alpha)| x, from the
            // odd-odd anticommutator of the matrix model
            Element r = -Element(Word{b, a});
            if (c != 0) r += Scalar(std::abs(c)) * Element(Word{cx(a.i, a.j, 1)});
            return r;
        }

        // Cartan x root (Cartan letter left of a negative root vector)
        if (a.fam == Fam::CBinomH && b_root) {
            int m = b.fam == Fam::CX ? b.s : 1;
            int c = RootDatum::pairing(a.i, b.i, b.j);
            if (c == 0) return Element(Word{b, a});
            return Element(Word{b}) * detail::binom_shift_expand(a.i, static_cast<long>(m) * c, a.s);
        }
        if (a.fam == Fam::CHbar && b_root) {
            int c = RootDatum::pairing(a.i, b.i, b.j);
            if (b.fam == Fam::CX) {
                Element r(Word{b, a});
                if (c != 0)
                    r += Scalar(c) * (Element(Word{cxbar(b.i, b.j)}) *
                                      Element(detail::cx_word(b.i, b.j, b.s - 1)));
                return r;
            }
            Element r = -Element(Word{b, a});
            if (c != 0) r += Scalar(std::abs(c)) * Element(Word{cx(b.i, b.j, 1)});
            return r;
        }

        // Cartan x Cartan with distinct indices
        if (a.fam == Fam::CBinomH && b.fam == Fam::CBinomH) return Element(Word{b, a});
        if (a.fam == Fam::CHbar && b.fam == Fam::CBinomH) return Element(Word{b, a});
        if (a.fam == Fam::CHbar && b.fam == Fam::CHbar) return -Element(Word{b, a});

        return std::nullopt;
    };
    return sys;
}

inline RewriteSystem classical_rules(int n) { return make_classical_system(n); }
inline RewriteSystem schur_rules(int n, int r) { return make_classical_system(n, r); }

// --- integral basis and dimensions -------------------------------------------

struct LabeledBasisElement {
    SuperMatrix A;
    Composition lambda;
    Element u;
};

namespace detail {

// word letters of e_{A^+}: rows bottom-up, within a row left to right
inline void append_e_part(Word& w, const SuperMatrix& A) {
    for (int j = A.n - 1; j >= 1; --j)
        for (int k = j + 1; k <= A.n; ++k) {
            if (A.e0(j, k) > 0) w.push_back(cx(j, k, A.e0(j, k)));
            if (A.e1(j, k)) w.push_back(cxbar(j, k));
        }
}
// word letters of f_{A^-}: columns left to right, within a column bottom-up
inline void append_f_part(Word& w, const SuperMatrix& A) {
    for (int j = 1; j <= A.n - 1; ++j)
        for (int k = A.n; k >= j + 1; --k) {
            if (A.e0(k, j) > 0) w.push_back(cx(k, j, A.e0(k, j)));
            if (A.e1(k, j)) w.push_back(cxbar(k, j));
        }
}

}  // namespace detail

// u_A = f_{A^-} 1_{chi(A)} hbar_{A^0_1} e_{A^+} for A in M_n(N|Z_2)_r
inline std::vector<LabeledBasisElement> schur_basis(int n, int r) {
    std::vector<LabeledBasisElement> out;
    for (const auto& A : super_matrices(n, r)) {
        Word w;
        detail::append_f_part(w, A);
        Composition lam = A.chi();
        w.push_back(cidem(lam));
        for (int i = 1; i <= n; ++i)
            if (A.e1(i, i)) w.push_back(hbar(i));
        detail::append_e_part(w, A);
        out.push_back({A, lam, Element(std::move(w))});
    }
    return out;
}

// dim Q(n,r) = sum_k C(n^2+k-1, k) C(n^2, r-k)
inline Int dim_schur(int n, int r) {
    Int total(0);
    for (int k = 0; k <= r; ++k)
        total += int_binom(Int(n) * n + k - 1, k) * int_binom(Int(n) * n, r - k);
    return total;
}

// dim Q^0(n,r) = sum_{lambda in Lambda(n,r)} 2^(l(lambda))
inline Int dim_schur_zero(int n, int r) {
    Int total(0);
    for (const auto& lam : compositions(n, r)) {
        Int p(1);
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(comp_length(lam)));
        total += p;
    }
    return total;
}

}  // namespace qk

#endif  // QUEERKIT_CLASSICAL_HPP
