#ifndef QUEERKIT_QUANTUM_XRULES_HPP
#define QUEERKIT_QUANTUM_XRULES_HPP

// Straightening rules on the X alphabet: the commutation formulas for
// (divided powers of) quantum root vectors, oriented left-to-right.  The
// formulas for the remaining index patterns are produced mechanically by
// the anti-involution Omega and by solving a stated formula for the
// reversed product.

#include "quantum.hpp"

namespace qk {
namespace xrules {

inline Element xdp(int i, int j, int m) {
    if (m < 0) return Element::zero();  // X^(m) vanishes for negative order
    return m == 0 ? Element::one() : Element(qx(i, j, m));
}
inline Element xb(int i, int j) { return Element(qxbar(i, j)); }
inline Element KP(int i, int e) {
    return e == 0 ? Element::one() : Element(Word{kpow(i, e)});
}
inline Scalar qp(int e) { return Scalar::q(e); }

// [K_i K_j^-1; c/t] expanded into K-power words
inline Element kk_bracket(int i, int j, int c, int t) {
    Element r;
    for (const auto& [e, coef] : detail::z_bracket(c, t)) {
        Word w;
        if (e != 0) {
            w.push_back(kpow(i, e));
            w.push_back(kpow(j, -e));
        }
        r.add(std::move(w), coef);
    }
    return r;
}

// (q - q^-1)^t [t]!
inline Scalar qq_pow_fact(int t) { return q_minus_qinv().pow(t) * qfact(t); }

// --- even-even, both positive: X^(m)_{i,j} X^(s)_{k,l}, i<j, k<l -------------

inline std::optional<Element> div_ppee_f1(int i, int j, int m, int k, int l, int s) {
    Element swap = xdp(k, l, s) * xdp(i, j, m);
    if (j < k || (i < k && l < j)) return swap;
    if ((i < k && j == l) || (i == k && j < l)) return qp(-m * s) * swap;
    if (i < k && k == j && j < l) {
        Element r = qp(m * s) * swap;
        for (int t = 1; t <= std::min(m, s); ++t)
            r += qp((m - t) * (s - t)) * (xdp(k, l, s - t) * xdp(i, l, t) * xdp(i, j, m - t));
        return r;
    }
    if (i < k && k < j && j < l) {
        Element r = swap;
        for (int t = 1; t <= std::min(m, s); ++t) {
            Scalar c = qq_pow_fact(t) * qp(-(m + s) * t + t * (3 * t + 1) / 2);
            if (t % 2) c = -c;
            r += c * (xdp(k, l, s - t) * xdp(k, j, t) * xdp(i, l, t) * xdp(i, j, m - t));
        }
        return r;
    }
    return std::nullopt;
}

// --- even-even, positive x negative: X^(m)_{i,j} X^(s)_{k,l}, i<j, k>l --------

inline std::optional<Element> div_pnee_f1(int i, int j, int m, int k, int l, int s) {
    Element swap = xdp(k, l, s) * xdp(i, j, m);
    if (i == l && j == k) {
        Element r = swap;
        for (int t = 1; t <= std::min(m, s); ++t)
            r += xdp(k, l, s - t) * kk_bracket(i, j, 2 * t - m - s, t) * xdp(i, j, m - t);
        return r;
    }
    if (j <= l || (i < l && k < j)) return swap;
    if (i == l && j < k) {
        Element r = swap;
        for (int t = 1; t <= std::min(m, s); ++t) {
            Scalar c = qp((m + s - t - 1) * t);
            if (t % 2) c = -c;
            r += c * (xdp(k, l, s - t) * KP(i, -t) * KP(j, t) * xdp(k, j, t) * xdp(i, j, m - t));
        }
        return r;
    }
    if (i < l && j == k) {
        Element r = swap;
        for (int t = 1; t <= std::min(m, s); ++t)
            r += qp((m + s - 2 * t) * t) *
                 (xdp(k, l, s - t) * KP(l, -t) * KP(j, t) * xdp(i, l, t) * xdp(i, j, m - t));
        return r;
    }
    if (i < l && l < j && j < k) {
        Element r = swap;
        for (int t = 1; t <= std::min(m, s); ++t)
            r += qq_pow_fact(t) * qp((m + s) * t - t * (3 * t + 1) / 2) *
                 (xdp(k, l, s - t) * KP(l, -t) * KP(j, t) * xdp(k, j, t) * xdp(i, l, t) *
                  xdp(i, j, m - t));
        return r;
    }
    return std::nullopt;
}

// --- even-odd, both positive: X^(m)_{i,j} Xbar_{k,l}, i<j, k<l ---------------
// (all index patterns are stated)

inline Element div_ppeo(int i, int j, int m, int k, int l) {
    const Scalar qq = q_minus_qinv();
    Element swap = xb(k, l) * xdp(i, j, m);
    if ((i == k && j == l) || j < k || l < i || (k < i && j < l)) return swap;
    if (i < k && l < j)
        return swap + qp(m - 1) * qq * (xb(k, j) * xdp(i, l, 1) * xdp(i, j, m - 1)) -
               qp(-m + 1) * qq * (xdp(k, j, 1) * xb(i, l) * xdp(i, j, m - 1)) -
               qp(-1) * qq * qq * (xdp(k, j, 1) * xb(i, j) * xdp(i, l, 1) * xdp(i, j, m - 2));
    if (i == k && j < l) return qp(-m) * swap;
    if (i < k && k == j && j < l) return qp(m) * swap + xb(i, l) * xdp(i, j, m - 1);
    if (i < k && k < j && j == l)
        return qp(m) * swap - qq * (xdp(k, j, 1) * xb(i, l) * xdp(i, j, m - 1));
    if (i < k && k < j && j < l)
        return swap - qp(-m + 1) * qq * (xdp(k, j, 1) * xb(i, l) * xdp(i, j, m - 1));
    if (i == k && l < j)
        return qp(-m) * swap + qp(-1) * qq * (xb(k, j) * xdp(i, l, 1) * xdp(i, j, m - 1));
    if (k < i && i == l) return qp(-m) * swap - qp(-1) * (xb(k, j) * xdp(i, j, m - 1));
    if (k < i && i < l && l == j) return qp(m) * swap;
    if (k < i && i < l && l < j)
        return swap + qp(m - 1) * qq * (xb(k, j) * xdp(i, l, 1) * xdp(i, j, m - 1));
    throw std::logic_error("div_ppeo: unhandled index pattern");
}

// --- even-odd, positive x negative: X^(m)_{i,j} Xbar_{k,l}, i<j, k>l ---------
// (all index patterns are stated)

inline Element div_pneo(int i, int j, int m, int k, int l) {
    const Scalar qq = q_minus_qinv();
    Element swap = xb(k, l) * xdp(i, j, m);
    if (i == l && j == k)
        return swap - qp(m - 1) * (Element(kbar(j)) * KP(i, -1) * xdp(i, j, m - 1)) +
               qp(-m + 1) * (KP(j, -1) * Element(kbar(i)) * xdp(i, j, m - 1)) -
               xb(i, j) * KP(j, -1) * KP(i, -1) * xdp(i, j, m - 2);
    if (j <= l || k <= i || (l < i && j < k)) return swap;
    if (i == l && j < k) return swap - qp(m - 1) * (KP(i, -1) * KP(j, 1) * xb(k, j) * xdp(i, j, m - 1));
    if (i == l && k < j)
        return swap - qp(m - 1) * (xb(k, j) * KP(i, -1) * KP(k, -1) * xdp(i, j, m - 1)) -
               qp(-m + 1) * qq * (xdp(k, j, 1) * Element(kbar(i)) * KP(k, -1) * xdp(i, j, m - 1)) +
               qp(-1) * qq *
                   (xdp(k, j, 1) * xb(i, j) * KP(i, -1) * KP(k, -1) * xdp(i, j, m - 2));
    if (i < l && j == k)
        return swap + qp(m - 1) * qq * (KP(l, -1) * Element(kbar(j)) * xdp(i, l, 1) * xdp(i, j, m - 1)) +
               qp(-m + 1) * (KP(l, -1) * KP(j, -1) * xb(i, l) * xdp(i, j, m - 1)) +
               qp(-1) * qq * (KP(l, -1) * KP(j, -1) * xb(i, j) * xdp(i, l, 1) * xdp(i, j, m - 2));
    if (l < i && j == k) return swap + qp(-m + 1) * (xb(i, l) * KP(i, 1) * KP(j, -1) * xdp(i, j, m - 1));
    if (i < l && k < j)
        return swap + qp(m) * qq * (KP(l, -1) * KP(k, -1) * xb(k, j) * xdp(i, l, 1) * xdp(i, j, m - 1)) -
               qp(-m + 2) * qq *
                   (KP(l, -1) * KP(k, -1) * xdp(k, j, 1) * xb(i, l) * xdp(i, j, m - 1)) -
               qq * qq *
                   (KP(l, -1) * KP(k, -1) * xdp(k, j, 1) * xb(i, j) * xdp(i, l, 1) *
                    xdp(i, j, m - 2));
    if (i < l && l < j && j < k)
        return swap + qp(m - 1) * qq * (KP(l, -1) * KP(j, 1) * xb(k, j) * xdp(i, l, 1) * xdp(i, j, m - 1));
    if (l < i && i < k && k < j)
        return swap - qp(-m + 1) * qq * (KP(i, 1) * KP(k, -1) * xdp(k, j, 1) * xb(i, l) * xdp(i, j, m - 1));
    throw std::logic_error("div_pneo: unhandled index pattern");
}

// --- odd-odd, both positive: Xbar_{i,j} Xbar_{k,l}, i<j, k<l ------------------
// (all index patterns; the same-slot square is a separate merge rule)

inline Element ppoo(int i, int j, int k, int l) {
    const Scalar qq = q_minus_qinv();
    Element swap = -(xb(k, l) * xb(i, j));
    if (j < k || l < i) return swap;
    if (i < k && l < j) return swap - qq * (xb(k, j) * xb(i, l) + xdp(k, j, 1) * xdp(i, l, 1));
    if (i == k && j < l) return qp(1) * swap - qp(1) * qq * (xdp(k, j, 1) * xdp(i, l, 1));
    if (i < k && k == j && j < l) return qp(1) * swap + xdp(i, l, 1);
    if (i < k && k < j && j == l) return qp(1) * swap - qq * (xdp(k, j, 1) * xdp(i, l, 1));
    if (i < k && k < j && j < l) return swap - qq * (xdp(k, j, 1) * xdp(i, l, 1));
    if (k < i && j < l) return swap + qq * (xb(k, j) * xb(i, l) - xdp(k, j, 1) * xdp(i, l, 1));
    if (k == i && l < j) return qp(-1) * swap - qp(-1) * qq * (xdp(k, j, 1) * xdp(i, l, 1));
    if (k < i && i == l && l < j) return qp(-1) * swap + qp(-1) * xdp(k, j, 1);
    if (k < i && i < l && l == j) return qp(-1) * swap - qq * (xdp(k, j, 1) * xdp(i, l, 1));
    if (k < i && i < l && l < j) return swap - qq * (xdp(k, j, 1) * xdp(i, l, 1));
    throw std::logic_error("ppoo: unhandled index pattern");
}

// --- odd-odd, positive x negative: Xbar_{i,j} Xbar_{k,l}, i<j, k>l ------------
// (all index patterns)

inline Element pnoo(int i, int j, int k, int l) {
    const Scalar qq = q_minus_qinv();
    Element swap = -(xb(k, l) * xb(i, j));
    if (i == l && j == k)
        return swap + (Scalar(1) / qq) * (KP(i, 1) * KP(j, 1) - KP(i, -1) * KP(j, -1)) +
               qq * (Element(kbar(i)) * Element(kbar(j)));
    if (j <= l || k <= i) return swap;
    if (i < l && k < j)
        return swap -
               qp(1) * qq * (KP(l, -1) * KP(k, -1) * (xb(k, j) * xb(i, l) + xdp(k, j, 1) * xdp(i, l, 1)));
    if (i == l && j < k)
        return swap + qp(-1) * (xdp(k, j, 1) * KP(i, 1) * KP(j, 1)) -
               qp(-1) * qq * (xb(k, j) * Element(kbar(i)) * KP(j, 1));
    if (i < l && j == k)
        return swap - qq * (KP(l, -1) * Element(kbar(j)) * xb(i, l)) +
               KP(l, -1) * KP(j, -1) * xdp(i, l, 1);
    if (i < l && l < j && j < k)
        return swap - qq * (KP(l, -1) * KP(j, 1) * xb(k, j) * xb(i, l));
    if (l < i && j < k)
        return swap +
               qp(-1) * qq * ((xdp(k, j, 1) * xdp(i, l, 1) - xb(k, j) * xb(i, l)) * KP(i, 1) * KP(j, 1));
    if (l == i && k < j)
        return swap - qq * (xb(k, j) * Element(kbar(i)) * KP(k, -1)) +
               xdp(k, j, 1) * KP(i, -1) * KP(k, -1);
    if (l < i && k == j)
        return swap + qp(-1) * (KP(i, 1) * KP(j, 1) * xdp(i, l, 1)) -
               qp(-1) * qq * (KP(i, 1) * Element(kbar(j)) * xb(i, l));
    if (l < i && i < k && k < j)
        return swap - qq * (xb(k, j) * xb(i, l) * KP(i, 1) * KP(k, -1));
    throw std::logic_error("pnoo: unhandled index pattern");
}

// --- root vectors against Kbar: X^(m)_{i,j} Kbar_a, i<j ----------------------

inline Element div_xkbar(int i, int j, int m, int a) {
    const Scalar qq = q_minus_qinv();
    Element swap = Element(kbar(a)) * xdp(i, j, m);
    if (a < i || a > j) return swap;
    if (a == i) return qp(-m) * swap - KP(i, -1) * xb(i, j) * xdp(i, j, m - 1);
    if (a == j) return qp(m) * swap + KP(j, -1) * xb(i, j) * xdp(i, j, m - 1);
    return swap + qp(m) * qq * (xb(a, j) * xdp(i, a, 1) * KP(a, -1) * xdp(i, j, m - 1)) -
           qp(-m + 2) * qq * (xdp(a, j, 1) * xb(i, a) * KP(a, -1) * xdp(i, j, m - 1)) -
           qq * qq * (xdp(a, j, 1) * xb(i, j) * xdp(i, a, 1) * KP(a, -1) * xdp(i, j, m - 2));
}

inline Element xbar_kbar(int i, int j, int a) {
    const Scalar qq = q_minus_qinv();
    Element swap = -(Element(kbar(a)) * xb(i, j));
    if (a < i || a > j) return swap;
    if (a == i) return qp(-1) * swap + qp(-1) * (xdp(i, j, 1) * KP(i, -1));
    if (a == j) return qp(1) * swap + qp(1) * (xdp(i, j, 1) * KP(j, -1));
    return swap - qp(1) * qq * ((xb(a, j) * xb(i, a) + xdp(a, j, 1) * xdp(i, a, 1)) * KP(a, -1));
}

// --- the total product-expansion map -----------------------------------------

Element xprod(const Gen& a, const Gen& b);

// solve the stated identity for b*a to obtain the expansion of a*b
inline Element solve_reversed(const Gen& a, const Gen& b) {
    Element id = xprod(b, a);
    Word w0{a, b};
    auto it = id.terms().find(w0);
    if (it == id.terms().end())
        throw std::logic_error("solve_reversed: reversed identity lacks the product");
    Scalar c0 = it->second;
    Element rest = id;
    rest.add(w0, -c0);
    Element r = Element(Word{b, a}) - rest;
    return Scalar(1) / c0 * r;
}

inline Element omega_route(const Gen& a, const Gen& b) {
    return omega(xprod(omega_gen(b), omega_gen(a)));
}

// expansion of the product a*b as an element, valid for every ordered pair
// of X-alphabet letters except idempotents
inline Element xprod(const Gen& a, const Gen& b) {
    const bool a_ke = a.fam == Fam::KPow || a.fam == Fam::KBr;
    const bool b_ke = b.fam == Fam::KPow || b.fam == Fam::KBr;
    const bool a_root = a.fam == Fam::QX || a.fam == Fam::QXbar;
    const bool b_root = b.fam == Fam::QX || b.fam == Fam::QXbar;

    if (a_ke && b_ke) {
        if (a.i == b.i)
            return detail::expand_cartan(a.i,
                                         detail::z_mul(detail::z_of_letter(a), detail::z_of_letter(b)));
        // distinct indices commute; Cartan letters group by index
        auto rank = [](const Gen& g) { return std::make_pair(g.i, g.fam == Fam::KBr ? 1 : 0); };
        return rank(a) <= rank(b) ? Element(Word{a, b}) : Element(Word{b, a});
    }
    if (a_ke && b.fam == Fam::KBar) return Element(Word{a, b});
    if (a.fam == Fam::KBar && b_ke) return Element(Word{b, a});
    if (a.fam == Fam::KBar && b.fam == Fam::KBar) {
        if (a.i == b.i) {
            const Scalar d = Scalar::q(2) - Scalar::q(-2);
            return detail::expand_cartan(a.i, {{2, Scalar(1) / d}, {-2, -Scalar(1) / d}});
        }
        return -Element(Word{b, a});
    }

    if (a_root && b_ke) {
        int m = a.fam == Fam::QX ? a.s : 1;
        int c = RootDatum::pairing(b.i, a.i, a.j);
        if (b.fam == Fam::KPow) return qp(-m * c * b.s) * Element(Word{b, a});
        return Element(Word{kbr(b.i, b.c - m * c, b.s), a});
    }
    if (a_ke && b_root) {
        int m = b.fam == Fam::QX ? b.s : 1;
        int c = RootDatum::pairing(a.i, b.i, b.j);
        if (a.fam == Fam::KPow) return qp(m * c * a.s) * Element(Word{b, a});
        return Element(Word{b, kbr(a.i, a.c + m * c, a.s)});
    }

    if (a_root && b.fam == Fam::KBar) {
        if (a.i < a.j)
            return a.fam == Fam::QX ? div_xkbar(a.i, a.j, a.s, b.i) : xbar_kbar(a.i, a.j, b.i);
        return omega_route(a, b);
    }
    if (a.fam == Fam::KBar && b_root) {
        if (b.i < b.j) return solve_reversed(a, b);
        return omega_route(a, b);
    }

    if (a_root && b_root) {
        const bool aE = a.i < a.j, bE = b.i < b.j;
        const bool a_even = a.fam == Fam::QX, b_even = b.fam == Fam::QX;
        const int i = a.i, j = a.j, m = a_even ? a.s : 1;
        const int k = b.i, l = b.j, s = b_even ? b.s : 1;
        if (aE && bE) {
            if (a_even && b_even) {
                if (auto r = div_ppee_f1(i, j, m, k, l, s)) return *r;
                return solve_reversed(a, b);
            }
            if (a_even && !b_even) return div_ppeo(i, j, m, k, l);
            if (!a_even && b_even) return solve_reversed(a, b);
            return ppoo(i, j, k, l);
        }
        if (aE && !bE) {
            if (a_even && b_even) {
                if (auto r = div_pnee_f1(i, j, m, k, l, s)) return *r;
                return omega_route(a, b);
            }
            if (a_even && !b_even) return div_pneo(i, j, m, k, l);
            if (!a_even && b_even) return omega_route(a, b);
            return pnoo(i, j, k, l);
        }
        if (!aE && bE) {
            // F x E products are only requested through the solving paths of
            // the E x F cases; derive them by Omega from E x F
            return omega_route(a, b);
        }
        return omega_route(a, b);  // F x F
    }
    throw std::invalid_argument("xprod: unsupported letter pair");
}

}  // namespace xrules

// --- the Lusztig-form straightening system -------------------------------------

inline RewriteSystem make_lusztig_system(int n, int r = -1) {
    if (n < 1) throw std::invalid_argument("lusztig system: rank must be >= 1");
    const bool quotient = r >= 0;
    XOrder ord{n};
    RewriteSystem sys;
    sys.name = quotient ? "qschur(" + std::to_string(n) + "," + std::to_string(r) + ")"
                        : "lusztig(" + std::to_string(n) + ")";
    sys.klass = [ord](const Gen& g) { return ord.klass(g); };
    sys.degree = [](const Gen& g) { return XOrder::degree(g); };
    sys.multiplicity = [](const Gen& g) { return XOrder::multiplicity(g); };

    std::vector<Composition> lambdas = quotient ? compositions(n, r) : std::vector<Composition>{};

    if (!quotient) {
        sys.unit_rule = [](const Gen& g) -> std::optional<Element> {
            if (g.fam == Fam::KPow && (g.s < 0 || g.s > 1))
                return detail::expand_cartan(g.i, {{g.s, Scalar(1)}});
            if (g.fam == Fam::KBr && g.c != 0)
                return detail::expand_cartan(g.i, detail::z_bracket(g.c, g.s));
            return std::nullopt;
        };
    } else {
        sys.word_rule = [lambdas](const Word& w) -> std::optional<Element> {
            for (const auto& g : w)
                if (g.fam == Fam::QIdem) return std::nullopt;
            Element out;
            for (const auto& lam : lambdas) {
                Word ext = w;
                ext.push_back(qidem(lam));
                out.add(std::move(ext), Scalar(1));
            }
            return out;
        };
    }

    sys.pair_rule = [ord, quotient, r](const Gen& a, const Gen& b) -> std::optional<Element> {
        const bool a_root = a.fam == Fam::QX || a.fam == Fam::QXbar;
        const bool b_root = b.fam == Fam::QX || b.fam == Fam::QXbar;

        // idempotent calculus of the quantum Schur quotient
        if (a.fam == Fam::QIdem || b.fam == Fam::QIdem) {
            if (!quotient) throw std::invalid_argument("lusztig system: unexpected idempotent");
            if (a.fam == Fam::QIdem && b.fam == Fam::QIdem)
                return a.lam == b.lam ? Element(Word{a}) : Element::zero();
            if (a.fam == Fam::QIdem && (b.fam == Fam::KPow || b.fam == Fam::KBr)) {
                long li = a.lam[static_cast<size_t>(b.i - 1)];
                Scalar c = b.fam == Fam::KPow ? Scalar::q(static_cast<int>(li) * b.s)
                                              : bracket_eval(li, b.c, b.s);
                return c * Element(Word{a});
            }
            if ((a.fam == Fam::KPow || a.fam == Fam::KBr) && b.fam == Fam::QIdem) {
                long li = b.lam[static_cast<size_t>(a.i - 1)];
                Scalar c = a.fam == Fam::KPow ? Scalar::q(static_cast<int>(li) * a.s)
                                              : bracket_eval(li, a.c, a.s);
                return c * Element(Word{b});
            }
            if (a.fam == Fam::KBar && b.fam == Fam::QIdem) {
                if (b.lam[static_cast<size_t>(a.i - 1)] == 0) return Element::zero();
                return Element(Word{b, a});
            }
            if (a.fam == Fam::QIdem && b.fam == Fam::KBar) {
                if (a.lam[static_cast<size_t>(b.i - 1)] == 0) return Element::zero();
                return std::nullopt;
            }
            const int ca = ord.klass(a), cb = ord.klass(b);
            if (a_root && b.fam == Fam::QIdem && ca > cb) {
                int m = a.fam == Fam::QX ? a.s : 1;
                Composition lam = RootDatum::add_root(b.lam, a.i, a.j, m);
                if (!in_lambda_nr(lam, r)) return Element::zero();
                return Element(Word{qidem(lam), a});
            }
            if (a.fam == Fam::QIdem && b_root && ca > cb) {
                int m = b.fam == Fam::QX ? b.s : 1;
                Composition lam = RootDatum::add_root(a.lam, b.i, b.j, -m);
                if (!in_lambda_nr(lam, r)) return Element::zero();
                return Element(Word{b, qidem(lam)});
            }
            return std::nullopt;
        }

        const int ca = ord.klass(a), cb = ord.klass(b);

        // same-slot merges
        if (ca == cb) {
            if (a.fam == Fam::QX && b.fam == Fam::QX)
                return qbinom(a.s + b.s, a.s) * Element(Word{qx(a.i, a.j, a.s + b.s)});
            if (a.fam == Fam::QXbar && b.fam == Fam::QXbar) {
                // odd squares against the even divided square
                Scalar c = q_minus_qinv();
                if (a.i < a.j) c = -c;
                return c * Element(Word{qx(a.i, a.j, 2)});
            }
            if (a.fam == Fam::KPow && b.fam == Fam::KPow) {
                // same index: merge exponents; expansion is a unit rule
                int e = a.s + b.s;
                if (e == 0) return Element::one();
                return Element(Word{kpow(a.i, e)});
            }
            if (a.fam == Fam::KBr && b.fam == Fam::KBr) return xrules::xprod(a, b);
            if (a.fam == Fam::KBar && b.fam == Fam::KBar) return xrules::xprod(a, b);
            return std::nullopt;
        }
        if (ca < cb) {
            // the only in-order reducible pairs are same-index Cartan pairs
            // that are not the canonical K [K; b] combination
            if (a.fam == Fam::KPow && b.fam == Fam::KBr && a.i == b.i &&
                !(a.s == 1 && b.c == 0))
                return xrules::xprod(a, b);
            return std::nullopt;
        }
        if (a.fam == Fam::KBr && b.fam == Fam::KPow && a.i == b.i) return xrules::xprod(a, b);
        if (a.fam == Fam::QXbar && b.fam == Fam::QX && a.i == b.i && a.j == b.j)
            return Element(Word{b, a});  // same slot, odd past even
        return xrules::xprod(a, b);
    };
    return sys;
}

inline RewriteSystem lusztig_rules(int n) { return make_lusztig_system(n); }
inline RewriteSystem quantum_schur_rules(int n, int r) { return make_lusztig_system(n, r); }

// --- integral basis of the quantum Schur quotient -------------------------------

struct QuantumBasisElement {
    SuperMatrix A;
    Composition lambda;
    Element u;
};

inline std::vector<QuantumBasisElement> quantum_schur_basis(int n, int r) {
    std::vector<QuantumBasisElement> out;
    for (const auto& A : super_matrices(n, r)) {
        Word w;
        for (int j = 1; j <= n - 1; ++j)
            for (int k = n; k >= j + 1; --k) {
                if (A.e0(k, j) > 0) w.push_back(qx(k, j, A.e0(k, j)));
                if (A.e1(k, j)) w.push_back(qxbar(k, j));
            }
        Composition lam = A.chi();
        w.push_back(qidem(lam));
        for (int i = 1; i <= n; ++i)
            if (A.e1(i, i)) w.push_back(kbar(i));
        for (int j = n - 1; j >= 1; --j)
            for (int k = j + 1; k <= n; ++k) {
                if (A.e0(j, k) > 0) w.push_back(qx(j, k, A.e0(j, k)));
                if (A.e1(j, k)) w.push_back(qxbar(j, k));
            }
        out.push_back({A, lam, Element(std::move(w))});
    }
    return out;
}

}  // namespace qk

#endif  // QUEERKIT_QUANTUM_XRULES_HPP
