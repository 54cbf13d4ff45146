#ifndef QUEERKIT_PRESENTATIONS_HPP
#define QUEERKIT_PRESENTATIONS_HPP

// Defining relations of U(q(n)), U_q(q(n)) and their Schur quotients, each
// encoded as an element that must normalize (or act) to zero.

#include <string>
#include <utility>
#include <vector>

#include "classical.hpp"
#include "quantum.hpp"

namespace qk {

using NamedRelation = std::pair<std::string, Element>;

// --- classical presentation ------------------------------------------------

inline std::vector<NamedRelation> qs_relations(int n) {
    std::vector<NamedRelation> rel;
    auto tag = [](std::string base, std::initializer_list<int> idx) {
        for (int v : idx) base += "_" + std::to_string(v);
        return base;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            rel.push_back({tag("QS1/hh", {i, j}), super_commutator(ch(i), ch(j))});
            rel.push_back({tag("QS1/hhb", {i, j}), super_commutator(ch(i), chb(j))});
            Element d = super_commutator(chb(i), chb(j));
            if (i == j) d -= Scalar(2) * ch(i);
            rel.push_back({tag("QS1/hbhb", {i, j}), d});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            int c = RootDatum::pairing(i, j, j + 1);
            rel.push_back({tag("QS2/he", {i, j}), super_commutator(ch(i), ce(j)) - Scalar(c) * ce(j)});
            rel.push_back({tag("QS2/heb", {i, j}), super_commutator(ch(i), ceb(j)) - Scalar(c) * ceb(j)});
            rel.push_back({tag("QS2/hf", {i, j}), super_commutator(ch(i), cf(j)) + Scalar(c) * cf(j)});
            rel.push_back({tag("QS2/hfb", {i, j}), super_commutator(ch(i), cfb(j)) + Scalar(c) * cfb(j)});
            rel.push_back({tag("QS3/hbe", {i, j}), super_commutator(chb(i), ce(j)) - Scalar(c) * ceb(j)});
            rel.push_back({tag("QS3/hbf", {i, j}), super_commutator(chb(i), cf(j)) + Scalar(c) * cfb(j)});
            Element ebar = super_commutator(chb(i), ceb(j));
            if (i == j || i == j + 1) ebar -= ce(j);
            rel.push_back({tag("QS3/hbeb", {i, j}), ebar});
            Element fbar = super_commutator(chb(i), cfb(j));
            if (i == j || i == j + 1) fbar -= cf(j);
            rel.push_back({tag("QS3/hbfb", {i, j}), fbar});
        }
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            Element ef = super_commutator(ce(i), cf(j));
            if (i == j) ef -= ch(i) - ch(i + 1);
            rel.push_back({tag("QS4/ef", {i, j}), ef});
            Element ebfb = super_commutator(ceb(i), cfb(j));
            if (i == j) ebfb -= ch(i) + ch(i + 1);
            rel.push_back({tag("QS4/ebfb", {i, j}), ebfb});
            Element ebf = super_commutator(ceb(i), cf(j));
            if (i == j) ebf -= chb(i) - chb(i + 1);
            rel.push_back({tag("QS4/ebf", {i, j}), ebf});
            Element efb = super_commutator(ce(i), cfb(j));
            if (i == j) efb -= chb(i) - chb(i + 1);
            rel.push_back({tag("QS4/efb", {i, j}), efb});
            if (std::abs(i - j) != 1) {
                rel.push_back({tag("QS5/eeb", {i, j}), super_commutator(ce(i), ceb(j))});
                rel.push_back({tag("QS5/ebeb", {i, j}), super_commutator(ceb(i), ceb(j))});
                rel.push_back({tag("QS5/ffb", {i, j}), super_commutator(cf(i), cfb(j))});
                rel.push_back({tag("QS5/fbfb", {i, j}), super_commutator(cfb(i), cfb(j))});
            }
            if (std::abs(i - j) > 1) {
                rel.push_back({tag("QS5/ee", {i, j}), super_commutator(ce(i), ce(j))});
                rel.push_back({tag("QS5/ff", {i, j}), super_commutator(cf(i), cf(j))});
            }
            if (std::abs(i - j) == 1) {
                rel.push_back({tag("QS6/eee", {i, j}),
                               super_commutator(ce(i), super_commutator(ce(i), ce(j)))});
                rel.push_back({tag("QS6/ebee", {i, j}),
                               super_commutator(ceb(i), super_commutator(ce(i), ce(j)))});
                rel.push_back({tag("QS6/fff", {i, j}),
                               super_commutator(cf(i), super_commutator(cf(i), cf(j)))});
                rel.push_back({tag("QS6/fbff", {i, j}),
                               super_commutator(cfb(i), super_commutator(cf(i), cf(j)))});
            }
        }
    for (int i = 1; i + 2 <= n; ++i) {
        rel.push_back({tag("QS5/serre-mix-e1", {i}),
                       super_commutator(ce(i), ce(i + 1)) - super_commutator(ceb(i), ceb(i + 1))});
        rel.push_back({tag("QS5/serre-mix-e2", {i}),
                       super_commutator(ce(i), ceb(i + 1)) - super_commutator(ceb(i), ce(i + 1))});
        rel.push_back({tag("QS5/serre-mix-f1", {i}),
                       super_commutator(cf(i + 1), cf(i)) - super_commutator(cfb(i + 1), cfb(i))});
        rel.push_back({tag("QS5/serre-mix-f2", {i}),
                       super_commutator(cf(i + 1), cfb(i)) - super_commutator(cfb(i + 1), cf(i))});
    }
    return rel;
}

// the extra relations of the Schur quotient
inline std::vector<NamedRelation> qs_quotient_relations(int n, int r) {
    std::vector<NamedRelation> rel;
    Element sum;
    for (int i = 1; i <= n; ++i) sum += ch(i);
    rel.push_back({"QS7", sum - Scalar(r) * Element::one()});
    for (int i = 1; i <= n; ++i) {
        Element e = chb(i);
        for (int k = 1; k <= r; ++k) e = multiply(e, ch(i) - Scalar(k) * Element::one());
        rel.push_back({"QS8_" + std::to_string(i), e});
    }
    return rel;
}

// the idempotent presentation QS1'-QS4'
inline std::vector<NamedRelation> qs_prime_relations(int n, int r) {
    std::vector<NamedRelation> rel;
    auto lambdas = compositions(n, r);
    auto idem = [](const Composition& lam) { return Element(cidem(lam)); };
    Element sum;
    for (const auto& lam : lambdas) sum += idem(lam);
    rel.push_back({"QS1'/resolution", sum - Element::one()});
    for (size_t x = 0; x < lambdas.size(); ++x)
        for (size_t y = 0; y < lambdas.size(); ++y) {
            Element d = multiply(idem(lambdas[x]), idem(lambdas[y]));
            if (x == y) d -= idem(lambdas[x]);
            rel.push_back({"QS1'/orth_" + std::to_string(x) + "_" + std::to_string(y), d});
        }
    for (int i = 1; i <= n; ++i) {
        for (const auto& lam : lambdas) {
            rel.push_back({"QS1'/hbcomm_" + std::to_string(i),
                           multiply(chb(i), idem(lam)) - multiply(idem(lam), chb(i))});
            if (lam[static_cast<size_t>(i - 1)] == 0)
                rel.push_back({"QS1'/hbkill_" + std::to_string(i), multiply(chb(i), idem(lam))});
        }
        for (int j = 1; j <= n; ++j) {
            Element d = super_commutator(chb(i), chb(j));
            if (i == j)
                for (const auto& lam : lambdas)
                    d -= Scalar(2 * lam[static_cast<size_t>(i - 1)]) * idem(lam);
            rel.push_back({"QS1'/hbhb_" + std::to_string(i) + "_" + std::to_string(j), d});
        }
    }
    auto exchange = [&](const std::string& name, const Element& g, int i, int j, int dir) {
        // g 1_lam = 1_{lam + dir*alpha_j} g (or 0), and 1_lam g analogously
        for (const auto& lam : lambdas) {
            Composition up = RootDatum::add_root(lam, i, j, dir);
            Element lhs = multiply(g, idem(lam));
            if (in_lambda_nr(up, r)) lhs -= multiply(idem(up), g);
            rel.push_back({name + "/right", lhs});
            Composition dn = RootDatum::add_root(lam, i, j, -dir);
            Element lhs2 = multiply(idem(lam), g);
            if (in_lambda_nr(dn, r)) lhs2 -= multiply(g, idem(dn));
            rel.push_back({name + "/left", lhs2});
        }
    };
    for (int j = 1; j + 1 <= n; ++j) {
        exchange("QS2'/e_" + std::to_string(j), ce(j), j, j + 1, 1);
        exchange("QS2'/eb_" + std::to_string(j), ceb(j), j, j + 1, 1);
        exchange("QS2'/f_" + std::to_string(j), cf(j), j, j + 1, -1);
        exchange("QS2'/fb_" + std::to_string(j), cfb(j), j, j + 1, -1);
        for (int i = 1; i + 1 <= n; ++i) {
            Element ef = super_commutator(ce(i), cf(j));
            Element ebfb = super_commutator(ceb(i), cfb(j));
            if (i == j)
                for (const auto& lam : lambdas) {
                    ef -= Scalar(lam[static_cast<size_t>(i - 1)] - lam[static_cast<size_t>(i)]) *
                          idem(lam);
                    ebfb -= Scalar(lam[static_cast<size_t>(i - 1)] + lam[static_cast<size_t>(i)]) *
                            idem(lam);
                }
            rel.push_back({"QS4'/ef_" + std::to_string(i) + "_" + std::to_string(j), ef});
            rel.push_back({"QS4'/ebfb_" + std::to_string(i) + "_" + std::to_string(j), ebfb});
            Element ebf = super_commutator(ceb(i), cf(j));
            Element efb = super_commutator(ce(i), cfb(j));
            if (i == j) {
                ebf -= chb(i) - chb(i + 1);
                efb -= chb(i) - chb(i + 1);
            }
            rel.push_back({"QS4'/ebf_" + std::to_string(i) + "_" + std::to_string(j), ebf});
            rel.push_back({"QS4'/efb_" + std::to_string(i) + "_" + std::to_string(j), efb});
        }
    }
    return rel;
}

// --- quantum presentation ----------------------------------------------------

inline std::vector<NamedRelation> qq_relations(int n) {
    std::vector<NamedRelation> rel;
    const Scalar qq = q_minus_qinv();
    auto tag = [](std::string base, std::initializer_list<int> idx) {
        for (int v : idx) base += "_" + std::to_string(v);
        return base;
    };
    // QQ1
    for (int i = 1; i <= n; ++i) {
        rel.push_back({tag("QQ1/kkinv", {i}), multiply(qK(i, 1), qK(i, -1)) - Element::one()});
        for (int j = 1; j <= n; ++j) {
            rel.push_back({tag("QQ1/kk", {i, j}), multiply(qK(i), qK(j)) - multiply(qK(j), qK(i))});
            rel.push_back(
                {tag("QQ1/kkb", {i, j}), multiply(qK(i), qKb(j)) - multiply(qKb(j), qK(i))});
            Element d = multiply(qKb(i), qKb(j)) + multiply(qKb(j), qKb(i));
            if (i == j)
                d -= Scalar(2) * ((qK(i, 2) - qK(i, -2)) * (Scalar(1) / (Scalar::q(2) - Scalar::q(-2))));
            rel.push_back({tag("QQ1/kbkb", {i, j}), d});
        }
    }
    // QQ2
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            int c = RootDatum::pairing(i, j, j + 1);
            rel.push_back({tag("QQ2/ke", {i, j}),
                           multiply(qK(i), qE(j)) - Scalar::q(c) * multiply(qE(j), qK(i))});
            rel.push_back({tag("QQ2/keb", {i, j}),
                           multiply(qK(i), qEb(j)) - Scalar::q(c) * multiply(qEb(j), qK(i))});
            rel.push_back({tag("QQ2/kf", {i, j}),
                           multiply(qK(i), qF(j)) - Scalar::q(-c) * multiply(qF(j), qK(i))});
            rel.push_back({tag("QQ2/kfb", {i, j}),
                           multiply(qK(i), qFb(j)) - Scalar::q(-c) * multiply(qFb(j), qK(i))});
        }
    // QQ3
    for (int i = 1; i <= n; ++i) {
        if (i <= n - 1) {
            rel.push_back({tag("QQ3/kbe", {i}),
                           multiply(qKb(i), qE(i)) - Scalar::q(1) * multiply(qE(i), qKb(i)) -
                               multiply(qEb(i), qK(i, -1))});
            rel.push_back({tag("QQ3/kbf", {i}),
                           multiply(qKb(i), qF(i)) - Scalar::q(1) * multiply(qF(i), qKb(i)) +
                               multiply(qFb(i), qK(i, 1))});
            rel.push_back({tag("QQ3/kbeb", {i}),
                           multiply(qKb(i), qEb(i)) + Scalar::q(1) * multiply(qEb(i), qKb(i)) -
                               multiply(qE(i), qK(i, -1))});
            rel.push_back({tag("QQ3/kbfb", {i}),
                           multiply(qKb(i), qFb(i)) + Scalar::q(1) * multiply(qFb(i), qKb(i)) -
                               multiply(qF(i), qK(i, 1))});
        }
        if (i >= 2) {
            rel.push_back({tag("QQ3/kbe-", {i}),
                           Scalar::q(1) * multiply(qKb(i), qE(i - 1)) - multiply(qE(i - 1), qKb(i)) +
                               multiply(qK(i, -1), qEb(i - 1))});
            rel.push_back({tag("QQ3/kbf-", {i}),
                           Scalar::q(1) * multiply(qKb(i), qF(i - 1)) - multiply(qF(i - 1), qKb(i)) -
                               multiply(qK(i, 1), qFb(i - 1))});
            rel.push_back({tag("QQ3/kbeb-", {i}),
                           Scalar::q(1) * multiply(qKb(i), qEb(i - 1)) + multiply(qEb(i - 1), qKb(i)) -
                               multiply(qK(i, -1), qE(i - 1))});
            rel.push_back({tag("QQ3/kbfb-", {i}),
                           Scalar::q(1) * multiply(qKb(i), qFb(i - 1)) + multiply(qFb(i - 1), qKb(i)) -
                               multiply(qK(i, 1), qF(i - 1))});
        }
        for (int j = 1; j + 1 <= n; ++j) {
            if (j == i || j == i - 1) continue;
            rel.push_back({tag("QQ3/kbe0", {i, j}), super_commutator(qKb(i), qE(j))});
            rel.push_back({tag("QQ3/kbf0", {i, j}), super_commutator(qKb(i), qF(j))});
            rel.push_back({tag("QQ3/kbeb0", {i, j}), super_commutator(qKb(i), qEb(j))});
            rel.push_back({tag("QQ3/kbfb0", {i, j}), super_commutator(qKb(i), qFb(j))});
        }
    }
    // QQ4
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            Element ef = multiply(qE(i), qF(j)) - multiply(qF(j), qE(i));
            if (i == j)
                ef -= (multiply(qK(i, 1), qK(i + 1, -1)) - multiply(qK(i, -1), qK(i + 1, 1))) *
                      (Scalar(1) / qq);
            rel.push_back({tag("QQ4/ef", {i, j}), ef});
            Element ebfb = multiply(qEb(i), qFb(j)) + multiply(qFb(j), qEb(i));
            if (i == j)
                ebfb -= (multiply(qK(i, 1), qK(i + 1, 1)) - multiply(qK(i, -1), qK(i + 1, -1))) *
                            (Scalar(1) / qq) +
                        qq * multiply(qKb(i), qKb(i + 1));
            rel.push_back({tag("QQ4/ebfb", {i, j}), ebfb});
            Element efb = multiply(qE(i), qFb(j)) - multiply(qFb(j), qE(i));
            if (i == j)
                efb -= multiply(qK(i + 1, -1), qKb(i)) - multiply(qKb(i + 1), qK(i, -1));
            rel.push_back({tag("QQ4/efb", {i, j}), efb});
            Element ebf = multiply(qEb(i), qF(j)) - multiply(qF(j), qEb(i));
            if (i == j) ebf -= multiply(qK(i + 1, 1), qKb(i)) - multiply(qKb(i + 1), qK(i, 1));
            rel.push_back({tag("QQ4/ebf", {i, j}), ebf});
        }
    // QQ5
    for (int i = 1; i + 1 <= n; ++i) {
        rel.push_back({tag("QQ5/ebsq", {i}),
                       multiply(qEb(i), qEb(i)) + (qq / (Scalar::q(1) + Scalar::q(-1))) * multiply(qE(i), qE(i))});
        rel.push_back({tag("QQ5/fbsq", {i}),
                       multiply(qFb(i), qFb(i)) - (qq / (Scalar::q(1) + Scalar::q(-1))) * multiply(qF(i), qF(i))});
        for (int j = 1; j + 1 <= n; ++j) {
            if (std::abs(i - j) != 1) {
                rel.push_back({tag("QQ5/eeb", {i, j}),
                               multiply(qE(i), qEb(j)) - multiply(qEb(j), qE(i))});
                rel.push_back({tag("QQ5/ffb", {i, j}),
                               multiply(qF(i), qFb(j)) - multiply(qFb(j), qF(i))});
            }
            if (std::abs(i - j) > 1) {
                rel.push_back({tag("QQ5/ee", {i, j}), multiply(qE(i), qE(j)) - multiply(qE(j), qE(i))});
                rel.push_back({tag("QQ5/ff", {i, j}), multiply(qF(i), qF(j)) - multiply(qF(j), qF(i))});
                rel.push_back({tag("QQ5/ebeb", {i, j}),
                               multiply(qEb(i), qEb(j)) + multiply(qEb(j), qEb(i))});
                rel.push_back({tag("QQ5/fbfb", {i, j}),
                               multiply(qFb(i), qFb(j)) + multiply(qFb(j), qFb(i))});
            }
        }
        if (i + 2 <= n) {
            rel.push_back({tag("QQ5/mix-e1", {i}),
                           multiply(qE(i), qE(i + 1)) - Scalar::q(1) * multiply(qE(i + 1), qE(i)) -
                               multiply(qEb(i), qEb(i + 1)) - Scalar::q(1) * multiply(qEb(i + 1), qEb(i))});
            rel.push_back({tag("QQ5/mix-e2", {i}),
                           multiply(qE(i), qEb(i + 1)) - Scalar::q(1) * multiply(qEb(i + 1), qE(i)) -
                               multiply(qEb(i), qE(i + 1)) + Scalar::q(1) * multiply(qE(i + 1), qEb(i))});
            rel.push_back({tag("QQ5/mix-f1", {i}),
                           Scalar::q(1) * multiply(qF(i + 1), qF(i)) - multiply(qF(i), qF(i + 1)) -
                               Scalar::q(1) * multiply(qFb(i + 1), qFb(i)) - multiply(qFb(i), qFb(i + 1))});
            rel.push_back({tag("QQ5/mix-f2", {i}),
                           Scalar::q(1) * multiply(qFb(i + 1), qF(i)) - multiply(qF(i), qFb(i + 1)) -
                               Scalar::q(1) * multiply(qF(i + 1), qFb(i)) + multiply(qFb(i), qF(i + 1))});
        }
    }
    // QQ6
    const Scalar gauss2 = Scalar::q(1) + Scalar::q(-1);
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j)
            if (std::abs(i - j) == 1) {
                auto serre = [&](const Element& x, const Element& y) {
                    return multiply(multiply(x, x), y) - gauss2 * multiply(multiply(x, y), x) +
                           multiply(y, multiply(x, x));
                };
                rel.push_back({tag("QQ6/eee", {i, j}), serre(qE(i), qE(j))});
                rel.push_back({tag("QQ6/fff", {i, j}), serre(qF(i), qF(j))});
                rel.push_back({tag("QQ6/eeb", {i, j}), serre(qE(i), qEb(j))});
                rel.push_back({tag("QQ6/ffb", {i, j}), serre(qF(i), qFb(j))});
            }
    return rel;
}

// QQ7-QQ9, generators of the quantum Schur ideal
inline std::vector<NamedRelation> qq_quotient_relations(int n, int r) {
    std::vector<NamedRelation> rel;
    Element prod = Element::one();
    for (int i = 1; i <= n; ++i) prod = multiply(prod, qK(i));
    rel.push_back({"QQ7", prod - Scalar::q(r) * Element::one()});
    for (int i = 1; i <= n; ++i) {
        Element e = Element::one();
        for (int k = 0; k <= r; ++k) e = multiply(e, qK(i) - Scalar::q(k) * Element::one());
        rel.push_back({"QQ8_" + std::to_string(i), e});
        Element eb = qKb(i);
        for (int k = 1; k <= r; ++k) eb = multiply(eb, qK(i) - Scalar::q(k) * Element::one());
        rel.push_back({"QQ9_" + std::to_string(i), eb});
    }
    return rel;
}

// the idempotent presentation QQ1'-QQ4'
inline std::vector<NamedRelation> qq_prime_relations(int n, int r) {
    std::vector<NamedRelation> rel;
    auto lambdas = compositions(n, r);
    auto idem = [](const Composition& lam) { return Element(qidem(lam)); };
    auto li = [](const Composition& lam, int i) { return lam[static_cast<size_t>(i - 1)]; };
    Element sum;
    for (const auto& lam : lambdas) sum += idem(lam);
    rel.push_back({"QQ1'/resolution", sum - Element::one()});
    for (size_t x = 0; x < lambdas.size(); ++x)
        for (size_t y = 0; y < lambdas.size(); ++y) {
            Element d = multiply(idem(lambdas[x]), idem(lambdas[y]));
            if (x == y) d -= idem(lambdas[x]);
            rel.push_back({"QQ1'/orth_" + std::to_string(x) + "_" + std::to_string(y), d});
        }
    for (int i = 1; i <= n; ++i) {
        for (const auto& lam : lambdas) {
            rel.push_back({"QQ1'/kbcomm_" + std::to_string(i),
                           multiply(qKb(i), idem(lam)) - multiply(idem(lam), qKb(i))});
            if (li(lam, i) == 0)
                rel.push_back({"QQ1'/kbkill_" + std::to_string(i), multiply(qKb(i), idem(lam))});
        }
        for (int j = 1; j <= n; ++j) {
            Element d = multiply(qKb(i), qKb(j)) + multiply(qKb(j), qKb(i));
            if (i == j)
                for (const auto& lam : lambdas)
                    d -= (Scalar(2) * (Scalar::q(2 * li(lam, i)) - Scalar::q(-2 * li(lam, i))) /
                          (Scalar::q(2) - Scalar::q(-2))) *
                         idem(lam);
            rel.push_back({"QQ1'/kbkb_" + std::to_string(i) + "_" + std::to_string(j), d});
        }
    }
    auto exchange = [&](const std::string& name, const Element& g, int i, int j, int dir) {
        for (const auto& lam : lambdas) {
            Composition up = RootDatum::add_root(lam, i, j, dir);
            Element lhs = multiply(g, idem(lam));
            if (in_lambda_nr(up, r)) lhs -= multiply(idem(up), g);
            rel.push_back({name + "/right", lhs});
            Composition dn = RootDatum::add_root(lam, i, j, -dir);
            Element lhs2 = multiply(idem(lam), g);
            if (in_lambda_nr(dn, r)) lhs2 -= multiply(g, idem(dn));
            rel.push_back({name + "/left", lhs2});
        }
    };
    for (int j = 1; j + 1 <= n; ++j) {
        exchange("QQ2'/E_" + std::to_string(j), qE(j), j, j + 1, 1);
        exchange("QQ2'/Eb_" + std::to_string(j), qEb(j), j, j + 1, 1);
        exchange("QQ2'/F_" + std::to_string(j), qF(j), j, j + 1, -1);
        exchange("QQ2'/Fb_" + std::to_string(j), qFb(j), j, j + 1, -1);
    }
    // QQ3'
    for (int i = 1; i <= n; ++i) {
        if (i <= n - 1) {
            Element r1 = multiply(qKb(i), qE(i)) - Scalar::q(1) * multiply(qE(i), qKb(i));
            Element r3 = multiply(qKb(i), qF(i)) - Scalar::q(1) * multiply(qF(i), qKb(i));
            Element r5 = multiply(qKb(i), qEb(i)) + Scalar::q(1) * multiply(qEb(i), qKb(i));
            Element r7 = multiply(qKb(i), qFb(i)) + Scalar::q(1) * multiply(qFb(i), qKb(i));
            for (const auto& lam : lambdas) {
                r1 -= Scalar::q(-li(lam, i)) * multiply(qEb(i), idem(lam));
                r3 += Scalar::q(li(lam, i)) * multiply(qFb(i), idem(lam));
                r5 -= Scalar::q(-li(lam, i)) * multiply(qE(i), idem(lam));
                r7 -= Scalar::q(li(lam, i)) * multiply(qF(i), idem(lam));
            }
            rel.push_back({"QQ3'/kbe_" + std::to_string(i), r1});
            rel.push_back({"QQ3'/kbf_" + std::to_string(i), r3});
            rel.push_back({"QQ3'/kbeb_" + std::to_string(i), r5});
            rel.push_back({"QQ3'/kbfb_" + std::to_string(i), r7});
        }
        if (i >= 2) {
            Element r2 = Scalar::q(1) * multiply(qKb(i), qE(i - 1)) - multiply(qE(i - 1), qKb(i));
            Element r4 = Scalar::q(1) * multiply(qKb(i), qF(i - 1)) - multiply(qF(i - 1), qKb(i));
            Element r6 = Scalar::q(1) * multiply(qKb(i), qEb(i - 1)) + multiply(qEb(i - 1), qKb(i));
            Element r8 = Scalar::q(1) * multiply(qKb(i), qFb(i - 1)) + multiply(qFb(i - 1), qKb(i));
            for (const auto& lam : lambdas) {
                r2 += Scalar::q(-li(lam, i)) * multiply(idem(lam), qEb(i - 1));
                r4 -= Scalar::q(li(lam, i)) * multiply(idem(lam), qFb(i - 1));
                r6 -= Scalar::q(-li(lam, i)) * multiply(idem(lam), qE(i - 1));
                r8 -= Scalar::q(li(lam, i)) * multiply(idem(lam), qF(i - 1));
            }
            rel.push_back({"QQ3'/kbe-_" + std::to_string(i), r2});
            rel.push_back({"QQ3'/kbf-_" + std::to_string(i), r4});
            rel.push_back({"QQ3'/kbeb-_" + std::to_string(i), r6});
            rel.push_back({"QQ3'/kbfb-_" + std::to_string(i), r8});
        }
    }
    // QQ4'
    const Scalar qq = q_minus_qinv();
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            Element ef = multiply(qE(i), qF(j)) - multiply(qF(j), qE(i));
            Element ebfb = multiply(qEb(i), qFb(j)) + multiply(qFb(j), qEb(i));
            Element efb = multiply(qE(i), qFb(j)) - multiply(qFb(j), qE(i));
            Element ebf = multiply(qEb(i), qF(j)) - multiply(qF(j), qEb(i));
            if (i == j) {
                ebfb -= qq * multiply(qKb(i), qKb(i + 1));
                for (const auto& lam : lambdas) {
                    ef -= qint_value(li(lam, i) - li(lam, i + 1)) * idem(lam);
                    ebfb -= qint_value(li(lam, i) + li(lam, i + 1)) * idem(lam);
                    efb -= multiply(Scalar::q(-li(lam, i + 1)) * qKb(i) -
                                        Scalar::q(-li(lam, i)) * qKb(i + 1),
                                    idem(lam));
                    ebf -= multiply(Scalar::q(li(lam, i + 1)) * qKb(i) -
                                        Scalar::q(li(lam, i)) * qKb(i + 1),
                                    idem(lam));
                }
            }
            rel.push_back({"QQ4'/ef_" + std::to_string(i) + "_" + std::to_string(j), ef});
            rel.push_back({"QQ4'/ebfb_" + std::to_string(i) + "_" + std::to_string(j), ebfb});
            rel.push_back({"QQ4'/efb_" + std::to_string(i) + "_" + std::to_string(j), efb});
            rel.push_back({"QQ4'/ebf_" + std::to_string(i) + "_" + std::to_string(j), ebf});
        }
    return rel;
}

// rewrite a DJ/X-alphabet relation through the Eq. (5.3) dictionary into the
// L-alphabet
inline Element qq_to_l(const Element& e) { return to_l_form(e); }

}  // namespace qk

#endif  // QUEERKIT_PRESENTATIONS_HPP
