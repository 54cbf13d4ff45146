#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "queerkit/classical.hpp"
#include "queerkit/qn_matrix.hpp"

using namespace qk;

namespace {

QnMatrix matrix_of(int n, const Gen& g) {
    switch (g.fam) {
        case Fam::CX: {
            if (g.s != 1) throw std::invalid_argument("matrix_of: divided power is not in q(n)");
            return qn_x(n, g.i, g.j);
        }
        case Fam::CXbar: return qn_xbar(n, g.i, g.j);
        case Fam::CHbar: return qn_hbar(n, g.i);
        case Fam::CBinomH:
            if (g.s != 1) throw std::invalid_argument("matrix_of: not a Lie element");
            return qn_h(n, g.i);
        default: throw std::invalid_argument("matrix_of: foreign generator");
    }
}

// evaluate a degree<=1 element of U (a linear combination of single
// generators and a constant) in the matrix model; constants must vanish
QnMatrix matrix_of_element(int n, const Element& e) {
    QnMatrix m(n);
    for (const auto& [w, c] : e.terms()) {
        REQUIRE(w.size() == 1);
        REQUIRE(c.is_rational_constant());
        m = m + Rat(c.eval(Rat(1))) * matrix_of(n, w[0]);
    }
    return m;
}

}  // namespace

TEST_CASE("gl bracket oracle on matrix units") {
    const int n = 3;
    // [x_{i,j}, x_{j,i}] = h_i - h_j
    CHECK(qn_bracket(qn_x(n, 1, 2), qn_x(n, 2, 1)) == qn_h(n, 1) - qn_h(n, 2));
    // [xbar_{i,j}, xbar_{j,i}] = h_i + h_j
    CHECK(qn_bracket(qn_xbar(n, 1, 3), qn_xbar(n, 3, 1)) == qn_h(n, 1) + qn_h(n, 3));
    // Cartan even part is abelian
    CHECK(qn_bracket(qn_h(n, 2), qn_h(n, 3)).is_zero());
    // [hbar_i, hbar_i] = 2 h_i
    CHECK(qn_bracket(qn_hbar(n, 2), qn_hbar(n, 2)) == Rat(2) * qn_h(n, 2));
    CHECK_THROWS_AS(qn_bracket(qn_h(n, 1) + qn_xbar(n, 1, 2), qn_h(n, 1)), QnNonHomogeneous);
}

TEST_CASE("matrix oracle agrees with the abstract commutators") {
    // for all generator pairs with n <= 4: [a, b] in the matrix model equals
    // the normal form of the abstract super commutator, evaluated back in
    // the matrix model (both sides are degree <= 1 plus Cartan products that
    // cancel for Lie brackets)
    for (int n = 2; n <= 4; ++n) {
        RewriteSystem sys = classical_rules(n);
        std::vector<Gen> lie;
        for (int i = 1; i <= n; ++i) {
            lie.push_back(binom_h(i, 1));
            lie.push_back(hbar(i));
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) {
                    lie.push_back(cx(i, j, 1));
                    lie.push_back(cxbar(i, j));
                }
        for (const auto& a : lie)
            for (const auto& b : lie) {
                QnMatrix lhs = qn_bracket(matrix_of(n, a), matrix_of(n, b));
                Element comm = normal_form(super_commutator(Element(a), Element(b)), sys);
                // the bracket of two Lie generators is again degree <= 1
                QnMatrix rhs = matrix_of_element(n, comm);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("straightening matches the divided-power formulas") {
    RewriteSystem sys = classical_rules(2);
    // x^(m)_{i,j} h_k = (h_k - m (eps_k, alpha_ij)) x^(m)_{i,j}
    Element lhs = normal_form(multiply(Element(cx(1, 2, 3)), ch(1)), sys);
    Element rhs = normal_form(multiply(ch(1) - Scalar(3) * Element::one(), Element(cx(1, 2, 3))), sys);
    CHECK(lhs == rhs);
    // xbar_{i,j} xbar_{j,i} -> -xbar_{j,i} xbar_{i,j} + (h_i + h_j)
    Element lhs2 = normal_form(multiply(Element(cxbar(1, 2)), Element(cxbar(2, 1))), sys);
    Element rhs2 = normal_form(-multiply(Element(cxbar(2, 1)), Element(cxbar(1, 2))) + ch(1) + ch(2), sys);
    CHECK(lhs2 == rhs2);
    // odd squares vanish
    CHECK(normal_form(multiply(Element(cxbar(1, 2)), Element(cxbar(1, 2))), sys).is_zero());
    CHECK(normal_form(multiply(chb(1), chb(1)) - ch(1), sys).is_zero());
}

namespace {

std::vector<std::pair<std::string, Element>> qs_relations(int n) {
    std::vector<std::pair<std::string, Element>> rel;
    auto alpha = [&](int i, int j) { return RootDatum::pairing(i, j, j + 1); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            rel.push_back({"QS1/hh", super_commutator(ch(i), ch(j))});
            rel.push_back({"QS1/hhb", super_commutator(ch(i), chb(j))});
            Element d = super_commutator(chb(i), chb(j));
            if (i == j) d -= Scalar(2) * ch(i);
            rel.push_back({"QS1/hbhb", d});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            int c = alpha(i, j);
            rel.push_back({"QS2/he", super_commutator(ch(i), ce(j)) - Scalar(c) * ce(j)});
            rel.push_back({"QS2/heb", super_commutator(ch(i), ceb(j)) - Scalar(c) * ceb(j)});
            rel.push_back({"QS2/hf", super_commutator(ch(i), cf(j)) + Scalar(c) * cf(j)});
            rel.push_back({"QS2/hfb", super_commutator(ch(i), cfb(j)) + Scalar(c) * cfb(j)});
            rel.push_back({"QS3/hbe", super_commutator(chb(i), ce(j)) - Scalar(c) * ceb(j)});
            rel.push_back({"QS3/hbf", super_commutator(chb(i), cf(j)) + Scalar(c) * cfb(j)});
            Element ebar = super_commutator(chb(i), ceb(j));
            if (i == j || i == j + 1) ebar -= ce(j);
            rel.push_back({"QS3/hbeb", ebar});
            Element fbar = super_commutator(chb(i), cfb(j));
            if (i == j || i == j + 1) fbar -= cf(j);
            rel.push_back({"QS3/hbfb", fbar});
        }
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            Element ef = super_commutator(ce(i), cf(j));
            if (i == j) ef -= ch(i) - ch(i + 1);
            rel.push_back({"QS4/ef", ef});
            Element ebfb = super_commutator(ceb(i), cfb(j));
            if (i == j) ebfb -= ch(i) + ch(i + 1);
            rel.push_back({"QS4/ebfb", ebfb});
            Element ebf = super_commutator(ceb(i), cf(j));
            if (i == j) ebf -= chb(i) - chb(i + 1);
            rel.push_back({"QS4/ebf", ebf});
            Element efb = super_commutator(ce(i), cfb(j));
            if (i == j) efb -= chb(i) - chb(i + 1);
            rel.push_back({"QS4/efb", efb});
        }
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j) {
            if (std::abs(i - j) != 1) {
                rel.push_back({"QS5/eeb", super_commutator(ce(i), ceb(j))});
                rel.push_back({"QS5/ebeb", super_commutator(ceb(i), ceb(j))});
                rel.push_back({"QS5/ffb", super_commutator(cf(i), cfb(j))});
                rel.push_back({"QS5/fbfb", super_commutator(cfb(i), cfb(j))});
            }
            if (std::abs(i - j) > 1) {
                rel.push_back({"QS5/ee", super_commutator(ce(i), ce(j))});
                rel.push_back({"QS5/ff", super_commutator(cf(i), cf(j))});
            }
        }
    for (int i = 1; i + 2 <= n; ++i) {
        rel.push_back({"QS5/serre-mix1",
                       super_commutator(ce(i), ce(i + 1)) - super_commutator(ceb(i), ceb(i + 1))});
        rel.push_back({"QS5/serre-mix2",
                       super_commutator(ce(i), ceb(i + 1)) - super_commutator(ceb(i), ce(i + 1))});
        rel.push_back({"QS5/serre-mix3",
                       super_commutator(cf(i + 1), cf(i)) - super_commutator(cfb(i + 1), cfb(i))});
        rel.push_back({"QS5/serre-mix4",
                       super_commutator(cf(i + 1), cfb(i)) - super_commutator(cfb(i + 1), cf(i))});
    }
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j + 1 <= n; ++j)
            if (std::abs(i - j) == 1) {
                rel.push_back({"QS6/eee",
                               super_commutator(ce(i), super_commutator(ce(i), ce(j)))});
                rel.push_back({"QS6/ebee",
                               super_commutator(ceb(i), super_commutator(ce(i), ce(j)))});
                rel.push_back({"QS6/fff",
                               super_commutator(cf(i), super_commutator(cf(i), cf(j)))});
                rel.push_back({"QS6/fbff",
                               super_commutator(cfb(i), super_commutator(cf(i), cf(j)))});
            }
    return rel;
}

}  // namespace

TEST_CASE("defining relations normalize to zero") {
    for (int n = 2; n <= 4; ++n) {
        RewriteSystem sys = classical_rules(n);
        for (const auto& [name, rel] : qs_relations(n)) {
            Element nf = normal_form(rel, sys);
            INFO("n=" << n << " relation " << name << " -> " << nf.str());
            CHECK(nf.is_zero());
        }
    }
}

TEST_CASE("PBW irreducibility and Kostant integrality") {
    const int n = 3;
    RewriteSystem sys = classical_rules(n);
    ClassicalOrder ord{n};
    std::mt19937_64 rng(23);
    std::vector<Gen> alphabet;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                alphabet.push_back(cx(i, j, 1));
                alphabet.push_back(cx(i, j, 2));
                alphabet.push_back(cxbar(i, j));
            }
    for (int i = 1; i <= n; ++i) {
        alphabet.push_back(binom_h(i, 2));
        alphabet.push_back(hbar(i));
    }
    for (int iter = 0; iter < 40; ++iter) {
        Word w;
        int len = 2 + static_cast<int>(rng() % 5);
        for (int k = 0; k < len; ++k) w.push_back(alphabet[rng() % alphabet.size()]);
        Element nf = normal_form(Element(w), sys);
        for (const auto& [word, coeff] : nf.terms()) {
            // irreducible = strictly increasing position classes
            for (size_t p = 0; p + 1 < word.size(); ++p)
                CHECK(ord.klass(word[p]) < ord.klass(word[p + 1]));
            CHECK(is_irreducible(word, sys));
            // integral inputs stay integral
            CHECK(coeff.is_integer());
        }
    }
}

TEST_CASE("degree filtration") {
    const int n = 3;
    RewriteSystem sys = classical_rules(n);
    std::mt19937_64 rng(31);
    auto basis = schur_basis(n, 2);
    // degree of the free counterparts of u_A times u_B is subadditive
    for (int iter = 0; iter < 30; ++iter) {
        const auto& A = basis[rng() % basis.size()];
        const auto& B = basis[rng() % basis.size()];
        Word wa, wb;
        for (const auto& g : A.u.terms().begin()->first)
            if (g.fam != Fam::CIdem) wa.push_back(g);
        for (const auto& g : B.u.terms().begin()->first)
            if (g.fam != Fam::CIdem) wb.push_back(g);
        Element prod = multiply(Element(wa), Element(wb));
        long bound = sys.word_degree(wa) + sys.word_degree(wb);
        Element nf = normal_form(prod, sys);
        for (const auto& [word, coeff] : nf.terms()) CHECK(sys.word_degree(word) <= bound);
    }
}

TEST_CASE("Schur quotient rules") {
    const int n = 2, r = 2;
    RewriteSystem sys = schur_rules(n, r);
    Element idem11(cidem({1, 1}));
    Element idem20(cidem({2, 0}));
    // orthogonal idempotents
    CHECK(normal_form(multiply(idem11, idem11), sys) == idem11);
    CHECK(normal_form(multiply(idem11, idem20), sys).is_zero());
    // x_alpha 1_lambda with lambda + alpha outside Lambda(n,r) dies
    CHECK(normal_form(multiply(ce(1), idem20), sys).is_zero());
    CHECK(normal_form(multiply(ce(1), idem11), sys) ==
          Element(Word{cidem({2, 0}), cx(1, 2, 1)}));
    // hbar_i 1_lambda = 0 when lambda_i = 0
    CHECK(normal_form(multiply(chb(2), idem20), sys).is_zero());
    // h_i 1_lambda = lambda_i 1_lambda
    CHECK(normal_form(multiply(ch(1), idem11), sys) == idem11);
    // binom(h, b) with |b| > r is annihilated
    CHECK(normal_form(Element(binom_h(1, 3)), sys).is_zero());
    // QS7: h_1 + ... + h_n = r
    Element qs7 = ch(1) + ch(2) - Scalar(r) * Element::one();
    CHECK(normal_form(qs7, sys).is_zero());
    // QS8: hbar_i (h_i - 1) ... (h_i - r) = 0
    for (int i = 1; i <= n; ++i) {
        Element qs8 = chb(i);
        for (int k = 1; k <= r; ++k) qs8 = multiply(qs8, ch(i) - Scalar(k) * Element::one());
        CHECK(normal_form(qs8, sys).is_zero());
    }
}

TEST_CASE("idempotent presentation relations") {
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r) {
            RewriteSystem sys = schur_rules(n, r);
            auto lambdas = compositions(n, r);
            // sum of idempotents is the identity
            Element sum;
            for (const auto& lam : lambdas) sum += Element(cidem(lam));
            CHECK(normal_form(sum - Element::one(), sys).is_zero());
            // QS1': hbar anticommutator against the weight decomposition
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    Element d = super_commutator(chb(i), chb(j));
                    if (i == j)
                        for (const auto& lam : lambdas)
                            d -= Scalar(2 * lam[static_cast<size_t>(i - 1)]) * Element(cidem(lam));
                    CHECK(normal_form(d, sys).is_zero());
                }
            // QS2' and QS4'
            for (int j = 1; j + 1 <= n; ++j) {
                for (const auto& lam : lambdas) {
                    Composition up = RootDatum::add_root(lam, j, j + 1);
                    Element lhs = normal_form(multiply(ce(j), Element(cidem(lam))), sys);
                    Element rhs = in_lambda_nr(up, r)
                                      ? normal_form(multiply(Element(cidem(up)), ce(j)), sys)
                                      : Element::zero();
                    CHECK(lhs == rhs);
                }
                Element ef = super_commutator(ce(j), cf(j));
                for (const auto& lam : lambdas)
                    ef -= Scalar(lam[static_cast<size_t>(j - 1)] - lam[static_cast<size_t>(j)]) *
                          Element(cidem(lam));
                CHECK(normal_form(ef, sys).is_zero());
                Element ebfb = super_commutator(ceb(j), cfb(j));
                for (const auto& lam : lambdas)
                    ebfb -= Scalar(lam[static_cast<size_t>(j - 1)] + lam[static_cast<size_t>(j)]) *
                            Element(cidem(lam));
                CHECK(normal_form(ebfb, sys).is_zero());
            }
        }
}

TEST_CASE("basis enumeration and dimension formulas") {
    CHECK(schur_basis(1, 0).size() == 1);
    CHECK(schur_basis(1, 1).size() == 2);
    CHECK(schur_basis(2, 2).size() == 32);
    CHECK(dim_schur(1, 0) == 1);
    CHECK(dim_schur(3, 0) == 1);
    CHECK(dim_schur(2, 2) == 32);
    CHECK(dim_schur_zero(2, 2) == 8);
    // closed formula against the enumeration oracle
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r)
            CHECK(dim_schur(n, r) == Int(static_cast<long>(super_matrices(n, r).size())));
    // u_A labels for n=1, r=1: 1_{(1)} and 1_{(1)} hbar_1
    auto b = schur_basis(1, 1);
    REQUIRE(b.size() == 2);
    CHECK(((b[0].u == Element(Word{cidem({1})})) ||
           (b[1].u == Element(Word{cidem({1})}))));
    CHECK(((b[0].u == Element(Word{cidem({1}), hbar(1)})) ||
           (b[1].u == Element(Word{cidem({1}), hbar(1)}))));
}

TEST_CASE("schur basis words are irreducible") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}}) {
        RewriteSystem sys = schur_rules(n, r);
        for (const auto& lb : schur_basis(n, r)) {
            REQUIRE(lb.u.size() == 1);
            CHECK(is_irreducible(lb.u.terms().begin()->first, sys));
        }
    }
}
