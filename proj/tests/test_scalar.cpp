#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "queerkit/scalar.hpp"

using namespace qk;

namespace {

// brute-force oracle: expand (q^m - q^-m)/(q - q^-1) by raw polynomial
// division of q^(2m) - 1 by q^2 - 1, shifted back by q^(m-1)
Scalar qint_oracle(long m) {
    if (m == 0) return Scalar(1);
    // (q^(2m) - 1) / (q^2 - 1) = 1 + q^2 + ... + q^(2m-2)
    std::vector<Int> coeffs(static_cast<size_t>(2 * m - 1), Int(0));
    for (long k = 0; k <= 2 * (m - 1); k += 2) coeffs[static_cast<size_t>(k)] = 1;
    return Scalar(Poly(std::move(coeffs)), Poly::q(static_cast<int>(m - 1)));
}

Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
    auto poly = [&](bool nz) {
        for (;;) {
            std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
            for (auto& x : c) x = coef(rng);
            Poly p{std::vector<Int>(c)};
            if (!nz || !p.is_zero()) return p;
        }
    };
    for (;;) {
        Scalar s(poly(false), poly(true));
        if (!nonzero || !s.is_zero()) return s;
    }
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    Poly a = (Poly::q(2) - Poly(1)) * (Poly::q(1) + Poly(3));
    Poly b = (Poly::q(2) - Poly(1)) * (Poly::q(3) - Poly(2));
    Poly g = Poly::gcd(a, b);
    CHECK(g == Poly::q(2) - Poly(1));
    CHECK(Poly::divexact(a, g) == Poly::q(1) + Poly(3));
    CHECK(Poly::gcd(Poly(), b) == b);
    CHECK((Poly::q(3) * Poly::q(4)) == Poly::q(7));
}

TEST_CASE("canonical form") {
    // (q^2 - 1)/(q - 1) reduces to q + 1
    Scalar s(Poly::q(2) - Poly(1), Poly::q(1) - Poly(1));
    CHECK(s == Scalar(Poly::q(1) + Poly(1)));
    // denominator sign is normalized positive
    Scalar t(Poly(1), Poly(-2));
    CHECK(t.str() == "-1/2");
    // (a/b)*(b/a) = 1 exactly
    Scalar a(Poly::q(3) - Poly(7), Poly::q(1) + Poly(2));
    CHECK((a * a.inv()).is_one());
}

TEST_CASE("Laurent membership predicate") {
    CHECK(Scalar::q(-2).is_laurent());
    CHECK(qint(5).is_laurent());
    CHECK(!(Scalar(1) / Scalar(2)).is_laurent());
    CHECK(!(Scalar(1) / (Scalar::q() + Scalar(1))).is_laurent());
    Scalar half_q = Scalar(Poly(1), Poly::monomial(Int(2), 1));  // 1/(2q)
    CHECK(!half_q.is_laurent());
}

TEST_CASE("quantum integers") {
    CHECK(qint(0) == Scalar(1));  // stated convention
    CHECK(qint(2) == Scalar::q(1) + Scalar::q(-1));
    CHECK(qint(3) == qint_oracle(3));
    CHECK(qint(3) == Scalar::q(2) + Scalar(1) + Scalar::q(-2));
    for (long m = 1; m <= 9; ++m) CHECK(qint(m) == qint_oracle(m));
    CHECK(qfact(0) == Scalar(1));
    CHECK(qfact(3) == qint(3) * qint(2));
}

TEST_CASE("Gaussian binomials") {
    CHECK(qbinom(7, 0) == Scalar(1));
    CHECK(qbinom(2, 1) == qint(2));
    // [4][3]/[2]! by brute-force polynomial arithmetic
    Scalar oracle = qint_oracle(4) * qint_oracle(3) / (qint_oracle(2) * qint_oracle(1));
    CHECK(qbinom(4, 2) == oracle);
    CHECK(qbinom(4, 2) ==
          Scalar::q(4) + Scalar::q(2) + Scalar(2) + Scalar::q(-2) + Scalar::q(-4));
    CHECK(qbinom(2, 3) == Scalar(0));
    // Gaussian binomials lie in Z[q, q^-1]
    for (long c = -5; c <= 6; ++c)
        for (long m = 0; m <= 5; ++m) CHECK(qbinom(c, m).is_laurent());
}

TEST_CASE("binomials specialize to ordinary binomials at q = 1") {
    for (long c = 0; c <= 8; ++c)
        for (long m = 0; m <= c; ++m) {
            Rat v = qbinom(c, m).eval(Rat(1));
            CHECK(v == Rat(int_binom(Int(c), m)));
        }
}

TEST_CASE("bracket evaluation") {
    CHECK(bracket_eval(3, -2, 0) == Scalar(1));  // empty product
    CHECK(bracket_eval(1, 0, 1) == Scalar(1));
    CHECK(bracket_eval(2, 0, 2) == Scalar(1));
    CHECK(bracket_eval(2, 0, 2) == qbinom(2, 2));
    for (long c = -5; c <= 5; ++c)
        for (long lam = 0; lam <= 6; ++lam)
            for (long t = 0; t <= 6; ++t) CHECK(bracket_eval(lam, c, t) == qbinom(lam + c, t));
}

TEST_CASE("bar symmetry of quantum integers and binomials") {
    for (long m = 0; m <= 6; ++m) CHECK(qint(m).bar() == qint(m));
    for (long c = -4; c <= 5; ++c)
        for (long m = 0; m <= 4; ++m) CHECK(qbinom(c, m).bar() == qbinom(c, m));
    CHECK(Scalar::q(3).bar() == Scalar::q(-3));
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 10000; ++iter) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        Scalar a = random_scalar(rng, true);
        CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(7);
    Rat q0(5, 3);
    for (int iter = 0; iter < 500; ++iter) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        if (a.den().eval(q0) == 0 || b.den().eval(q0) == 0) continue;
        CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
        CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
    }
}

TEST_CASE("textual round trip") {
    CHECK(parse_scalar("q^2 + 1 + q^-2") == qint(3));
    CHECK(parse_scalar("(q^2-1)/(q^2+1)") ==
          Scalar(Poly::q(2) - Poly(1), Poly::q(2) + Poly(1)));
    CHECK(parse_scalar("-3*q^2") == Scalar(-3) * Scalar::q(2));
    CHECK(parse_scalar("2/3") == Scalar(Rat(2, 3)));
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        Scalar a = random_scalar(rng);
        CHECK(parse_scalar(a.str()) == a);
    }
    CHECK(qint(3).str() == "q^2 + 1 + q^-2");
    CHECK(Scalar(0).str() == "0");
}
