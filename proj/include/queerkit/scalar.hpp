#ifndef QUEERKIT_SCALAR_HPP
#define QUEERKIT_SCALAR_HPP

// Exact coefficient arithmetic for the field Q(q): integer polynomials in q,
// canonical fractions, quantum integers/factorials/binomials and the
// two-parameter brackets evaluated at integer weights.

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <string_view>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk {

using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial in q with Int coefficients.  coeff[k] is the coefficient
// of q^k; the vector carries no trailing zeros, so zero is the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(long v) { if (v != 0) c_.push_back(Int(v)); }
    explicit Poly(const Int& v) { if (v != 0) c_.push_back(v); }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Int& a, int k) {
        Poly p;
        if (a != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
            p.c_[static_cast<size_t>(k)] = a;
        }
        return p;
    }
    static Poly q(int k = 1) { return monomial(Int(1), k); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Int& coeff(int k) const {
        static const Int zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    // number of trailing zero coefficients, i.e. the largest k with q^k | p
    int low_order() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return 0;
    }

    bool is_monomial() const {
        if (c_.empty()) return false;
        for (size_t k = 0; k + 1 < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Int> r(c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t k = a.c_.size(); k-- > 0;)
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        return false;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r(1), base(*this);
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // gcd of all integer coefficients (nonnegative); 0 for the zero polynomial
    Int content() const {
        Int g(0);
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }

    Poly divided_by_int(const Int& d) const {
        std::vector<Int> r(c_);
        for (auto& x : r) {
            Int quo, rem;
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
            if (rem != 0) throw std::runtime_error("Poly: inexact integer division");
            x = quo;
        }
        return Poly(std::move(r));
    }

    // pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r
    static void pseudo_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
        if (b.is_zero()) throw std::runtime_error("Poly: division by zero");
        std::vector<Int> r(a.c_);
        int da = a.degree(), db = b.degree();
        if (da < db) { quo = Poly(); rem = a; return; }
        const Int& lb = b.leading();
        std::vector<Int> qv(static_cast<size_t>(da - db) + 1, Int(0));
        for (int k = da; k >= db; --k) {
            Int t = r[static_cast<size_t>(k)];
            for (auto& x : r) x *= lb;
            for (auto& x : qv) x *= lb;
            if (t != 0) {
                qv[static_cast<size_t>(k - db)] += t;
                for (int j = 0; j <= db; ++j)
                    r[static_cast<size_t>(k - db + j)] -= t * b.c_[static_cast<size_t>(j)];
            }
        }
        quo = Poly(std::move(qv));
        rem = Poly(std::move(r));
    }

    // exact division; throws if b does not divide a
    static Poly divexact(const Poly& a, const Poly& b) {
        if (a.is_zero()) return Poly();
        Poly quo, rem;
        pseudo_divmod(a, b, quo, rem);
        if (!rem.is_zero()) throw std::runtime_error("Poly: inexact division");
        // pseudo-division scaled a by lc(b)^(da-db+1)
        Int scale(1);
        for (int k = 0; k <= a.degree() - b.degree(); ++k) scale *= b.leading();
        return quo.divided_by_int(scale);
    }

    // gcd by the primitive Euclidean algorithm, normalized with positive
    // leading coefficient
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero()) return normalize_sign(b);
        if (b.is_zero()) return normalize_sign(a);
        Int ca = a.content(), cb = b.content();
        Int cg;
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        a = a.divided_by_int(ca);
        b = b.divided_by_int(cb);
        while (!b.is_zero()) {
            Poly quo, rem;
            pseudo_divmod(a, b, quo, rem);
            a = b;
            if (rem.is_zero()) { b = Poly(); break; }
            b = rem.divided_by_int(rem.content());
        }
        return normalize_sign(a * Poly(cg));
    }

    static Poly normalize_sign(Poly p) {
        if (!p.is_zero() && p.leading() < 0) return -p;
        return p;
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t k = c_.size(); k-- > 0;) r = r * x + Rat(c_[k]);
        return r;
    }

    // p(q) -> q^(deg p) * p(1/q), i.e. reversed coefficients
    Poly reversed() const {
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Element of Q(q) kept as a canonical fraction num/den of integer polynomials:
// gcd(num, den) = 1 (including integer content) and den has positive leading
// coefficient.  Equality is syntactic equality of canonical forms.  The
// subring Z[q, q^-1] is exactly the set of scalars whose canonical
// denominator is a power of q.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    explicit Scalar(const Int& v) : num_(v), den_(1) {}
    explicit Scalar(const Rat& v) : num_(v.get_num()), den_(v.get_den()) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        reduce();
    }
    explicit Scalar(const Poly& num) : num_(num), den_(1) {}

    static Scalar q(int k = 1) {
        if (k >= 0) return Scalar(Poly::q(k), Poly(1));
        return Scalar(Poly(1), Poly::q(-k));
    }
    static Scalar integer(long v) { return Scalar(v); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

    // true iff the scalar lies in Z[q, q^-1]
    bool is_laurent() const {
        return den_.is_monomial() && den_.leading() == 1;
    }
    bool is_integer() const { return den_ == Poly(1) && num_.degree() <= 0; }
    bool is_rational_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inv() const { return Scalar(1) / *this; }
    Scalar pow(int e) const {
        if (e == 0) return Scalar(1);
        Scalar base = e > 0 ? *this : inv();
        int n = std::abs(e);
        Scalar r(1);
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // the image under the bar involution q -> q^-1
    Scalar bar() const {
        Scalar r(num_.reversed(), den_.reversed());
        return r * Scalar::q(den_.degree() - num_.degree());
    }

    // specialization at a rational point q0 with den(q0) != 0
    Rat eval(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d == 0) throw std::domain_error("Scalar: evaluation at a pole");
        return num_.eval(q0) / d;
    }

    std::string str() const;

private:
    void reduce() {
        if (num_.is_zero()) { den_ = Poly(1); return; }
        Poly g = Poly::gcd(num_, den_);
        if (g != Poly(1)) {
            num_ = Poly::divexact(num_, g);
            den_ = Poly::divexact(den_, g);
        }
        if (den_.leading() < 0) { num_ = -num_; den_ = -den_; }
    }
    Poly num_, den_;
};

namespace detail {

inline void print_laurent_term(std::ostream& os, const Int& a, int e, bool first) {
    Int abs_a = a < 0 ? Int(-a) : a;
    if (first) {
        if (a < 0) os << "-";
    } else {
        os << (a < 0 ? " - " : " + ");
    }
    if (e == 0) { os << abs_a.get_str(); return; }
    if (abs_a != 1) os << abs_a.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
}

inline void print_poly(std::ostream& os, const Poly& p, int shift) {
    if (p.is_zero()) { os << "0"; return; }
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k) == 0) continue;
        print_laurent_term(os, p.coeff(k), k + shift, first);
        first = false;
    }
}

}  // namespace detail

// Sparse Laurent form when the scalar lies in Z[q,q^-1] ("q^2 + 1 + q^-2"),
// fraction form "(num)/(den)" otherwise.
inline std::string Scalar::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    if (is_laurent()) {
        detail::print_poly(os, num_, -den_.degree());
        return os.str();
    }
    if (num_.degree() <= 0 && den_.degree() <= 0) {
        os << num_.leading().get_str() << "/" << den_.leading().get_str();
        return os.str();
    }
    os << "(";
    detail::print_poly(os, num_, 0);
    os << ")/(";
    detail::print_poly(os, den_, 0);
    os << ")";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// --- quantum integers -------------------------------------------------------

// the literal value (q^m - q^-m)/(q - q^-1); vanishes at m = 0
inline Scalar qint_value(long m) {
    if (m == 0) return Scalar(0);
    return (Scalar::q(static_cast<int>(m)) - Scalar::q(static_cast<int>(-m))) /
           (Scalar::q(1) - Scalar::q(-1));
}

// [m] = (q^m - q^-m)/(q - q^-1), with the convention [0] = 1
inline Scalar qint(long m) {
    if (m == 0) return Scalar(1);
    return qint_value(m);
}

// [m]! with [0]! = 1
inline Scalar qfact(long m) {
    Scalar r(1);
    for (long k = 2; k <= m; ++k) r *= qint_value(k);
    return r;
}

// Gaussian binomial [c; m] = [c][c-1]...[c-m+1]/[m]!, defined for all c in Z
inline Scalar qbinom(long c, long m) {
    if (m < 0) throw std::invalid_argument("qbinom: m < 0");
    Scalar r(1);
    for (long s = 1; s <= m; ++s) r *= qint_value(c - s + 1);
    return r / qfact(m);
}

// [Z; c / t] evaluated with Z = q^weight: prod_{s=1..t}
// (q^(w+c-s+1) - q^-(w+c-s+1)) / (q^s - q^-s)
inline Scalar bracket_eval(long weight, long c, long t) {
    if (t < 0) throw std::invalid_argument("bracket_eval: t < 0");
    Scalar r(1);
    for (long s = 1; s <= t; ++s) {
        long a = weight + c - s + 1;
        r *= (Scalar::q(static_cast<int>(a)) - Scalar::q(static_cast<int>(-a))) /
             (Scalar::q(static_cast<int>(s)) - Scalar::q(static_cast<int>(-s)));
    }
    return r;
}

// ordinary binomial C(c, k) for arbitrary integer c
inline Int int_binom(const Int& c, long k) {
    if (k < 0) return Int(0);
    Int num(1), den(1);
    for (long s = 0; s < k; ++s) {
        num *= c - s;
        den *= s + 1;
    }
    Int quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::runtime_error("int_binom: inexact");
    return quo;
}

// --- parsing ----------------------------------------------------------------
//
// Accepts sparse Laurent form ("q^2 + 1 + q^-2") and fraction form
// ("(q^2-1)/(q^2+1)") as well as any +,-,*,/,^ combination of integers and q.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar parse() {
        Scalar r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("Scalar parse: trailing input");
        return r;
    }

private:
    Scalar expr() {
        Scalar r = term();
        for (;;) {
            skip_ws();
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Scalar term() {
        Scalar r = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) r *= factor();
            else if (eat('/')) r /= factor();
            else return r;
        }
    }
    Scalar factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        Scalar r = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool eneg = eat('-');
            long e = integer();
            r = r.pow(static_cast<int>(eneg ? -e : e));
        }
        return neg ? -r : r;
    }
    Scalar atom() {
        skip_ws();
        if (eat('(')) {
            Scalar r = expr();
            skip_ws();
            if (!eat(')')) throw std::invalid_argument("Scalar parse: expected ')'");
            return r;
        }
        if (pos_ < s_.size() && s_[pos_] == 'q') {
            ++pos_;
            return Scalar::q(1);
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Scalar(Int(integer()));
        throw std::invalid_argument("Scalar parse: unexpected character");
    }
    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("Scalar parse: expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

inline Scalar parse_scalar(std::string_view s) { return ScalarParser(s).parse(); }

}  // namespace qk

#endif  // QUEERKIT_SCALAR_HPP
