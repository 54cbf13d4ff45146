#ifndef QUEERKIT_GEN_HPP
#define QUEERKIT_GEN_HPP

// Tagged generator symbols with parity for the classical, quantum (L- and
// X-form), Sergeev and Hecke-Clifford alphabets.

#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qk {

enum class Fam : uint8_t {
    // classical alphabet
    CBinomH,  // binom(h_i, s), s >= 1; binom(h_i,1) = h_i
    CHbar,    // odd Cartan hbar_i
    CX,       // divided power x^(s)_{i,j}, i != j, s >= 1
    CXbar,    // odd root vector xbar_{i,j}
    CIdem,    // weight idempotent 1_lambda (classical Schur quotient)
    // quantum L-alphabet
    LGen,  // L_{i,j}, i < j in I(n|n); includes odd diagonal L_{-a,a}
    KPow,  // K_a^s = L_{a,a}^s (s in Z, s != 0)
    // quantum X-alphabet (shares KPow)
    KBr,    // bracket [K_i; c / t], t >= 1
    KBar,   // odd Cartan Kbar_i
    QX,     // divided power X^(s)_{i,j}
    QXbar,  // odd root vector Xbar_{i,j}
    QIdem,  // weight idempotent 1_lambda (quantum Schur quotient)
    // Sergeev and Hecke-Clifford generators (representation-only alphabet)
    SgS,  // transposition s_k
    SgC,  // Clifford c_l
    HcT,  // Hecke T_k
    HcC,  // Clifford c_l
};

struct Gen {
    Fam fam{};
    int i = 0;  // first index (row / Cartan index / slot)
    int j = 0;  // second index
    int s = 0;  // divided-power order, K exponent, or bracket order t
    int c = 0;  // bracket shift
    std::vector<int> lam;  // idempotent weight

    friend bool operator==(const Gen& a, const Gen& b) {
        return a.fam == b.fam && a.i == b.i && a.j == b.j && a.s == b.s && a.c == b.c &&
               a.lam == b.lam;
    }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.fam != b.fam) return a.fam < b.fam;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        if (a.s != b.s) return a.s < b.s;
        if (a.c != b.c) return a.c < b.c;
        return a.lam < b.lam;
    }

    // Z_2 parity of the symbol
    int parity() const {
        switch (fam) {
            case Fam::CHbar:
            case Fam::CXbar:
            case Fam::KBar:
            case Fam::QXbar:
            case Fam::SgC:
            case Fam::HcC:
                return 1;
            case Fam::LGen:
                return (static_cast<long>(i) * j < 0) ? 1 : 0;
            default:
                return 0;
        }
    }

    std::string str() const;
};

// --- constructors -----------------------------------------------------------

inline Gen binom_h(int i, int s) {
    if (s < 1) throw std::invalid_argument("binom_h: order must be >= 1");
    return Gen{Fam::CBinomH, i, 0, s, 0, {}};
}
inline Gen hbar(int i) { return Gen{Fam::CHbar, i, 0, 0, 0, {}}; }
inline Gen cx(int i, int j, int s = 1) {
    if (i == j || s < 1) throw std::invalid_argument("cx: bad indices");
    return Gen{Fam::CX, i, j, s, 0, {}};
}
inline Gen cxbar(int i, int j) {
    if (i == j) throw std::invalid_argument("cxbar: bad indices");
    return Gen{Fam::CXbar, i, j, 0, 0, {}};
}
inline Gen cidem(std::vector<int> lam) { return Gen{Fam::CIdem, 0, 0, 0, 0, std::move(lam)}; }

inline Gen lgen(int i, int j) {
    if (i == j) throw std::invalid_argument("lgen: diagonal entries are KPow");
    if (i > j) throw std::invalid_argument("lgen: requires i < j in I(n|n)");
    return Gen{Fam::LGen, i, j, 0, 0, {}};
}
inline Gen kpow(int a, int e) {
    if (e == 0) throw std::invalid_argument("kpow: zero exponent");
    return Gen{Fam::KPow, a, 0, e, 0, {}};
}
inline Gen kbr(int a, int c, int t) {
    if (t < 1) throw std::invalid_argument("kbr: order must be >= 1");
    return Gen{Fam::KBr, a, 0, t, c, {}};
}
inline Gen kbar(int a) { return Gen{Fam::KBar, a, 0, 0, 0, {}}; }
inline Gen qx(int i, int j, int s = 1) {
    if (i == j || s < 1) throw std::invalid_argument("qx: bad indices");
    return Gen{Fam::QX, i, j, s, 0, {}};
}
inline Gen qxbar(int i, int j) {
    if (i == j) throw std::invalid_argument("qxbar: bad indices");
    return Gen{Fam::QXbar, i, j, 0, 0, {}};
}
inline Gen qidem(std::vector<int> lam) { return Gen{Fam::QIdem, 0, 0, 0, 0, std::move(lam)}; }

inline Gen sg_s(int k) { return Gen{Fam::SgS, k, 0, 0, 0, {}}; }
inline Gen sg_c(int l) { return Gen{Fam::SgC, l, 0, 0, 0, {}}; }
inline Gen hc_t(int k) { return Gen{Fam::HcT, k, 0, 0, 0, {}}; }
inline Gen hc_c(int l) { return Gen{Fam::HcC, l, 0, 0, 0, {}}; }

// --- printing ---------------------------------------------------------------

namespace detail {
inline std::string lam_str(const std::vector<int>& lam) {
    std::ostringstream os;
    for (size_t k = 0; k < lam.size(); ++k) os << (k ? "," : "") << lam[k];
    return os.str();
}
}  // namespace detail

// ASCII forms: h1, hc(1;2), hb1, e1/f1/eb1/fb1 for simple root vectors,
// x(1,3), xb(3,1), xd(1,3;2), Id(2,0); quantum: K3, K3^-1, Kb3, Kc(3;0;2),
// E1/F1/Eb1/Fb1, X(1,3), Xb(3,1), Xd(1,3;2), ID(2,0), L(-2,1); s1, c2, T1.
inline std::string Gen::str() const {
    std::ostringstream os;
    switch (fam) {
        case Fam::CBinomH:
            if (s == 1) os << "h" << i;
            else os << "hc(" << i << ";" << s << ")";
            break;
        case Fam::CHbar: os << "hb" << i; break;
        case Fam::CX:
            if (s == 1 && j == i + 1) os << "e" << i;
            else if (s == 1 && j == i - 1) os << "f" << j;
            else if (s == 1) os << "x(" << i << "," << j << ")";
            else os << "xd(" << i << "," << j << ";" << s << ")";
            break;
        case Fam::CXbar:
            if (j == i + 1) os << "eb" << i;
            else if (j == i - 1) os << "fb" << j;
            else os << "xb(" << i << "," << j << ")";
            break;
        case Fam::CIdem: os << "Id(" << detail::lam_str(lam) << ")"; break;
        case Fam::LGen: os << "L(" << i << "," << j << ")"; break;
        case Fam::KPow:
            os << "K" << i;
            if (s != 1) os << "^" << s;
            break;
        case Fam::KBr: os << "Kc(" << i << ";" << c << ";" << s << ")"; break;
        case Fam::KBar: os << "Kb" << i; break;
        case Fam::QX:
            if (s == 1 && j == i + 1) os << "E" << i;
            else if (s == 1 && j == i - 1) os << "F" << j;
            else if (s == 1) os << "X(" << i << "," << j << ")";
            else os << "Xd(" << i << "," << j << ";" << s << ")";
            break;
        case Fam::QXbar:
            if (j == i + 1) os << "Eb" << i;
            else if (j == i - 1) os << "Fb" << j;
            else os << "Xb(" << i << "," << j << ")";
            break;
        case Fam::QIdem: os << "ID(" << detail::lam_str(lam) << ")"; break;
        case Fam::SgS: os << "s" << i; break;
        case Fam::SgC: os << "c" << i; break;
        case Fam::HcT: os << "T" << i; break;
        case Fam::HcC: os << "c" << i; break;
    }
    return os.str();
}

using Word = std::vector<Gen>;

inline int word_parity(const Word& w) {
    int p = 0;
    for (const auto& g : w) p ^= g.parity();
    return p;
}

struct WordHash {
    size_t operator()(const Word& w) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const auto& g : w) {
            mix(static_cast<uint64_t>(g.fam));
            mix(static_cast<uint64_t>(static_cast<int64_t>(g.i) + (1 << 20)));
            mix(static_cast<uint64_t>(static_cast<int64_t>(g.j) + (1 << 20)));
            mix(static_cast<uint64_t>(static_cast<int64_t>(g.s) + (1 << 20)));
            mix(static_cast<uint64_t>(static_cast<int64_t>(g.c) + (1 << 20)));
            for (int v : g.lam) mix(static_cast<uint64_t>(static_cast<int64_t>(v) + (1 << 20)));
            mix(0x9e3779b97f4a7c15ull);
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace qk

#endif  // QUEERKIT_GEN_HPP
