#ifndef QUEERKIT_ELEMENT_HPP
#define QUEERKIT_ELEMENT_HPP

// Formal linear combinations of words with Scalar coefficients: the free
// associative superalgebra term model.  Multiplication is word concatenation
// extended bilinearly; Koszul signs enter only through super_commutator and
// the tensor actions.

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gen.hpp"
#include "scalar.hpp"
#include "json.hpp"

namespace qk {

class Element {
public:
    using Terms = std::map<Word, Scalar>;

    Element() = default;
    explicit Element(Scalar s) { add(Word{}, s); }
    explicit Element(const Gen& g, Scalar coeff = Scalar(1)) { add(Word{g}, std::move(coeff)); }
    explicit Element(Word w, Scalar coeff = Scalar(1)) { add(std::move(w), std::move(coeff)); }

    static Element zero() { return Element(); }
    static Element one() { return Element(Scalar(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(Word w, Scalar coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(w), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Element operator+(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, -c);
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }

    friend Element operator*(const Scalar& s, const Element& a) {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, s * c);
        return r;
    }
    friend Element operator*(const Element& a, const Scalar& s) { return s * a; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // parity of a homogeneous element; nullopt for mixed parity
    std::optional<int> parity() const {
        std::optional<int> p;
        for (const auto& [w, c] : terms_) {
            int wp = word_parity(w);
            if (!p) p = wp;
            else if (*p != wp) return std::nullopt;
        }
        return p ? p : std::optional<int>(0);
    }

    // apply a scalar map to every coefficient (e.g. the bar involution)
    Element map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
        Element r;
        for (const auto& [w, c] : terms_) r.add(w, f(c));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            std::string cs = c.str();
            bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                       cs.find('(') == std::string::npos;
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                if (neg) { os << " - "; cs = cs.substr(1); }
                else os << " + ";
            }
            first = false;
            bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (w.empty()) {
                os << (needs_parens ? "(" + cs + ")" : cs);
            } else {
                if (cs != "1") os << (needs_parens ? "(" + cs + ")" : cs) << "*";
                for (size_t k = 0; k < w.size(); ++k) os << (k ? "*" : "") << w[k].str();
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

// bilinear concatenation product, no normalization
inline Element multiply(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(std::move(w), ca * cb);
        }
    return r;
}

inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

struct NonHomogeneous : std::domain_error {
    NonHomogeneous() : std::domain_error("super_commutator: arguments must be parity-homogeneous") {}
};

// [a,b] = ab - (-1)^(parity a * parity b) ba, unnormalized
inline Element super_commutator(const Element& a, const Element& b) {
    auto pa = a.parity(), pb = b.parity();
    if (!pa || !pb) throw NonHomogeneous();
    Element r = multiply(a, b);
    Element ba = multiply(b, a);
    return (*pa && *pb) ? r + ba : r - ba;
}

// --- JSON serialization -----------------------------------------------------
//
// Element: [{word: [descriptors], coeff: "scalar"}], descriptor:
// {fam: "...", and the indices carried by the family}.

inline nlohmann::json gen_to_json(const Gen& g) {
    nlohmann::json d;
    switch (g.fam) {
        case Fam::CBinomH: d["fam"] = "hc"; d["i"] = g.i; d["s"] = g.s; break;
        case Fam::CHbar:   d["fam"] = "hb"; d["i"] = g.i; break;
        case Fam::CX:      d["fam"] = "x";  d["i"] = g.i; d["j"] = g.j; d["s"] = g.s; break;
        case Fam::CXbar:   d["fam"] = "xb"; d["i"] = g.i; d["j"] = g.j; break;
        case Fam::CIdem:   d["fam"] = "id"; d["lambda"] = g.lam; break;
        case Fam::LGen:    d["fam"] = "L";  d["i"] = g.i; d["j"] = g.j; break;
        case Fam::KPow:    d["fam"] = "K";  d["i"] = g.i; d["e"] = g.s; break;
        case Fam::KBr:     d["fam"] = "Kc"; d["i"] = g.i; d["c"] = g.c; d["t"] = g.s; break;
        case Fam::KBar:    d["fam"] = "Kb"; d["i"] = g.i; break;
        case Fam::QX:      d["fam"] = "X";  d["i"] = g.i; d["j"] = g.j; d["s"] = g.s; break;
        case Fam::QXbar:   d["fam"] = "Xb"; d["i"] = g.i; d["j"] = g.j; break;
        case Fam::QIdem:   d["fam"] = "ID"; d["lambda"] = g.lam; break;
        case Fam::SgS:     d["fam"] = "sgs"; d["i"] = g.i; break;
        case Fam::SgC:     d["fam"] = "sgc"; d["i"] = g.i; break;
        case Fam::HcT:     d["fam"] = "hct"; d["i"] = g.i; break;
        case Fam::HcC:     d["fam"] = "hcc"; d["i"] = g.i; break;
    }
    return d;
}

inline Gen gen_from_json(const nlohmann::json& d) {
    const std::string fam = d.at("fam").get<std::string>();
    auto geti = [&](const char* k) { return d.at(k).get<int>(); };
    if (fam == "hc") return binom_h(geti("i"), geti("s"));
    if (fam == "hb") return hbar(geti("i"));
    if (fam == "x") return cx(geti("i"), geti("j"), geti("s"));
    if (fam == "xb") return cxbar(geti("i"), geti("j"));
    if (fam == "id") return cidem(d.at("lambda").get<std::vector<int>>());
    if (fam == "L") return lgen(geti("i"), geti("j"));
    if (fam == "K") return kpow(geti("i"), geti("e"));
    if (fam == "Kc") return kbr(geti("i"), geti("c"), geti("t"));
    if (fam == "Kb") return kbar(geti("i"));
    if (fam == "X") return qx(geti("i"), geti("j"), geti("s"));
    if (fam == "Xb") return qxbar(geti("i"), geti("j"));
    if (fam == "ID") return qidem(d.at("lambda").get<std::vector<int>>());
    if (fam == "sgs") return sg_s(geti("i"));
    if (fam == "sgc") return sg_c(geti("i"));
    if (fam == "hct") return hc_t(geti("i"));
    if (fam == "hcc") return hc_c(geti("i"));
    throw std::invalid_argument("gen_from_json: unknown family '" + fam + "'");
}

inline nlohmann::json element_to_json(const Element& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : e.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (const auto& g : w) word.push_back(gen_to_json(g));
        terms.push_back({{"word", std::move(word)}, {"coeff", c.str()}});
    }
    return terms;
}

inline Element element_from_json(const nlohmann::json& j) {
    Element e;
    for (const auto& term : j) {
        Word w;
        for (const auto& d : term.at("word")) w.push_back(gen_from_json(d));
        e.add(std::move(w), parse_scalar(term.at("coeff").get<std::string>()));
    }
    return e;
}

}  // namespace qk

#endif  // QUEERKIT_ELEMENT_HPP
