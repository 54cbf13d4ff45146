#ifndef QUEERKIT_REWRITE_HPP
#define QUEERKIT_REWRITE_HPP

// Generic fuel-bounded rewrite engine on words.  Rules match single
// generators or adjacent pairs and replace the matched subword by an element.
// A graded word order (degree, then inversion count of the flattened class
// sequence, then lex) selects which word to reduce next; fuel bounds the
// total number of steps and exhaustion signals a mis-ordered rule set.

#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "element.hpp"

namespace qk {

struct FuelExhausted : std::runtime_error {
    explicit FuelExhausted(const std::string& what) : std::runtime_error(what) {}
};

enum class Strategy { Leftmost, Rightmost };

namespace detail {

struct Redex {
    size_t pos = 0;
    size_t len = 0;  // 1 or 2; 0 encodes a whole-word rule
    Element replacement;
};

}  // namespace detail

struct RewriteSystem {
    std::string name;

    // replacement for a single letter, or nullopt if irreducible
    std::function<std::optional<Element>(const Gen&)> unit_rule;
    // replacement for an adjacent pair, or nullopt if the pair is irreducible
    std::function<std::optional<Element>(const Gen&, const Gen&)> pair_rule;
    // replacement for a whole word matched as-is (used for idempotent
    // resolution of identity in the quotient systems); applied once per word
    std::function<std::optional<Element>(const Word&)> word_rule;

    // position class of a letter in the target normal order
    std::function<int(const Gen&)> klass;
    // contribution of a letter to the graded degree
    std::function<long(const Gen&)> degree;
    // multiplicity of a letter in the flattened class sequence
    std::function<int(const Gen&)> multiplicity;

    long fuel = default_fuel();

    // caches shared across normal_form calls on the same system
    mutable std::shared_ptr<std::unordered_set<Word, WordHash>> irreducible_memo =
        std::make_shared<std::unordered_set<Word, WordHash>>();
    mutable std::shared_ptr<std::unordered_map<Word, detail::Redex, WordHash>> redex_cache[2] = {
        std::make_shared<std::unordered_map<Word, detail::Redex, WordHash>>(),
        std::make_shared<std::unordered_map<Word, detail::Redex, WordHash>>()};

    static long default_fuel() {
        if (const char* env = std::getenv("QUEERKIT_FUEL")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 1000000;
    }

    long word_degree(const Word& w) const {
        long d = 0;
        for (const auto& g : w) d += degree(g);
        return d;
    }

    long word_inversions(const Word& w) const {
        // inversion count of the flattened class sequence
        std::vector<std::pair<int, int>> units;  // (class, multiplicity)
        units.reserve(w.size());
        for (const auto& g : w) units.emplace_back(klass(g), multiplicity(g));
        long inv = 0;
        for (size_t p = 0; p < units.size(); ++p)
            for (size_t q = p + 1; q < units.size(); ++q)
                if (units[p].first > units[q].first)
                    inv += static_cast<long>(units[p].second) * units[q].second;
        return inv;
    }

    // strict word order used to pick the next word to reduce
    bool word_less(const Word& a, const Word& b) const {
        long da = word_degree(a), db = word_degree(b);
        if (da != db) return da < db;
        long ia = word_inversions(a), ib = word_inversions(b);
        if (ia != ib) return ia < ib;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

namespace detail {

inline std::optional<Redex> find_redex(const Word& w, const RewriteSystem& sys, Strategy strat) {
    if (sys.word_rule) {
        if (auto r = sys.word_rule(w)) return Redex{0, 0, std::move(*r)};
    }
    const size_t n = w.size();
    // pair rules take precedence so that whole products of interacting
    // letters normalize in one step (single-letter expansions would other-
    // wise fight the pairwise merges)
    auto try_at = [&](size_t p) -> std::optional<Redex> {
        if (sys.pair_rule && p + 1 < n) {
            if (auto r = sys.pair_rule(w[p], w[p + 1])) return Redex{p, 2, std::move(*r)};
        }
        if (sys.unit_rule) {
            if (auto r = sys.unit_rule(w[p])) return Redex{p, 1, std::move(*r)};
        }
        return std::nullopt;
    };
    if (strat == Strategy::Leftmost) {
        for (size_t p = 0; p < n; ++p)
            if (auto r = try_at(p)) return r;
    } else {
        for (size_t p = n; p-- > 0;)
            if (auto r = try_at(p)) return r;
    }
    return std::nullopt;
}

// cached classification of a word as irreducible or as a redex site
inline const Redex* classify(const Word& w, const RewriteSystem& sys, Strategy strat) {
    if (sys.irreducible_memo->count(w)) return nullptr;
    auto& cache = *sys.redex_cache[strat == Strategy::Rightmost ? 1 : 0];
    auto it = cache.find(w);
    if (it != cache.end()) return &it->second;
    auto r = find_redex(w, sys, strat);
    if (!r) {
        sys.irreducible_memo->insert(w);
        return nullptr;
    }
    auto [ins, fresh] = cache.emplace(w, std::move(*r));
    return &ins->second;
}

}  // namespace detail

// Repeatedly applies the first applicable rule to the word-order-largest
// reducible word until no word is reducible.
inline Element normal_form(const Element& x, const RewriteSystem& sys,
                           Strategy strat = Strategy::Leftmost) {
    Element cur = x;
    long fuel = sys.fuel;
    auto cmp = [&sys](const Word& a, const Word& b) { return sys.word_less(a, b); };
    std::set<Word, decltype(cmp)> pending(cmp);
    for (const auto& [w, c] : cur.terms())
        if (detail::classify(w, sys, strat)) pending.insert(w);
    while (!pending.empty()) {
        Word w = *pending.rbegin();
        pending.erase(std::prev(pending.end()));
        auto it = cur.terms().find(w);
        if (it == cur.terms().end()) continue;  // coefficient cancelled meanwhile
        const detail::Redex* redex = detail::classify(w, sys, strat);
        if (!redex) continue;
        if (--fuel < 0)
            throw FuelExhausted("normal_form: fuel exhausted in system '" + sys.name +
                                "' (mis-ordered rule set?)");
        Scalar c = it->second;
        Element replaced;
        if (redex->len == 0) {
            replaced = redex->replacement;
        } else {
            Element prefix(Word(w.begin(), w.begin() + static_cast<long>(redex->pos)));
            Element suffix(Word(w.begin() + static_cast<long>(redex->pos + redex->len), w.end()));
            replaced = multiply(multiply(prefix, redex->replacement), suffix);
        }
        cur.add(w, -c);
        for (const auto& [nw, nc] : replaced.terms()) {
            cur.add(nw, c * nc);
            if (cur.terms().count(nw) && detail::classify(nw, sys, strat)) pending.insert(nw);
        }
    }
    return cur;
}

// a word is in normal form iff no rule applies anywhere
inline bool is_irreducible(const Word& w, const RewriteSystem& sys) {
    return detail::classify(w, sys, Strategy::Leftmost) == nullptr;
}

}  // namespace qk

#endif  // QUEERKIT_REWRITE_HPP
