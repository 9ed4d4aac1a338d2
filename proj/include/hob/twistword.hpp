#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hob/errors.hpp"

namespace hob {

// One block t_curve^exponent of a Dehn twist word. Exponents are nonzero.
struct Letter {
    std::string curve;
    long long exponent = 0;

    bool operator==(const Letter& o) const { return curve == o.curve && exponent == o.exponent; }
};

// Lantern relation t_a t_b t_c t_d = t_x t_y t_z on a 4-holed sphere:
// boundary curves (a,b,c,d), interior curves (x,y,z).
struct LanternConfig {
    std::array<std::string, 4> boundary;
    std::array<std::string, 3> interior;

    bool operator==(const LanternConfig& o) const {
        return boundary == o.boundary && interior == o.interior;
    }
};

struct RewriteRecord {
    std::string kind;  // "lantern" or "lantern_inverse"
    LanternConfig config;
    std::size_t position = 0;
};

using CurvePair = std::pair<std::string, std::string>;

inline CurvePair curve_pair(const std::string& a, const std::string& b) {
    return a <= b ? CurvePair{a, b} : CurvePair{b, a};
}

// Formal word in Dehn twists over a symbolic curve alphabet. Word equality is
// tracked modulo an explicit rewrite system only: free reduction, transposition
// of letters whose curves are declared disjoint, and declared lantern
// configurations. No mapping class group word problem is solved.
//
// Representation invariant: adjacent letters with equal curve are merged and
// zero exponents dropped.
struct TwistWord {
    std::vector<Letter> letters;
    std::set<CurvePair> declared_disjoint;
    std::vector<LanternConfig> lantern_configs;
    std::vector<RewriteRecord> provenance;  // metadata; not part of equality

    bool disjoint(const std::string& a, const std::string& b) const {
        return a != b && declared_disjoint.count(curve_pair(a, b)) > 0;
    }

    void declare_disjoint(const std::string& a, const std::string& b) {
        if (a != b) declared_disjoint.insert(curve_pair(a, b));
    }

    void declare_lantern(const LanternConfig& config) {
        std::set<std::string> names(config.boundary.begin(), config.boundary.end());
        names.insert(config.interior.begin(), config.interior.end());
        if (names.size() != 7) throw DomainError("lantern configuration repeats a curve");
        lantern_configs.push_back(config);
    }

    void append(const std::string& curve, long long exponent) {
        if (exponent == 0) return;
        if (!letters.empty() && letters.back().curve == curve) {
            letters.back().exponent += exponent;
            if (letters.back().exponent == 0) letters.pop_back();
            return;
        }
        letters.push_back({curve, exponent});
    }

    void append(const Letter& l) { append(l.curve, l.exponent); }

    bool operator==(const TwistWord& o) const {
        return letters == o.letters && declared_disjoint == o.declared_disjoint &&
               lantern_configs == o.lantern_configs;
    }
};

inline TwistWord make_word(const std::vector<Letter>& letters,
                           const std::set<CurvePair>& disjoint = {}) {
    TwistWord w;
    w.declared_disjoint = disjoint;
    for (const Letter& l : letters) w.append(l);
    return w;
}

// Total exponent per curve. Invariant under free reduction and transposition;
// a lantern rewrite shifts it by its documented delta (boundary -1 each,
// interior +1 each).
inline std::map<std::string, long long> word_exponent_vector(const TwistWord& w) {
    std::map<std::string, long long> v;
    for (const Letter& l : w.letters) {
        v[l.curve] += l.exponent;
        if (v[l.curve] == 0) v.erase(l.curve);
    }
    return v;
}

// --- equivalence ----------------------------------------------------------

namespace detail {

// Merge every pair of same-curve blocks separated only by letters disjoint
// from that curve, to exhaustion. Yields the reduced trace of the word.
inline std::vector<Letter> trace_reduce(std::vector<Letter> ls, const TwistWord& ctx) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ls.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                if (ls[j].curve == ls[i].curve) {
                    ls[i].exponent += ls[j].exponent;
                    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(j));
                    if (ls[i].exponent == 0)
                        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    break;
                }
                if (!ctx.disjoint(ls[i].curve, ls[j].curve)) break;
            }
        }
    }
    return ls;
}

// Lexicographically least linearization of a reduced trace: repeatedly emit
// the smallest curve whose block commutes past everything before it.
inline std::vector<Letter> lex_min_linearization(std::vector<Letter> ls, const TwistWord& ctx) {
    std::vector<Letter> out;
    out.reserve(ls.size());
    while (!ls.empty()) {
        std::size_t best = ls.size();
        for (std::size_t j = 0; j < ls.size(); ++j) {
            bool available = true;
            for (std::size_t i = 0; i < j && available; ++i)
                available = ctx.disjoint(ls[i].curve, ls[j].curve);
            if (available && (best == ls.size() || ls[j].curve < ls[best].curve)) best = j;
        }
        out.push_back(ls[best]);
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

} // namespace detail

// Canonical representative of the word modulo free reduction and declared
// transpositions. Two words are equivalent iff their canonical letters agree
// (under the same disjointness declarations).
inline std::vector<Letter> canonical_letters(const TwistWord& w) {
    return detail::lex_min_linearization(detail::trace_reduce(w.letters, w), w);
}

inline bool words_equivalent(const TwistWord& a, const TwistWord& b) {
    TwistWord ctx;
    ctx.declared_disjoint = a.declared_disjoint;
    ctx.declared_disjoint.insert(b.declared_disjoint.begin(), b.declared_disjoint.end());
    TwistWord wa = ctx, wb = ctx;
    wa.letters = a.letters;
    wb.letters = b.letters;
    return canonical_letters(wa) == canonical_letters(wb);
}

// --- lantern rewriting ------------------------------------------------------

namespace detail {

// A window matches a target curve order up to declared transpositions iff
// every pair appearing out of order is declared disjoint (adjacent-swap
// sorting touches exactly the inverted pairs).
template <std::size_t N>
inline bool window_matches(const TwistWord& w, std::size_t position,
                           const std::array<std::string, N>& target) {
    if (position + N > w.letters.size()) return false;
    std::array<std::size_t, N> rank;
    for (std::size_t i = 0; i < N; ++i) {
        const Letter& l = w.letters[position + i];
        if (l.exponent != 1) return false;
        auto it = std::find(target.begin(), target.end(), l.curve);
        if (it == target.end()) return false;
        rank[i] = static_cast<std::size_t>(it - target.begin());
    }
    std::set<std::size_t> seen(rank.begin(), rank.end());
    if (seen.size() != N) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (rank[i] > rank[j] &&
                !w.disjoint(w.letters[position + i].curve, w.letters[position + j].curve))
                return false;
    return true;
}

template <std::size_t From, std::size_t To>
inline TwistWord splice_window(const TwistWord& w, std::size_t position,
                               const std::array<std::string, To>& replacement) {
    TwistWord out;
    out.declared_disjoint = w.declared_disjoint;
    out.lantern_configs = w.lantern_configs;
    out.provenance = w.provenance;
    for (std::size_t i = 0; i < position; ++i) out.append(w.letters[i]);
    for (const std::string& c : replacement) out.append(c, 1);
    for (std::size_t i = position + From; i < w.letters.size(); ++i) out.append(w.letters[i]);
    return out;
}

inline void require_declared(const TwistWord& w, const LanternConfig& config) {
    if (std::find(w.lantern_configs.begin(), w.lantern_configs.end(), config) ==
        w.lantern_configs.end())
        throw DomainError("lantern configuration not declared on this word");
}

} // namespace detail

// Replace the block t_a t_b t_c t_d (each exponent +1, up to declared
// transpositions) at `position` by t_x t_y t_z.
inline TwistWord lantern_rewrite(const TwistWord& w, const LanternConfig& config,
                                 std::size_t position) {
    detail::require_declared(w, config);
    if (!detail::window_matches(w, position, config.boundary))
        throw DomainError("lantern boundary block not present at position " +
                          std::to_string(position));
    TwistWord out = detail::splice_window<4, 3>(w, position, config.interior);
    out.provenance.push_back({"lantern", config, position});
    return out;
}

// Inverse rewrite: t_x t_y t_z back to t_a t_b t_c t_d.
inline TwistWord lantern_rewrite_inverse(const TwistWord& w, const LanternConfig& config,
                                         std::size_t position) {
    detail::require_declared(w, config);
    if (!detail::window_matches(w, position, config.interior))
        throw DomainError("lantern interior block not present at position " +
                          std::to_string(position));
    TwistWord out = detail::splice_window<3, 4>(w, position, config.boundary);
    out.provenance.push_back({"lantern_inverse", config, position});
    return out;
}

// --- stabilization ----------------------------------------------------------

// Caller-owned fresh-symbol source, so stabilization stays re-entrant.
struct FreshSymbols {
    std::string prefix = "s";
    long long next = 1;

    std::string fresh() { return prefix + std::to_string(next++); }

    std::string fresh_avoiding(const TwistWord& w) {
        while (true) {
            std::string s = fresh();
            bool used = std::any_of(w.letters.begin(), w.letters.end(),
                                    [&](const Letter& l) { return l.curve == s; });
            if (!used) return s;
        }
    }
};

struct StabilizationResult {
    long long page_genus = 0;
    TwistWord word;
    std::string symbol;
};

// Positive stabilization: page genus goes up by one, a right-handed twist
// along a fresh curve is appended, boundary count is untouched.
inline StabilizationResult positive_stabilization(long long page_genus, const TwistWord& w,
                                                  FreshSymbols& symbols) {
    StabilizationResult r{page_genus + 1, w, symbols.fresh_avoiding(w)};
    r.word.append(r.symbol, 1);
    return r;
}

} // namespace hob
