#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: naive cofactor determinants, the continuant recurrence for path
// graphs, and a breadth-first closure for word equivalence.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hob/matrix.hpp"
#include "hob/plumbing.hpp"
#include "hob/twistword.hpp"

namespace oracles {

// Laplace expansion along the first row. Exponential; keep n small.
inline hob::Int cofactor_determinant(const hob::IntegerMatrix& m) {
    if (!m.square()) throw hob::DomainError("cofactor oracle needs a square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return hob::Int(1);
    if (n == 1) return m.at(0, 0);
    hob::Int det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        hob::IntegerMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        hob::Int term = m.at(0, j) * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Determinant of the linking matrix of a path graph by the three-term
// continuant recurrence (cofactor expansion along the last row).
inline hob::Int path_determinant(const hob::PlumbingGraph& g) {
    using namespace hob;
    if (g.vertices.empty()) return Int(1);
    for (const PlumbingVertex& v : g.vertices)
        if (g.degree(v.id) > 2) throw DomainError("continuant oracle needs a path");
    if (!g.connected() || g.edges.size() + 1 != g.vertices.size())
        throw DomainError("continuant oracle needs a path");
    // Walk from an endpoint.
    std::string cur;
    for (const PlumbingVertex& v : g.vertices)
        if (g.degree(v.id) <= 1) { cur = v.id; break; }
    std::vector<long long> diag;
    std::string prev;
    while (true) {
        diag.push_back(g.vertices[g.index_of(cur)].euler);
        std::string next;
        bool have_next = false;
        for (const std::string& n : g.neighbors(cur)) {
            if (n == prev) continue;
            next = n;
            have_next = true;
        }
        if (!have_next) break;
        prev = cur;
        cur = next;
    }
    Int d_prev(1), d_cur = make_int(diag[0]);
    for (std::size_t i = 1; i < diag.size(); ++i) {
        Int d_next = make_int(diag[i]) * d_cur - d_prev;
        d_prev = d_cur;
        d_cur = d_next;
    }
    return d_cur;
}

// Closure of a word under adjacent declared-disjoint swaps and adjacent
// same-curve merges. Two words are equivalent iff their closures intersect
// (both contain the common reduced-trace linearizations).
using FlatWord = std::vector<std::pair<std::string, long long>>;

inline FlatWord flatten(const std::vector<hob::Letter>& letters) {
    FlatWord w;
    for (const hob::Letter& l : letters) w.emplace_back(l.curve, l.exponent);
    return w;
}

inline std::set<FlatWord> bfs_closure(const hob::TwistWord& start, std::size_t limit = 200000) {
    std::set<FlatWord> seen;
    std::vector<FlatWord> queue{flatten(start.letters)};
    seen.insert(queue.front());
    while (!queue.empty() && seen.size() < limit) {
        FlatWord w = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].first == w[i + 1].first) {
                FlatWord next = w;
                next[i].second += next[i + 1].second;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                if (next[i].second == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                if (seen.insert(next).second) queue.push_back(next);
            } else if (start.disjoint(w[i].first, w[i + 1].first)) {
                FlatWord next = w;
                std::swap(next[i], next[i + 1]);
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return seen;
}

inline bool bfs_equivalent(const hob::TwistWord& a, const hob::TwistWord& b) {
    hob::TwistWord ctx;
    ctx.declared_disjoint = a.declared_disjoint;
    ctx.declared_disjoint.insert(b.declared_disjoint.begin(), b.declared_disjoint.end());
    hob::TwistWord wa = ctx, wb = ctx;
    wa.letters = a.letters;
    wb.letters = b.letters;
    std::set<FlatWord> ca = bfs_closure(wa);
    std::set<FlatWord> cb = bfs_closure(wb);
    for (const FlatWord& w : ca)
        if (cb.count(w)) return true;
    return false;
}

} // namespace oracles
