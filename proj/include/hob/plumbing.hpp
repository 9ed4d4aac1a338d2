#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hob/errors.hpp"
#include "hob/matrix.hpp"
#include "hob/rational.hpp"
#include "hob/seifert.hpp"

namespace hob {

struct PlumbingVertex {
    std::string id;
    long long euler = 0;
    long long genus = 0;

    bool operator==(const PlumbingVertex& o) const {
        return id == o.id && euler == o.euler && genus == o.genus;
    }
};

using Edge = std::pair<std::string, std::string>;

inline Edge make_edge(const std::string& a, const std::string& b) {
    return a <= b ? Edge{a, b} : Edge{b, a};
}

// Plumbing graph: vertices carry (Euler number, base genus), edges are an
// unordered multiset of vertex pairs without self-loops. Values are
// immutable; calculus moves return new graphs. Edges are stored normalized
// and sorted by current vertex order so equal graphs compare equal and all
// emission is byte-reproducible.
struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<Edge> edges;

    bool operator==(const PlumbingGraph& o) const {
        return vertices == o.vertices && edges == o.edges;
    }

    std::optional<std::size_t> find(const std::string& id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return i;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& id) const {
        if (auto i = find(id)) return *i;
        throw DomainError("unknown vertex id: " + id);
    }

    std::size_t degree(const std::string& id) const {
        std::size_t d = 0;
        for (const Edge& e : edges) d += (e.first == id) + (e.second == id);
        return d;
    }

    std::vector<std::string> neighbors(const std::string& id) const {
        std::vector<std::string> out;
        for (const Edge& e : edges) {
            if (e.first == id) out.push_back(e.second);
            if (e.second == id) out.push_back(e.first);
        }
        return out;
    }

    bool connected() const {
        if (vertices.empty()) return true;
        std::vector<bool> seen(vertices.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const std::string& w : neighbors(vertices[v].id)) {
                std::size_t j = index_of(w);
                if (!seen[j]) {
                    seen[j] = true;
                    stack.push_back(j);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    // Fresh ids are "v<N>" with N one past the largest numeric suffix in use,
    // so replayed transcripts regenerate identical labels.
    std::string fresh_label() const {
        long long next = 0;
        for (const PlumbingVertex& v : vertices) {
            if (v.id.size() < 2 || v.id[0] != 'v') continue;
            bool digits = true;
            for (std::size_t i = 1; i < v.id.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(v.id[i]))) { digits = false; break; }
            if (!digits) continue;
            long long n = std::stoll(v.id.substr(1));
            next = std::max(next, n + 1);
        }
        return "v" + std::to_string(next);
    }

    void sort_edges() {
        for (Edge& e : edges) e = make_edge(e.first, e.second);
        std::sort(edges.begin(), edges.end(), [this](const Edge& a, const Edge& b) {
            auto key = [this](const Edge& e) {
                std::size_t i = index_of(e.first), j = index_of(e.second);
                return std::pair(std::min(i, j), std::max(i, j));
            };
            return key(a) < key(b);
        });
    }
};

// Euler numbers along one linear branch, central-adjacent entry first.
struct Chain {
    std::vector<long long> entries;
};

// --- construction ---------------------------------------------------------

// Star diagram of an eligible (g, n; -1/p_1, ..., -1/p_k): central vertex
// (euler n, genus g) joined to k genus-0 leaves with euler p_i. The center is
// always vertex v0.
inline PlumbingGraph star_from_seifert(const SeifertInvariants& inv) {
    EligibilityReport report = validate_eligible(inv);
    if (!report.eligible) {
        std::string why = "not in eligible class";
        if (!report.reasons.empty()) why += " (" + report.reasons.front() + ")";
        throw DomainError(why);
    }
    PlumbingGraph g;
    g.vertices.push_back({"v0", inv.euler, inv.genus});
    for (std::size_t i = 0; i < report.p.size(); ++i) {
        std::string id = "v" + std::to_string(i + 1);
        g.vertices.push_back({id, report.p[i], 0});
        g.edges.push_back(make_edge("v0", id));
    }
    g.sort_edges();
    return g;
}

// --- calculus moves -------------------------------------------------------

// Blow up an edge: replace it by a fresh (-1)-framed genus-0 vertex joined to
// both endpoints, and decrement both endpoint Euler numbers.
inline PlumbingGraph blow_up_edge(const PlumbingGraph& g, const Edge& edge) {
    Edge e = make_edge(edge.first, edge.second);
    PlumbingGraph out = g;
    auto it = std::find(out.edges.begin(), out.edges.end(), e);
    if (it == out.edges.end()) throw DomainError("edge not in graph: " + e.first + "--" + e.second);
    out.edges.erase(it);
    std::string w = out.fresh_label();
    out.vertices[out.index_of(e.first)].euler -= 1;
    out.vertices[out.index_of(e.second)].euler -= 1;
    out.vertices.push_back({w, -1, 0});
    out.edges.push_back(make_edge(e.first, w));
    out.edges.push_back(make_edge(e.second, w));
    out.sort_edges();
    return out;
}

// Blow down a genus-0 vertex with euler +1 or -1 and valence <= 2: remove it,
// change each neighbor's Euler number by -euler, and rejoin the two neighbors
// when valence was 2. Inverse of blow_up_edge.
inline PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& id) {
    std::size_t vi = g.index_of(id);
    const PlumbingVertex& v = g.vertices[vi];
    if (v.genus != 0) throw DomainError("blow_down: vertex " + id + " has positive genus");
    if (v.euler != 1 && v.euler != -1)
        throw DomainError("blow_down: vertex " + id + " has euler " + std::to_string(v.euler) +
                          ", need +1 or -1");
    std::vector<std::string> nb = g.neighbors(id);
    if (nb.size() > 2) throw DomainError("blow_down: vertex " + id + " has valence > 2");
    if (nb.size() == 2 && nb[0] == nb[1])
        throw DomainError("blow_down: vertex " + id + " would create a self-loop");

    PlumbingGraph out = g;
    out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                   [&](const Edge& e) { return e.first == id || e.second == id; }),
                    out.edges.end());
    for (const std::string& n : nb) out.vertices[out.index_of(n)].euler -= v.euler;
    out.vertices.erase(out.vertices.begin() + static_cast<std::ptrdiff_t>(vi));
    if (nb.size() == 2) out.edges.push_back(make_edge(nb[0], nb[1]));
    out.sort_edges();
    return out;
}

// --- transcripts ----------------------------------------------------------

struct Move {
    enum Kind { BlowUpEdge, BlowDown } kind;
    Edge edge;           // BlowUpEdge target
    std::string vertex;  // BlowDown target

    bool operator==(const Move& o) const {
        return kind == o.kind && edge == o.edge && vertex == o.vertex;
    }
};

using Transcript = std::vector<Move>;

inline PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m) {
    return m.kind == Move::BlowUpEdge ? blow_up_edge(g, m.edge) : blow_down(g, m.vertex);
}

inline PlumbingGraph replay_transcript(const PlumbingGraph& g, const Transcript& t) {
    PlumbingGraph cur = g;
    for (const Move& m : t) cur = apply_move(cur, m);
    return cur;
}

struct NormalizeResult {
    PlumbingGraph graph;
    Transcript transcript;
};

// Normalization of the star diagram into non-positive standard form: blow
// down the (+1)-leaves, then repeatedly blow up along each branch until its
// tail reaches +1 and blow that down. Ends with central euler n'-k' and
// branch i equal to p_i - 1 vertices of euler -2. The transcript replays from
// star_from_seifert(inv) to the returned graph.
inline NormalizeResult normalize_to_standard(const SeifertInvariants& inv) {
    NormalizeResult result;
    PlumbingGraph g = star_from_seifert(inv);
    Transcript& t = result.transcript;

    auto record_blow_up = [&](const Edge& e) {
        Move m{Move::BlowUpEdge, make_edge(e.first, e.second), ""};
        g = blow_up_edge(g, m.edge);
        t.push_back(m);
    };
    auto record_blow_down = [&](const std::string& id) {
        Move m{Move::BlowDown, {}, id};
        g = blow_down(g, id);
        t.push_back(m);
    };

    std::size_t k = inv.k();
    for (std::size_t i = 0; i < k; ++i) {
        std::string leaf = "v" + std::to_string(i + 1);
        long long p = g.vertices[g.index_of(leaf)].euler;
        if (p == 1) {
            // p_i = 1: absorbing the coefficient is a single blow-down.
            record_blow_down(leaf);
            continue;
        }
        record_blow_up({"v0", leaf});
        // After each blow-up the fresh (-1)-vertex sits next to the tail.
        while (g.vertices[g.index_of(leaf)].euler > 1) {
            std::vector<std::string> nb = g.neighbors(leaf);
            record_blow_up({nb.front(), leaf});
        }
        record_blow_down(leaf);
    }
    result.graph = std::move(g);
    return result;
}

// --- predicates and invariants --------------------------------------------

namespace detail {

// Center of a star-shaped graph: the unique genus-carrying vertex if any,
// else the unique vertex of valence >= 3, else the first vertex (paths and
// single vertices). Constructors in this library always put the center at
// index 0.
inline std::optional<std::size_t> star_center(const PlumbingGraph& g) {
    if (g.vertices.empty()) return std::nullopt;
    std::optional<std::size_t> genus_vertex;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].genus > 0) {
            if (genus_vertex) return std::nullopt;  // two genus carriers: not a star
            genus_vertex = i;
        }
    }
    if (genus_vertex) return genus_vertex;
    std::optional<std::size_t> hub;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.degree(g.vertices[i].id) >= 3) {
            if (hub) return std::nullopt;
            hub = i;
        }
    }
    if (hub) return hub;
    return 0;
}

// Branches of a star graph as chains read central-adjacent first. Requires
// the graph to be a tree whose non-central vertices form simple paths
// hanging off the center.
inline std::vector<Chain> star_branches(const PlumbingGraph& g, std::size_t center) {
    if (!g.connected() || g.edges.size() + 1 != g.vertices.size())
        throw DomainError("not star-shaped: graph is not a tree");
    const std::string& c = g.vertices[center].id;
    std::vector<Chain> branches;
    for (const std::string& start : g.neighbors(c)) {
        Chain chain;
        std::string prev = c;
        std::string cur = start;
        while (true) {
            const PlumbingVertex& v = g.vertices[g.index_of(cur)];
            chain.entries.push_back(v.euler);
            std::vector<std::string> nb = g.neighbors(cur);
            if (nb.size() > 2)
                throw DomainError("not star-shaped: branch vertex " + cur + " has valence > 2");
            std::vector<std::string> onward;
            bool dropped_back_edge = false;
            for (const std::string& n : nb) {
                if (n == prev && !dropped_back_edge) {
                    dropped_back_edge = true;
                    continue;
                }
                onward.push_back(n);
            }
            if (onward.empty()) break;
            prev = cur;
            cur = onward.front();
        }
        branches.push_back(std::move(chain));
    }
    return branches;
}

} // namespace detail

// Whether the graph is a star: a tree with an admissible center whose
// complement consists of genus-0 simple paths.
inline bool is_star_shaped(const PlumbingGraph& g) {
    if (g.vertices.empty()) return false;
    auto center = detail::star_center(g);
    if (!center) return false;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (i != *center && g.vertices[i].genus != 0) return false;
    try {
        detail::star_branches(g, *center);
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

// Non-positive standard form: star-shaped, every non-central vertex genus 0
// with euler <= -2, and central euler n_c with n_c + k <= 0 (k = branch
// count). True iff some choice of center satisfies all of it.
inline bool is_nonpositive_standard(const PlumbingGraph& g) {
    if (g.vertices.empty()) return false;
    if (!g.connected()) return false;
    if (g.edges.size() != g.vertices.size() - 1) return false;  // must be a tree
    for (std::size_t c = 0; c < g.vertices.size(); ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < g.vertices.size() && ok; ++i) {
            if (i == c) continue;
            const PlumbingVertex& v = g.vertices[i];
            ok = v.genus == 0 && v.euler <= -2 && g.degree(v.id) <= 2;
        }
        if (!ok) continue;
        long long k = static_cast<long long>(g.degree(g.vertices[c].id));
        if (g.vertices[c].euler + k <= 0) return true;
    }
    return false;
}

// Symmetric linking (intersection) matrix in vertex order: diagonal = Euler
// numbers, off-diagonal = edge multiplicities.
inline IntegerMatrix linking_matrix(const PlumbingGraph& g) {
    IntegerMatrix m(g.vertices.size(), g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        m.at(i, i) = Int(std::to_string(g.vertices[i].euler));
    for (const Edge& e : g.edges) {
        std::size_t i = g.index_of(e.first), j = g.index_of(e.second);
        m.at(i, j) += 1;
        m.at(j, i) += 1;
    }
    return m;
}

// [a_1, ..., a_s] = a_1 - 1/(a_2 - 1/(... - 1/a_s)), evaluated exactly.
inline Rat branch_continued_fraction(const Chain& chain) {
    if (chain.entries.empty()) throw DomainError("empty chain");
    Rat value = make_rational(chain.entries.back());
    for (auto it = std::next(chain.entries.rbegin()); it != chain.entries.rend(); ++it) {
        if (value == 0) throw DomainError("degenerate chain");
        value = make_rational(*it) - 1 / value;
    }
    return value;
}

// e = n_c - sum_i 1/c_i over the branch continued fractions. Agrees exactly
// with seifert rational_euler on every graph the calculus produces.
inline Rat rational_euler_from_graph(const PlumbingGraph& g) {
    auto center = detail::star_center(g);
    if (!center) throw DomainError("not star-shaped: no admissible central vertex");
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (i != *center && g.vertices[i].genus != 0)
            throw DomainError("not star-shaped: branch vertex with positive genus");
    std::vector<Chain> branches = detail::star_branches(g, *center);
    Rat e = make_rational(g.vertices[*center].euler);
    for (const Chain& chain : branches) {
        Rat c = branch_continued_fraction(chain);
        if (c == 0) throw DomainError("branch continued fraction is zero");
        e -= 1 / c;
    }
    return e;
}

} // namespace hob
