#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hob/errors.hpp"
#include "hob/homology.hpp"
#include "hob/matrix.hpp"
#include "hob/openbook.hpp"
#include "hob/plumbing.hpp"
#include "hob/rational.hpp"
#include "hob/seifert.hpp"
#include "hob/twistword.hpp"

namespace hob {

using nlohmann::json;

// JSON documents are the stable interface: objects emit with sorted keys (the
// default nlohmann object is ordered), integers as JSON numbers when they fit
// in 64 bits and as decimal strings otherwise, rationals as [num, den] pairs
// with positive reduced denominators.

namespace detail {

inline json int_to_json(const Int& v) {
    if (fits_int64(v)) return json(to_int64(v));
    return json(v.get_str());
}

inline Int int_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError(field, "not an integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw SchemaError(field, "expected an integer");
}

inline long long int64_from_json(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
    return j.get<std::int64_t>();
}

inline const json& member(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + "." + key, "missing field");
    return *it;
}

} // namespace detail

// --- rationals ---------------------------------------------------------------

inline json rational_to_json(const Rat& q) {
    return json::array({detail::int_to_json(Int(q.get_num())), detail::int_to_json(Int(q.get_den()))});
}

inline Rat rational_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(field, "expected a [numerator, denominator] pair");
    Int num = detail::int_from_json(j[0], field + "[0]");
    Int den = detail::int_from_json(j[1], field + "[1]");
    if (den <= 0) throw SchemaError(field, "denominator must be positive");
    if (gcd(num, den) != 1) throw SchemaError(field, "fraction not in lowest terms");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// --- Seifert invariants -------------------------------------------------------

inline json invariants_to_json(const SeifertInvariants& inv) {
    json coeffs = json::array();
    for (const Rat& r : inv.coefficients) coeffs.push_back(rational_to_json(r));
    return json{{"genus", inv.genus}, {"euler", inv.euler}, {"coefficients", coeffs}};
}

inline SeifertInvariants invariants_from_json(const json& j) {
    SeifertInvariants inv;
    inv.genus = detail::int64_from_json(detail::member(j, "genus", "invariants"), "genus");
    if (inv.genus < 0) throw SchemaError("genus", "must be non-negative");
    inv.euler = detail::int64_from_json(detail::member(j, "euler", "invariants"), "euler");
    const json& coeffs = detail::member(j, "coefficients", "invariants");
    if (!coeffs.is_array()) throw SchemaError("coefficients", "expected an array");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::string field = "coefficients[" + std::to_string(i) + "]";
        Rat r = rational_from_json(coeffs[i], field);
        if (r == 0) throw SchemaError(field, "coefficient must be nonzero");
        inv.coefficients.push_back(r);
    }
    return inv;
}

// --- plumbing graphs ----------------------------------------------------------

inline json graph_to_json(const PlumbingGraph& g) {
    json vertices = json::array();
    for (const PlumbingVertex& v : g.vertices)
        vertices.push_back(json{{"id", v.id}, {"euler", v.euler}, {"genus", v.genus}});
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back(json::array({e.first, e.second}));
    return json{{"vertices", vertices}, {"edges", edges}};
}

inline PlumbingGraph graph_from_json(const json& j) {
    PlumbingGraph g;
    const json& vertices = detail::member(j, "vertices", "graph");
    if (!vertices.is_array()) throw SchemaError("vertices", "expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::string field = "vertices[" + std::to_string(i) + "]";
        const json& v = vertices[i];
        PlumbingVertex pv;
        const json& id = detail::member(v, "id", field);
        if (!id.is_string()) throw SchemaError(field + ".id", "expected a string");
        pv.id = id.get<std::string>();
        pv.euler = detail::int64_from_json(detail::member(v, "euler", field), field + ".euler");
        pv.genus = detail::int64_from_json(detail::member(v, "genus", field), field + ".genus");
        if (pv.genus < 0) throw SchemaError(field + ".genus", "must be non-negative");
        if (g.find(pv.id)) throw SchemaError(field + ".id", "duplicate vertex id " + pv.id);
        g.vertices.push_back(pv);
    }
    const json& edges = detail::member(j, "edges", "graph");
    if (!edges.is_array()) throw SchemaError("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string field = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw SchemaError(field, "expected a pair of vertex ids");
        std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
        if (!g.find(a)) throw SchemaError(field, "unknown vertex id " + a);
        if (!g.find(b)) throw SchemaError(field, "unknown vertex id " + b);
        if (a == b) throw SchemaError(field, "self-loops are not allowed");
        g.edges.push_back(make_edge(a, b));
    }
    if (!g.connected()) throw SchemaError("graph", "graph must be connected");
    g.sort_edges();
    return g;
}

// --- transcripts ----------------------------------------------------------------

inline json transcript_to_json(const Transcript& t) {
    json out = json::array();
    for (const Move& m : t) {
        if (m.kind == Move::BlowUpEdge)
            out.push_back(json{{"move", "blow_up_edge"},
                               {"target", json::array({m.edge.first, m.edge.second})}});
        else
            out.push_back(json{{"move", "blow_down"}, {"target", m.vertex}});
    }
    return out;
}

inline Transcript transcript_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("transcript", "expected an array");
    Transcript t;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string field = "transcript[" + std::to_string(i) + "]";
        const json& m = j[i];
        const json& move = detail::member(m, "move", field);
        const json& target = detail::member(m, "target", field);
        if (move == "blow_up_edge") {
            if (!target.is_array() || target.size() != 2 || !target[0].is_string() ||
                !target[1].is_string())
                throw SchemaError(field + ".target", "expected a pair of vertex ids");
            t.push_back({Move::BlowUpEdge,
                         make_edge(target[0].get<std::string>(), target[1].get<std::string>()), ""});
        } else if (move == "blow_down") {
            if (!target.is_string()) throw SchemaError(field + ".target", "expected a vertex id");
            t.push_back({Move::BlowDown, {}, target.get<std::string>()});
        } else {
            throw SchemaError(field + ".move", "unknown move");
        }
    }
    return t;
}

// --- matrices --------------------------------------------------------------------

inline json matrix_to_json(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(detail::int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline IntegerMatrix matrix_from_json(const json& j) {
    long long rows = detail::int64_from_json(detail::member(j, "rows", "matrix"), "rows");
    long long cols = detail::int64_from_json(detail::member(j, "cols", "matrix"), "cols");
    if (rows < 0 || cols < 0) throw SchemaError("matrix", "negative dimension");
    const json& entries = detail::member(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
        throw SchemaError("entries", "expected " + std::to_string(rows) + " rows");
    IntegerMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        const json& row = entries[i];
        std::string field = "entries[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != m.cols)
            throw SchemaError(field, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < m.cols; ++k)
            m.at(i, k) = detail::int_from_json(row[k], field + "[" + std::to_string(k) + "]");
    }
    return m;
}

// --- words and open books -----------------------------------------------------------

inline json word_to_json(const TwistWord& w) {
    json letters = json::array();
    for (const Letter& l : w.letters) letters.push_back(json::array({l.curve, l.exponent}));
    return letters;
}

inline TwistWord word_from_json(const json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError(field, "expected an array of [curve, exponent] pairs");
    TwistWord w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string where = field + "[" + std::to_string(i) + "]";
        const json& l = j[i];
        if (!l.is_array() || l.size() != 2 || !l[0].is_string())
            throw SchemaError(where, "expected a [curve, exponent] pair");
        long long e = detail::int64_from_json(l[1], where + "[1]");
        if (e == 0) throw SchemaError(where, "exponent must be nonzero");
        w.append(l[0].get<std::string>(), e);
    }
    return w;
}

inline json open_book_to_json(const OpenBook& ob) {
    return json{{"genus", ob.page_genus},
                {"boundary_exponents", ob.boundary_exponents},
                {"extra_word", word_to_json(ob.extra_word)}};
}

inline OpenBook open_book_from_json(const json& j) {
    OpenBook ob;
    ob.page_genus = detail::int64_from_json(detail::member(j, "genus", "openbook"), "genus");
    if (ob.page_genus < 0) throw SchemaError("genus", "must be non-negative");
    const json& exps = detail::member(j, "boundary_exponents", "openbook");
    if (!exps.is_array()) throw SchemaError("boundary_exponents", "expected an array");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long long m = detail::int64_from_json(exps[i],
                                              "boundary_exponents[" + std::to_string(i) + "]");
        if (m == 0)
            throw SchemaError("boundary_exponents[" + std::to_string(i) + "]",
                              "exponent must be nonzero");
        ob.boundary_exponents.push_back(m);
    }
    ob.extra_word = word_from_json(detail::member(j, "extra_word", "openbook"), "extra_word");
    return ob;
}

inline json presentation_to_json(const SurgeryPresentation& p) {
    json surgeries = json::array();
    for (const auto& [curve, sign] : p.surgeries) surgeries.push_back(json::array({curve, sign}));
    return json{{"base", open_book_to_json(p.base)}, {"surgeries", surgeries}};
}

inline SurgeryPresentation presentation_from_json(const json& j) {
    SurgeryPresentation p;
    p.base = open_book_from_json(detail::member(j, "base", "presentation"));
    const json& surgeries = detail::member(j, "surgeries", "presentation");
    if (!surgeries.is_array()) throw SchemaError("surgeries", "expected an array");
    for (std::size_t i = 0; i < surgeries.size(); ++i) {
        std::string field = "surgeries[" + std::to_string(i) + "]";
        const json& s = surgeries[i];
        if (!s.is_array() || s.size() != 2 || !s[0].is_string())
            throw SchemaError(field, "expected a [curve, sign] pair");
        long long sign = detail::int64_from_json(s[1], field + "[1]");
        if (sign != 1 && sign != -1) throw SchemaError(field + "[1]", "sign must be +1 or -1");
        p.surgeries.emplace_back(s[0].get<std::string>(), static_cast<int>(sign));
    }
    return p;
}

// --- groups and classifications ------------------------------------------------------

inline json group_to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const Int& t : g.torsion) torsion.push_back(detail::int_to_json(t));
    return json{{"rank", g.rank}, {"torsion", torsion}, {"pretty", g.to_string()}};
}

inline json classification_to_json(const Classification& c) {
    return json{{"seifert_fibered", c.seifert_fibered},
                {"horizontal_realizable", c.horizontal_realizable},
                {"stein_fillable", c.stein_fillable},
                {"tight_incompatible", c.tight_incompatible},
                {"exceptional_case", c.exceptional_case}};
}

// --- DOT -------------------------------------------------------------------------------

// Graphviz emission; node order follows vertex order, edge order the sorted
// edge list, so output is byte-stable.
inline std::string graph_to_dot(const PlumbingGraph& g) {
    std::string out = "graph plumbing {\n";
    for (const PlumbingVertex& v : g.vertices)
        out += "  \"" + v.id + "\" [label=\"e=" + std::to_string(v.euler) +
               ", g=" + std::to_string(v.genus) + "\"];\n";
    for (const Edge& e : g.edges) out += "  \"" + e.first + "\" -- \"" + e.second + "\";\n";
    out += "}\n";
    return out;
}

} // namespace hob
