#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hob/homology.hpp"
#include "hob/matrix.hpp"
#include "hob/openbook.hpp"
#include "hob/plumbing.hpp"
#include "hob/rational.hpp"
#include "hob/rng.hpp"
#include "hob/seifert.hpp"
#include "hob/twistword.hpp"

namespace hob {

// Cross-module invariance suite behind `check`. Every case is driven by a
// seeded Rng, so a fixed seed reproduces the report byte for byte.

struct PropertyResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string detail;  // first failure, empty when pass

    explicit PropertyResult(std::string name) : name(std::move(name)) {}

    void fail(long long case_index, const std::string& what) {
        if (!pass) return;
        pass = false;
        detail = "case " + std::to_string(case_index) + ": " + what;
    }
};

struct CheckReport {
    std::uint64_t seed = 0;
    long long cases = 0;
    std::vector<PropertyResult> properties;

    bool all_pass() const {
        return std::all_of(properties.begin(), properties.end(),
                           [](const PropertyResult& p) { return p.pass; });
    }
};

namespace checks {

inline SeifertInvariants random_eligible(Rng& rng) {
    SeifertInvariants inv;
    inv.genus = rng.range(0, 3);
    inv.euler = rng.range(-5, 0);
    long long k = rng.range(0, 5);
    for (long long i = 0; i < k; ++i)
        inv.coefficients.push_back(make_rational(-1, rng.range(1, 9)));
    return inv;
}

inline std::vector<long long> sorted_p(const SeifertInvariants& inv) {
    std::vector<long long> p = validate_eligible(inv).p;
    std::sort(p.begin(), p.end());
    return p;
}

inline PropertyResult canonicalize_invariants(Rng& rng, long long cases) {
    PropertyResult r{"canonicalize-invariants"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        SeifertInvariants canon = canonicalize(inv);
        if (!(canonicalize(canon) == canon)) r.fail(i, "canonicalize is not idempotent");
        if (!validate_eligible(canon).eligible) r.fail(i, "canonical form left eligible class");
        if (rational_euler(canon) != rational_euler(inv)) r.fail(i, "rational Euler number changed");
        for (const Rat& c : canon.coefficients)
            if (c == -1) r.fail(i, "p_i = 1 coefficient survived");
    }
    return r;
}

inline PropertyResult normalize_shape_law(Rng& rng, long long cases) {
    PropertyResult r{"normalize-shape-law"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        SeifertInvariants canon = canonicalize(inv);
        NormalizeResult norm = normalize_to_standard(inv);
        const PlumbingGraph& g = norm.graph;
        long long kprime = static_cast<long long>(canon.k());
        auto center = detail::star_center(g);
        if (!center || g.vertices[*center].id != "v0") {
            r.fail(i, "central vertex is not v0");
            continue;
        }
        if (g.vertices[*center].euler != canon.euler - kprime)
            r.fail(i, "central euler is not n' - k'");
        if (g.vertices[*center].genus != inv.genus) r.fail(i, "central genus changed");
        std::vector<Chain> branches = detail::star_branches(g, *center);
        std::vector<long long> lengths;
        for (const Chain& c : branches) {
            for (long long e : c.entries)
                if (e != -2) r.fail(i, "branch entry is not -2");
            lengths.push_back(static_cast<long long>(c.entries.size()) + 1);
        }
        std::sort(lengths.begin(), lengths.end());
        if (lengths != sorted_p(canon)) r.fail(i, "branch lengths do not match p_i - 1");
        if (!is_nonpositive_standard(g)) r.fail(i, "output is not non-positive standard");
    }
    return r;
}

inline PropertyResult calculus_invariance(Rng& rng, long long cases) {
    PropertyResult r{"calculus-invariance"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        PlumbingGraph star = star_from_seifert(inv);
        AbelianGroup h = first_homology(star);
        Rat e = rational_euler(inv);
        if (rational_euler_from_graph(star) != e) r.fail(i, "star Euler number disagrees");
        NormalizeResult norm = normalize_to_standard(inv);
        PlumbingGraph cur = star;
        for (std::size_t step = 0; step < norm.transcript.size(); ++step) {
            cur = apply_move(cur, norm.transcript[step]);
            if (!(first_homology(cur) == h)) {
                r.fail(i, "homology changed at move " + std::to_string(step));
                break;
            }
            if (rational_euler_from_graph(cur) != e) {
                r.fail(i, "Euler number changed at move " + std::to_string(step));
                break;
            }
        }
        if (!(first_homology(norm.graph) == h)) r.fail(i, "homology changed by normalization");
    }
    return r;
}

inline PropertyResult blowup_blowdown_inverse(Rng& rng, long long cases) {
    PropertyResult r{"blowup-blowdown-inverse"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        if (inv.k() == 0) inv.coefficients.push_back(make_rational(-1, 2));
        PlumbingGraph g = star_from_seifert(inv);
        const Edge& e = g.edges[static_cast<std::size_t>(
            rng.range(0, static_cast<long long>(g.edges.size()) - 1))];
        std::string fresh = g.fresh_label();
        PlumbingGraph up = blow_up_edge(g, e);
        if (!(blow_down(up, fresh) == g)) r.fail(i, "blow_down did not invert blow_up_edge");
        Int det_before = determinant(linking_matrix(g));
        Int det_after = determinant(linking_matrix(up));
        if (abs(det_before) != abs(det_after)) r.fail(i, "|det| changed under blow-up");
        AbelianGroup before = first_homology(g);
        AbelianGroup after = first_homology(up);
        if (!(before == after)) r.fail(i, "homology changed under blow-up");
    }
    return r;
}

inline PropertyResult transcript_replay(Rng& rng, long long cases) {
    PropertyResult r{"transcript-replay"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        NormalizeResult norm = normalize_to_standard(inv);
        PlumbingGraph replayed = replay_transcript(star_from_seifert(inv), norm.transcript);
        if (!(replayed == norm.graph)) r.fail(i, "replay does not reproduce the output graph");
    }
    return r;
}

inline PropertyResult euler_two_routes(Rng& rng, long long cases) {
    PropertyResult r{"euler-two-routes"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        SeifertInvariants inv = random_eligible(rng);
        Rat e = rational_euler(inv);
        if (rational_euler_from_graph(star_from_seifert(inv)) != e)
            r.fail(i, "star route disagrees");
        if (rational_euler_from_graph(normalize_to_standard(inv).graph) != e)
            r.fail(i, "standard-form route disagrees");
        if (rational_euler(canonicalize(inv)) != e) r.fail(i, "canonical route disagrees");
    }
    return r;
}

inline IntegerMatrix random_matrix(Rng& rng, long long max_dim, long long span) {
    IntegerMatrix m(static_cast<std::size_t>(rng.range(0, max_dim)),
                    static_cast<std::size_t>(rng.range(0, max_dim)));
    for (Int& e : m.entries) e = make_int(rng.range(-span, span));
    return m;
}

inline PropertyResult snf_soundness(Rng& rng, long long cases) {
    PropertyResult r{"snf-soundness"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        IntegerMatrix m = random_matrix(rng, 5, 4);
        SmithResult snf = smith_normal_form(m);
        if (!(snf.u * m * snf.v == snf.d)) r.fail(i, "U*m*V != D");
        if (abs(determinant(snf.u)) != 1) r.fail(i, "U is not unimodular");
        if (abs(determinant(snf.v)) != 1) r.fail(i, "V is not unimodular");
        Int prod(1);
        for (std::size_t a = 0; a < snf.d.rows; ++a)
            for (std::size_t b = 0; b < snf.d.cols; ++b) {
                if (a == b) continue;
                if (snf.d.at(a, b) != 0) r.fail(i, "D is not diagonal");
            }
        std::size_t steps = std::min(snf.d.rows, snf.d.cols);
        for (std::size_t t = 0; t < steps; ++t) {
            const Int& dt = snf.d.at(t, t);
            if (dt < 0) r.fail(i, "negative diagonal entry");
            if (t + 1 < steps) {
                const Int& dn = snf.d.at(t + 1, t + 1);
                if (dt == 0 && dn != 0) r.fail(i, "zero before nonzero in chain");
                if (dt != 0 && dn % dt != 0) r.fail(i, "divisibility chain broken");
            }
            prod *= dt;
        }
        if (m.square() && abs(determinant(m)) != abs(prod))
            r.fail(i, "|det| != product of diagonal");
    }
    return r;
}

inline PropertyResult gluing_matrix_law(Rng&, long long) {
    PropertyResult r{"gluing-matrix-law"};
    r.cases = 100;
    for (long long p = 1; p <= 100; ++p) {
        IntegerMatrix a = gluing_matrix(p);
        if (determinant(a) != 1) r.fail(p, "determinant is not 1");
        Int P(std::to_string(p));
        // p*mu - lambda must land on m = (1, 0).
        Int m0 = a.at(0, 0) * P - a.at(0, 1);
        Int m1 = a.at(1, 0) * P - a.at(1, 1);
        if (m0 != 1 || m1 != 0) r.fail(p, "p*mu - lambda does not map to m");
        // p*lambda - (p^2-1)*mu must land on l = (0, 1).
        Int q = P * P - 1;
        Int l0 = a.at(0, 1) * P - a.at(0, 0) * q;
        Int l1 = a.at(1, 1) * P - a.at(1, 0) * q;
        if (l0 != 0 || l1 != 1) r.fail(p, "p*lambda - (p^2-1)*mu does not map to l");
    }
    return r;
}

inline PropertyResult openbook_roundtrip(Rng& rng, long long cases) {
    PropertyResult r{"openbook-roundtrip"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        long long genus = rng.range(0, 3);
        long long count = rng.range(1, 6);
        std::vector<long long> exponents;
        for (long long j = 0; j < count; ++j) exponents.push_back(rng.range(1, 9));
        SeifertInvariants inv = seifert_from_boundary_word(genus, exponents);
        OpenBook ob = construct_horizontal_open_book(canonicalize(inv));
        if (ob.page_genus != genus) r.fail(i, "genus changed in round trip");
        std::vector<long long> got = ob.boundary_exponents;
        std::vector<long long> want = exponents;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) r.fail(i, "exponent multiset changed in round trip");
        SeifertInvariants canon = canonicalize(inv);
        if (ob.boundary_count() !=
            canon.k() + static_cast<std::size_t>(canon.euler < 0 ? -canon.euler : canon.euler))
            r.fail(i, "boundary count is not k + |n|");
    }
    return r;
}

inline PropertyResult classification_grid(Rng&, long long) {
    PropertyResult r{"classification-grid"};
    std::vector<long long> choices{-2, -1, 1, 2};
    long long n = 0;
    for (long long g = 0; g <= 2; ++g) {
        for (std::size_t rr = 1; rr <= 4; ++rr) {
            std::vector<std::size_t> idx(rr, 0);
            while (true) {
                std::vector<long long> m;
                for (std::size_t j = 0; j < rr; ++j) m.push_back(choices[idx[j]]);
                ++n;
                Classification c = classify_boundary_word(g, m);
                bool all_pos = std::all_of(m.begin(), m.end(), [](long long x) { return x > 0; });
                bool some_neg = std::any_of(m.begin(), m.end(), [](long long x) { return x < 0; });
                if (!c.seifert_fibered) r.fail(n, "seifert_fibered is not always true");
                if (c.horizontal_realizable != all_pos)
                    r.fail(n, "horizontal_realizable != all exponents positive");
                if (c.stein_fillable != c.horizontal_realizable)
                    r.fail(n, "stein_fillable != horizontal_realizable on this class");
                if (c.exceptional_case != (some_neg && g == 0 && (rr == 1 || rr == 2)))
                    r.fail(n, "exceptional_case predicate wrong");
                if (c.tight_incompatible != (some_neg && !c.exceptional_case))
                    r.fail(n, "tight_incompatible predicate wrong");
                if (c.horizontal_realizable && !c.seifert_fibered)
                    r.fail(n, "horizontal without Seifert fibration");
                if (c.stein_fillable && c.tight_incompatible)
                    r.fail(n, "Stein fillable yet tight-incompatible");
                std::size_t j = 0;
                while (j < rr && ++idx[j] == choices.size()) idx[j++] = 0;
                if (j == rr) break;
            }
        }
    }
    r.cases = n;
    return r;
}

inline TwistWord random_word(Rng& rng, std::size_t boundary_count, long long max_len) {
    static const std::vector<std::string> interior{"a", "b"};
    TwistWord w;
    long long len = rng.range(0, max_len);
    for (long long i = 0; i < len; ++i) {
        std::string curve;
        if (rng.chance(2, 5))
            curve = boundary_symbol(static_cast<std::size_t>(
                rng.range(1, static_cast<long long>(boundary_count))));
        else
            curve = interior[static_cast<std::size_t>(rng.range(0, 1))];
        long long e = rng.range(1, 2) * (rng.chance(1, 2) ? 1 : -1);
        w.append(curve, e);
    }
    return w;
}

inline PropertyResult surgery_recombination(Rng& rng, long long cases) {
    PropertyResult r{"surgery-recombination"};
    r.cases = cases;
    for (long long i = 0; i < cases; ++i) {
        std::size_t boundary_count = static_cast<std::size_t>(rng.range(1, 2));
        TwistWord w = random_word(rng, boundary_count, 12);
        SurgeryPresentation pres = surgery_presentation(3, boundary_count, w);
        for (long long m : pres.base.boundary_exponents)
            if (m == 0) r.fail(i, "base exponent is zero");
        TwistWord back = recombine(pres, w);
        TwistWord original = back;  // same declarations, original letters
        original.letters = w.letters;
        if (!words_equivalent(back, original)) r.fail(i, "recombination differs from input");
        if (word_exponent_vector(back) != word_exponent_vector(original))
            r.fail(i, "exponent vector changed (beyond repaired boundaries)");
    }
    return r;
}

inline PropertyResult lantern_roundtrip(Rng& rng, long long cases) {
    PropertyResult r{"lantern-roundtrip"};
    r.cases = cases;
    LanternConfig config{{"a", "b", "c", "d"}, {"x", "y", "z"}};
    for (long long i = 0; i < cases; ++i) {
        TwistWord w;
        w.declare_lantern(config);
        long long before = rng.range(0, 2);
        for (long long j = 0; j < before; ++j) w.append("p" + std::to_string(j), rng.range(1, 3));
        std::size_t position = w.letters.size();
        for (const std::string& c : config.boundary) w.append(c, 1);
        long long after = rng.range(0, 2);
        for (long long j = 0; j < after; ++j) w.append("q" + std::to_string(j), -rng.range(1, 3));

        std::map<std::string, long long> v0 = word_exponent_vector(w);
        TwistWord rewritten = lantern_rewrite(w, config, position);
        std::map<std::string, long long> v1 = word_exponent_vector(rewritten);
        for (const std::string& c : config.boundary)
            if (v1[c] - v0[c] != -1) r.fail(i, "boundary exponent did not drop by 1");
        for (const std::string& c : config.interior)
            if (v1[c] - v0[c] != 1) r.fail(i, "interior exponent did not rise by 1");
        TwistWord restored = lantern_rewrite_inverse(rewritten, config, position);
        if (restored.letters != w.letters) r.fail(i, "inverse rewrite did not restore the word");
    }
    return r;
}

inline PropertyResult pairing_positive(Rng&, long long) {
    PropertyResult r{"pairing-positive"};
    std::vector<Rat> radii{Rat(0), make_rational(1, 2), Rat(1), make_rational(7, 3)};
    long long n = 0;
    for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; b <= 10; ++b)
            for (const Rat& radius : radii) {
                ++n;
                if (contact_fiber_pairing(a, b, radius) <= 0)
                    r.fail(n, "pairing is not positive");
            }
    r.cases = n;
    return r;
}

} // namespace checks

inline CheckReport run_checks(std::uint64_t seed, long long cases,
                              const std::optional<SeifertInvariants>& pinned = std::nullopt) {
    CheckReport report;
    report.seed = seed;
    report.cases = cases;

    // Each property draws from its own stream so adding a property never
    // perturbs the others' cases.
    auto stream = [&](std::uint64_t salt) { return Rng(seed * 0x100000001b3ULL + salt); };

    using Runner = PropertyResult (*)(Rng&, long long);
    const std::pair<Runner, std::uint64_t> runners[] = {
        {checks::canonicalize_invariants, 1},  {checks::normalize_shape_law, 2},
        {checks::calculus_invariance, 3},      {checks::blowup_blowdown_inverse, 4},
        {checks::transcript_replay, 5},        {checks::euler_two_routes, 6},
        {checks::snf_soundness, 7},            {checks::gluing_matrix_law, 8},
        {checks::openbook_roundtrip, 9},       {checks::classification_grid, 10},
        {checks::surgery_recombination, 11},   {checks::lantern_roundtrip, 12},
        {checks::pairing_positive, 13},
    };
    for (const auto& [runner, salt] : runners) {
        Rng rng = stream(salt);
        report.properties.push_back(runner(rng, cases));
    }

    if (pinned) {
        // Re-run the per-input properties on the pinned invariants only.
        struct PinnedRng : Rng { using Rng::Rng; };
        PropertyResult shape{"pinned-input"};
        shape.cases = 1;
        try {
            SeifertInvariants inv = *pinned;
            Rat e = rational_euler(inv);
            if (validate_eligible(inv).eligible) {
                NormalizeResult norm = normalize_to_standard(inv);
                if (rational_euler_from_graph(norm.graph) != e)
                    shape.fail(0, "Euler number changed by normalization");
                if (!(first_homology(star_from_seifert(inv)) == first_homology(norm.graph)))
                    shape.fail(0, "homology changed by normalization");
                if (!(replay_transcript(star_from_seifert(inv), norm.transcript) == norm.graph))
                    shape.fail(0, "transcript replay mismatch");
            } else {
                shape.fail(0, "input is not in the eligible class");
            }
        } catch (const std::exception& e) {
            shape.fail(0, e.what());
        }
        report.properties.push_back(shape);
    }
    return report;
}

} // namespace hob
