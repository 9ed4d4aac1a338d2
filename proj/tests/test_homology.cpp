#include <doctest.h>

#include "hob/homology.hpp"
#include "hob/plumbing.hpp"
#include "hob/rng.hpp"
#include "oracles.hpp"

using namespace hob;

namespace {

IntegerMatrix random_matrix(Rng& rng, long long max_dim, long long span) {
    IntegerMatrix m(static_cast<std::size_t>(rng.range(0, max_dim)),
                    static_cast<std::size_t>(rng.range(0, max_dim)));
    for (Int& e : m.entries) e = make_int(rng.range(-span, span));
    return m;
}

void check_snf_postconditions(const IntegerMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(abs(determinant(snf.u)) == 1);
    CHECK(abs(determinant(snf.v)) == 1);
    for (std::size_t i = 0; i < snf.d.rows; ++i)
        for (std::size_t j = 0; j < snf.d.cols; ++j)
            if (i != j) CHECK(snf.d.at(i, j) == 0);
    std::size_t steps = std::min(snf.d.rows, snf.d.cols);
    Int prod(1);
    for (std::size_t t = 0; t < steps; ++t) {
        const Int& dt = snf.d.at(t, t);
        CHECK(dt >= 0);
        if (t + 1 < steps) {
            const Int& dn = snf.d.at(t + 1, t + 1);
            if (dt == 0) CHECK(dn == 0);
            if (dt != 0) CHECK(dn % dt == 0);
        }
        prod *= dt;
    }
    if (m.square()) CHECK(abs(determinant(m)) == abs(prod));
}

} // namespace

TEST_CASE("determinant fixtures") {
    for (std::size_t n = 0; n <= 5; ++n) CHECK(determinant(IntegerMatrix::identity(n)) == 1);
    for (long long p = -3; p <= 9; ++p)
        CHECK(determinant(matrix_from_rows({{0, 1}, {1, p}})) == -1);

    IntegerMatrix fixture = matrix_from_rows({{-1, 1, 1}, {1, 2, 0}, {1, 0, 3}});
    CHECK(determinant(fixture) == -11);
    CHECK(oracles::cofactor_determinant(fixture) == -11);

    CHECK(determinant(matrix_from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), DomainError);
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
    Rng rng(60601);
    for (int i = 0; i < 400; ++i) {
        IntegerMatrix m = random_matrix(rng, 5, 4);
        if (!m.square()) continue;
        CHECK(determinant(m) == oracles::cofactor_determinant(m));
    }
}

TEST_CASE("smith_normal_form fixtures") {
    SmithResult id = smith_normal_form(IntegerMatrix::identity(3));
    CHECK(id.d == IntegerMatrix::identity(3));

    SmithResult d23 = smith_normal_form(matrix_from_rows({{2, 0}, {0, 3}}));
    CHECK(d23.d == matrix_from_rows({{1, 0}, {0, 6}}));

    for (long long p = 0; p <= 6; ++p) {
        SmithResult hopf = smith_normal_form(matrix_from_rows({{0, 1}, {1, p}}));
        CHECK(hopf.d == IntegerMatrix::identity(2));
    }

    // shapes: non-square and degenerate
    check_snf_postconditions(matrix_from_rows({{2, 4, 6}, {4, 8, 10}}));
    check_snf_postconditions(IntegerMatrix(0, 0));
    check_snf_postconditions(IntegerMatrix(3, 0));
    check_snf_postconditions(IntegerMatrix(2, 2));  // zero matrix
}

TEST_CASE("smith_normal_form postconditions on random matrices") {
    Rng rng(77077);
    for (int i = 0; i < 300; ++i) check_snf_postconditions(random_matrix(rng, 5, 4));
}

TEST_CASE("first_homology: S^3 surgeries are trivial before and after normalization") {
    for (long long p = 1; p <= 20; ++p) {
        SeifertInvariants inv = make_invariants(0, 0, {make_rational(-1, p)});
        PlumbingGraph star = star_from_seifert(inv);
        CHECK(abs(oracles::cofactor_determinant(linking_matrix(star))) == 1);
        CHECK(first_homology(star).trivial());

        PlumbingGraph standard = normalize_to_standard(inv).graph;
        CHECK(abs(oracles::path_determinant(standard)) == 1);
        CHECK(abs(determinant(linking_matrix(standard))) == 1);
        CHECK(first_homology(standard).trivial());
    }
}

TEST_CASE("first_homology counts genus handles") {
    PlumbingGraph torus_bundle;
    torus_bundle.vertices = {{"v0", 0, 1}};
    AbelianGroup h = first_homology(torus_bundle);
    CHECK(h.rank == 3);  // coker [[0]] has rank 1, plus 2g = 2
    CHECK(h.torsion.empty());
    CHECK(h.to_string() == "Z^3");

    PlumbingGraph empty;
    CHECK(first_homology(empty).trivial());
    CHECK(first_homology(empty).to_string() == "0");
}

TEST_CASE("first_homology: order-11 fixture on both diagrams") {
    SeifertInvariants inv = make_invariants(0, -1, {make_rational(-1, 2), make_rational(-1, 3)});
    AbelianGroup expected;
    expected.torsion = {Int(11)};
    CHECK(first_homology(star_from_seifert(inv)) == expected);
    CHECK(first_homology(normalize_to_standard(inv).graph) == expected);
    CHECK(expected.to_string() == "Z/11");
}

TEST_CASE("first_homology is invariant under single calculus moves") {
    Rng rng(31013);
    for (int i = 0; i < 50; ++i) {
        SeifertInvariants inv;
        inv.genus = rng.range(0, 2);
        inv.euler = rng.range(-3, 0);
        long long k = rng.range(1, 4);
        for (long long j = 0; j < k; ++j)
            inv.coefficients.push_back(make_rational(-1, rng.range(1, 7)));
        PlumbingGraph g = star_from_seifert(inv);
        Edge e = g.edges[static_cast<std::size_t>(
            rng.range(0, static_cast<long long>(g.edges.size()) - 1))];
        std::string fresh = g.fresh_label();
        PlumbingGraph up = blow_up_edge(g, e);
        CHECK(first_homology(up) == first_homology(g));
        CHECK(first_homology(blow_down(up, fresh)) == first_homology(g));
    }
}
