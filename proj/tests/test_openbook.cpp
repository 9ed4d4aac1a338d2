#include <doctest.h>

#include <algorithm>
#include <string>

#include "hob/homology.hpp"
#include "hob/openbook.hpp"
#include "hob/rng.hpp"

using namespace hob;

TEST_CASE("gluing_matrix satisfies the surgery identities") {
    CHECK(gluing_matrix(1) == matrix_from_rows({{1, 0}, {1, 1}}));
    CHECK(gluing_matrix(2) == matrix_from_rows({{2, 3}, {1, 2}}));
    CHECK(determinant(gluing_matrix(2)) == 1);

    for (long long p = 1; p <= 100; ++p) {
        IntegerMatrix a = gluing_matrix(p);
        CHECK(determinant(a) == 1);
        Int P = make_int(p);
        // image of p*mu - lambda is m
        CHECK(a.at(0, 0) * P - a.at(0, 1) == 1);
        CHECK(a.at(1, 0) * P - a.at(1, 1) == 0);
        // image of p*lambda - (p^2-1)*mu is l
        Int q = P * P - 1;
        CHECK(a.at(0, 1) * P - a.at(0, 0) * q == 0);
        CHECK(a.at(1, 1) * P - a.at(1, 0) * q == 1);
    }
    CHECK_THROWS_AS(gluing_matrix(0), DomainError);
    CHECK_THROWS_AS(gluing_matrix(-2), DomainError);
}

TEST_CASE("construct_horizontal_open_book") {
    OpenBook ob = construct_horizontal_open_book(make_invariants(2, -1, {make_rational(-1, 3)}));
    CHECK(ob.page_genus == 2);
    CHECK(ob.boundary_exponents == std::vector<long long>{1, 3});
    CHECK(ob.extra_word.letters.empty());
    CHECK(ob.euler_characteristic() == 2 - 4 - 2);

    OpenBook bundle = construct_horizontal_open_book(make_invariants(5, -1, {}));
    CHECK(bundle.page_genus == 5);
    CHECK(bundle.boundary_exponents == std::vector<long long>{1});

    OpenBook planar =
        construct_horizontal_open_book(make_invariants(0, 0, {make_rational(-1, 2), make_rational(-1, 5)}));
    CHECK(planar.page_genus == 0);
    CHECK(planar.boundary_exponents == std::vector<long long>{2, 5});

    // the compatible contact structure of a positive boundary word is Stein fillable
    Classification c = classify_boundary_word(planar.page_genus, planar.boundary_exponents);
    CHECK(c.stein_fillable);
    CHECK(c.horizontal_realizable);
}

TEST_CASE("construct_horizontal_open_book rejects degenerate input") {
    CHECK_THROWS_WITH_AS(construct_horizontal_open_book(make_invariants(3, 0, {})),
                         "trivial bundle: no binding", DomainError);

    // r = 1/2 encodes a p < 0 surgery: left-handed twists, not horizontal
    try {
        construct_horizontal_open_book(make_invariants(0, 0, {make_rational(1, 2)}));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("left-handed") != std::string::npos);
    }

    CHECK_THROWS_AS(construct_horizontal_open_book(make_invariants(0, 1, {make_rational(-1, 2)})),
                    DomainError);
    CHECK_THROWS_AS(construct_horizontal_open_book(make_invariants(0, -1, {make_rational(-2, 3)})),
                    DomainError);
}

TEST_CASE("seifert_from_boundary_word and the round trip") {
    SeifertInvariants inv = seifert_from_boundary_word(0, {2, 3});
    CHECK(inv == make_invariants(0, 0, {make_rational(-1, 2), make_rational(-1, 3)}));

    SeifertInvariants unit = seifert_from_boundary_word(1, {1});
    CHECK(unit == make_invariants(1, 0, {make_rational(-1, 1)}));
    CHECK(canonicalize(unit) == make_invariants(1, -1, {}));

    CHECK_THROWS_AS(seifert_from_boundary_word(0, {}), DomainError);
    CHECK_THROWS_AS(seifert_from_boundary_word(0, {2, 0}), DomainError);
    CHECK_THROWS_AS(seifert_from_boundary_word(0, {2, -1}), DomainError);

    Rng rng(90210);
    for (int i = 0; i < 200; ++i) {
        long long genus = rng.range(0, 3);
        std::vector<long long> exponents;
        long long r = rng.range(1, 6);
        for (long long j = 0; j < r; ++j) exponents.push_back(rng.range(1, 9));

        SeifertInvariants back = seifert_from_boundary_word(genus, exponents);
        OpenBook ob = construct_horizontal_open_book(canonicalize(back));
        CHECK(ob.page_genus == genus);
        std::vector<long long> got = ob.boundary_exponents;
        std::sort(got.begin(), got.end());
        std::vector<long long> want = exponents;
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("classify_boundary_word matches the boundary-twist criterion") {
    Classification mixed = classify_boundary_word(1, {2, -1});
    CHECK(mixed.seifert_fibered);
    CHECK_FALSE(mixed.horizontal_realizable);
    CHECK_FALSE(mixed.stein_fillable);
    CHECK(mixed.tight_incompatible);
    CHECK_FALSE(mixed.exceptional_case);

    Classification positive = classify_boundary_word(0, {3, 4});
    CHECK(positive.horizontal_realizable);
    CHECK(positive.stein_fillable);
    CHECK_FALSE(positive.tight_incompatible);

    // g = 0, r = 2, all negative: left out by the criterion's argument
    Classification low = classify_boundary_word(0, {-1, -1});
    CHECK(low.exceptional_case);
    CHECK_FALSE(low.tight_incompatible);
    CHECK_FALSE(low.horizontal_realizable);

    CHECK_THROWS_AS(classify_boundary_word(0, {1, 0}), DomainError);
    CHECK_THROWS_AS(classify_boundary_word(-1, {1}), DomainError);

    // empty exponent list: the all-positive predicates hold vacuously
    Classification vacuous = classify_boundary_word(2, {});
    CHECK(vacuous.seifert_fibered);
    CHECK(vacuous.horizontal_realizable);
    CHECK_FALSE(vacuous.tight_incompatible);
    CHECK_FALSE(vacuous.exceptional_case);
}

TEST_CASE("classification over the exhaustive grid") {
    const std::vector<long long> choices{-2, -1, 1, 2};
    for (long long g = 0; g <= 2; ++g) {
        for (std::size_t r = 1; r <= 4; ++r) {
            std::vector<std::size_t> idx(r, 0);
            while (true) {
                std::vector<long long> m;
                for (std::size_t j = 0; j < r; ++j) m.push_back(choices[idx[j]]);
                Classification c = classify_boundary_word(g, m);
                bool all_pos = std::all_of(m.begin(), m.end(), [](long long x) { return x > 0; });
                bool some_neg = std::any_of(m.begin(), m.end(), [](long long x) { return x < 0; });
                CHECK(c.seifert_fibered);
                CHECK(c.horizontal_realizable == all_pos);
                CHECK(c.stein_fillable == all_pos);
                CHECK(c.exceptional_case == (some_neg && g == 0 && r <= 2));
                CHECK(c.tight_incompatible == (some_neg && !c.exceptional_case));
                std::size_t j = 0;
                while (j < r && ++idx[j] == choices.size()) idx[j++] = 0;
                if (j == r) break;
            }
        }
    }
}

TEST_CASE("contact_fiber_pairing") {
    for (long long p = 1; p <= 9; ++p) CHECK(contact_fiber_pairing(1, p, Rat(0)) == make_rational(p));
    CHECK(contact_fiber_pairing(7, 4, Rat(0)) == make_rational(4));
    CHECK(contact_fiber_pairing(3, 2, make_rational(1, 2)) == make_rational(11, 4));

    for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; b <= 10; ++b)
            for (const Rat& r : {Rat(0), make_rational(1, 2), Rat(1), make_rational(7, 3)})
                CHECK(contact_fiber_pairing(a, b, r) > 0);

    CHECK_THROWS_AS(contact_fiber_pairing(0, 1, Rat(0)), DomainError);
    CHECK_THROWS_AS(contact_fiber_pairing(1, 0, Rat(0)), DomainError);
    CHECK_THROWS_AS(contact_fiber_pairing(1, 1, make_rational(-1, 2)), DomainError);
}
