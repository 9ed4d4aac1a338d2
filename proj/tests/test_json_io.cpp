#include <doctest.h>

#include <string>

#include "hob/json_io.hpp"

using namespace hob;

TEST_CASE("Seifert invariants round-trip through JSON") {
    SeifertInvariants inv = make_invariants(1, -2, {make_rational(-1, 2), make_rational(-3, 7)});
    json j = invariants_to_json(inv);
    CHECK(invariants_from_json(j) == inv);
    CHECK(j.dump() == R"({"coefficients":[[-1,2],[-3,7]],"euler":-2,"genus":1})");
}

TEST_CASE("invariants schema violations name the offending field") {
    auto parse = [](const std::string& text) { return invariants_from_json(json::parse(text)); };

    CHECK_THROWS_AS(parse(R"({"euler": 0, "coefficients": []})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": -1, "euler": 0, "coefficients": []})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": 0, "euler": "x", "coefficients": []})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": 0, "euler": 0, "coefficients": [[1]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": 0, "euler": 0, "coefficients": [[1, -2]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": 0, "euler": 0, "coefficients": [[2, 4]]})"), SchemaError);
    CHECK_THROWS_AS(parse(R"({"genus": 0, "euler": 0, "coefficients": [[0, 1]]})"), SchemaError);

    try {
        parse(R"({"genus": 0, "euler": 0, "coefficients": [[-1, 2], [2, 4]]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.field == "coefficients[1]");
    }
}

TEST_CASE("graphs round-trip through JSON and validate structure") {
    PlumbingGraph g = star_from_seifert(make_invariants(1, -1, {make_rational(-1, 2)}));
    json j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);

    auto parse = [](const std::string& text) { return graph_from_json(json::parse(text)); };
    CHECK_THROWS_AS(parse(R"({"vertices": [], "edges": [["a","b"]]})"), SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"vertices": [{"id":"a","euler":0,"genus":0},{"id":"a","euler":0,"genus":0}], "edges": []})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"vertices": [{"id":"a","euler":0,"genus":0}], "edges": [["a","a"]]})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse(R"({"vertices": [{"id":"a","euler":0,"genus":0},{"id":"b","euler":0,"genus":0}], "edges": []})"),
        SchemaError);  // disconnected
    CHECK_THROWS_AS(
        parse(R"({"vertices": [{"id":"a","euler":0,"genus":-1}], "edges": []})"),
        SchemaError);
}

TEST_CASE("transcripts round-trip through JSON") {
    NormalizeResult norm = normalize_to_standard(
        make_invariants(0, -1, {make_rational(-1, 2), make_rational(-1, 3)}));
    json j = transcript_to_json(norm.transcript);
    Transcript back = transcript_from_json(j);
    REQUIRE(back.size() == norm.transcript.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == norm.transcript[i]);

    CHECK_THROWS_AS(transcript_from_json(json::parse(R"([{"move":"twist","target":"v"}])")),
                    SchemaError);
}

TEST_CASE("matrices round-trip through JSON, including big entries") {
    IntegerMatrix m(2, 2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(0, 1) = -5;
    m.at(1, 0) = 0;
    m.at(1, 1) = 7;
    json j = matrix_to_json(m);
    CHECK(j["entries"][0][0].is_string());
    CHECK(j["entries"][0][1].is_number_integer());
    CHECK(matrix_from_json(j) == m);

    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":1,"entries":[[1]]})")),
                    SchemaError);
}

TEST_CASE("open books and presentations round-trip through JSON") {
    OpenBook ob;
    ob.page_genus = 2;
    ob.boundary_exponents = {1, 3, -2};
    ob.extra_word = make_word({{"a", 2}, {"b", -1}});
    json j = open_book_to_json(ob);
    CHECK(open_book_from_json(j) == ob);

    SurgeryPresentation pres = surgery_presentation(1, 1, make_word({{"a", 1}}));
    json pj = presentation_to_json(pres);
    CHECK(presentation_from_json(pj) == pres);

    CHECK_THROWS_AS(
        open_book_from_json(json::parse(R"({"genus":0,"boundary_exponents":[0],"extra_word":[]})")),
        SchemaError);
    CHECK_THROWS_AS(word_from_json(json::parse(R"([["a", 0]])"), "word"), SchemaError);
}

TEST_CASE("DOT emission is deterministic and complete") {
    SeifertInvariants inv = make_invariants(0, -1, {make_rational(-1, 2), make_rational(-1, 3)});
    PlumbingGraph g = normalize_to_standard(inv).graph;
    std::string dot = graph_to_dot(g);
    CHECK(dot == graph_to_dot(g));
    CHECK(dot ==
          "graph plumbing {\n"
          "  \"v0\" [label=\"e=-3, g=0\"];\n"
          "  \"v3\" [label=\"e=-2, g=0\"];\n"
          "  \"v4\" [label=\"e=-2, g=0\"];\n"
          "  \"v5\" [label=\"e=-2, g=0\"];\n"
          "  \"v0\" -- \"v3\";\n"
          "  \"v0\" -- \"v4\";\n"
          "  \"v4\" -- \"v5\";\n"
          "}\n");

    PlumbingGraph single;
    single.vertices = {{"v0", -4, 2}};
    CHECK(graph_to_dot(single) ==
          "graph plumbing {\n  \"v0\" [label=\"e=-4, g=2\"];\n}\n");
}
