#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bigenic/errors.hpp"
#include "bigenic/families.hpp"
#include "bigenic/graph.hpp"

using namespace bigenic;

TEST_CASE("parse shapes") {
    const FamilyExpr co = parse_family("co(C4+P1)");
    REQUIRE(co.kind == FamilyExpr::Kind::Complement);
    const FamilyExpr& inner = co.inner.front();
    REQUIRE(inner.kind == FamilyExpr::Kind::Union);
    REQUIRE(inner.terms.size() == 2);
    CHECK(inner.terms[0].first == 1);
    CHECK(inner.terms[0].second.kind == FamilyExpr::Kind::Cycle);
    CHECK(inner.terms[0].second.params[0] == 4);
    CHECK(inner.terms[1].first == 1);
    CHECK(inner.terms[1].second.kind == FamilyExpr::Kind::Path);

    const FamilyExpr sugar = parse_family("3P2");
    REQUIRE(sugar.kind == FamilyExpr::Kind::Union);
    REQUIRE(sugar.terms.size() == 1);
    CHECK(sugar.terms.front().first == 3);

    CHECK(parse_family(" 2P1 + P2 ") == parse_family("2P1+P2"));
    CHECK(parse_family("claw") == parse_family("S1,1,1"));
    CHECK(parse_family("net") == parse_family("T1,1,1"));
}

TEST_CASE("parse errors name the violated bound") {
    CHECK_THROWS_WITH_AS(parse_family("S0,1,1"),
                         doctest::Contains("1 <= h <= i <= j"),
                         validation_error);
    CHECK_THROWS_WITH_AS(parse_family("C2"), doctest::Contains("r >= 3"),
                         validation_error);
    CHECK_THROWS_WITH_AS(parse_family("T1,0,2"),
                         doctest::Contains("0 <= h <= i <= j"),
                         validation_error);
    CHECK_THROWS_WITH_AS(parse_family("K0,2"), doctest::Contains("r,s >= 1"),
                         validation_error);
    CHECK_THROWS_AS(parse_family("P"), validation_error);
    CHECK_THROWS_AS(parse_family("Q5"), validation_error);
    CHECK_THROWS_AS(parse_family("P2+"), validation_error);
    CHECK_THROWS_AS(parse_family("co(P2"), validation_error);
    CHECK_THROWS_AS(parse_family("P2)"), validation_error);
    CHECK_THROWS_AS(parse_family("0P2"), validation_error);
}

TEST_CASE("print and reparse round trip") {
    for (const auto& [name, graph] : catalog_fixtures()) {
        const FamilyExpr parsed = parse_family(name);
        CHECK(parse_family(to_string(parsed)) == parsed);
    }
    for (const char* text : {"2P1+P3+co(C5+2K4)", "K3,4+S1,2,2", "10P1"}) {
        const FamilyExpr parsed = parse_family(text);
        CHECK(parse_family(to_string(parsed)) == parsed);
    }
}

TEST_CASE("realize fixtures") {
    CHECK(is_isomorphic(make_graph("T0,0,1"), make_graph("paw")));
    CHECK(is_isomorphic(make_graph("T0,0,1"), make_graph("co(P1+P3)")));
    CHECK(is_isomorphic(make_graph("T0,0,0"), make_graph("C3")));
    CHECK(is_isomorphic(make_graph("S1,1,1"), make_graph("K1,3")));
    CHECK(is_isomorphic(make_graph("T0,0,2"), make_graph("hammer")));

    const Graph s = make_graph("S1,2,3");
    CHECK(s.vertex_count() == 1 + 1 + 2 + 3);
    CHECK(s.edge_count() == s.vertex_count() - 1);
    CHECK(s.degree(0) == 3);

    const Graph t = make_graph("T1,2,3");
    CHECK(t.vertex_count() == 1 + 2 + 3 + 3);
    CHECK(t.edge_count() == t.vertex_count());
}

TEST_CASE("realize respects union order up to isomorphism") {
    CHECK(is_isomorphic(make_graph("C3+P4"), make_graph("P4+C3")));
    CHECK(is_isomorphic(make_graph("2P2+K3"), make_graph("K3+2P2")));
    CHECK(is_isomorphic(make_graph("co(co(bull))"), make_graph("bull")));
    CHECK(is_isomorphic(make_graph("co(co(2P1+P2))"), make_graph("2P1+P2")));
}

TEST_CASE("catalog fixtures match their expected sizes") {
    const auto& fixtures = catalog_fixtures();
    REQUIRE(fixtures.size() == 20);

    struct Expected {
        const char* name;
        int vertices;
        int edges;
    };
    const Expected table[] = {
        {"K1,3", 4, 3},        {"C4", 4, 4},         {"4P1", 4, 0},
        {"2P1+P2", 4, 1},      {"co(C4+P1)", 5, 6},  {"P5", 5, 4},
        {"co(C3+2P1)", 5, 7},  {"co(C3+P2)", 5, 6},  {"co(P1+2P2)", 5, 8},
        {"paw", 4, 4},         {"bull", 5, 5},       {"net", 6, 6},
        {"hammer", 5, 5},      {"2P2", 4, 2},        {"3P2", 6, 3},
        {"T0,2,2", 7, 7},      {"2C3", 6, 6},        {"C3+P4", 7, 6},
        {"2P4", 8, 6},         {"T0,0,4", 7, 7},
    };
    for (const auto& row : table) {
        REQUIRE(fixtures.count(row.name) == 1);
        const Graph& g = fixtures.at(row.name);
        CHECK(g.vertex_count() == row.vertices);
        CHECK(g.edge_count() == row.edges);
    }
    CHECK(is_isomorphic(fixtures.at("hammer"), make_graph("T0,0,2")));
}

TEST_CASE("realize guards against oversize graphs") {
    CHECK_THROWS_AS(make_graph("65P1"), validation_error);
    CHECK_THROWS_AS(make_graph("K70"), validation_error);
}
