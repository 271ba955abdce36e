#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "trinity/io.hpp"

using namespace trinity;

static const char* kFig2 = R"(# the 4-vertex, 5-edge worked example
planegraph v1
vertex v1: a1 a4
vertex v2: b2 b5 b1
vertex v3: c2 c3
vertex v4: d4 d5 d3
edge e1: a1 b1
edge e2: b2 c2
edge e3: c3 d3
edge e4: d4 a4
edge e5: b5 d5
)";

TEST_CASE("plane graph files round trip byte for byte") {
    auto g = parse_plane_graph(kFig2);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 5);
    CHECK(isomorphic(g, fixtures::figure2()));

    std::string canon = serialize(g);
    CHECK(serialize(parse_plane_graph(canon)) == canon);
    // comments and blank lines are dropped by the canonical form
    CHECK(canon.find('#') == std::string::npos);
}

TEST_CASE("plane digraph files") {
    auto bd = bidirect(fixtures::k2());
    std::string text = serialize(bd);
    auto back = parse_plane_digraph(text);
    CHECK(back.num_vertices() == 2);
    CHECK(back.num_arcs() == 2);
    CHECK(back.balanced());
    CHECK(isomorphic(back, bd));
    CHECK(serialize(back) == text);

    CHECK_THROWS_AS(parse_plane_digraph("planegraph v1\n"), ParseError);
    try {
        parse_plane_digraph("planedigraph v1\nvertex v1: a a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("trinity files") {
    auto t = trinity_from_plane_graph(fixtures::theta());
    std::string text = serialize(t);
    auto back = parse_trinity(text);
    CHECK(validate_trinity(back).ok());
    CHECK(serialize(back) == text);
    CHECK(back.num_triangles() == 12);

    // dangling edge id inside a triangle is a semantic/parse failure
    std::string broken = "trinity v1\nnode a R\nnode b E\nnode c V\n"
                         "edge x: a b\nedge y: b c\nedge z: c a\n"
                         "triangle: x y nope W\n";
    CHECK_THROWS_AS(parse_trinity(broken), ParseError);

    // a file with bad tags parses but fails validation
    std::string twisted = serialize(t);
    auto pos = twisted.find(" W\n");
    REQUIRE(pos != std::string::npos);
    twisted.replace(pos, 3, " B\n");
    auto bad = parse_trinity(twisted);
    CHECK_FALSE(validate_trinity(bad).ok());
}

TEST_CASE("chip files") {
    std::vector<std::string> names{"v1", "v2", "v3"};
    auto x = parse_chips("chips: v1=2 v3=-2\n", names);
    CHECK(x.degree() == 0);
    CHECK(x[0] == 2);
    CHECK(x[1] == 0);
    CHECK(x[2] == -2);
    CHECK(serialize_chips(x, names) == "chips: v1=2 v3=-2\n");
    CHECK_THROWS_AS(parse_chips("chips: nope=1\n", names), ParseError);
    CHECK_THROWS_AS(parse_chips("chips: v1=alpha\n", names), ParseError);

    auto big = parse_chips("chips: v2=123456789012345678901234567890\n", names);
    CHECK(big[1] == Integer("123456789012345678901234567890"));
}

TEST_CASE("hypertree lines") {
    Hypertree h{{2, 3, 4}, {0, 1, 0}};
    std::vector<std::string> names{"v1", "v2", "e1", "e2", "e3"};
    std::string text = serialize_hypertree(h, names, "E");
    CHECK(text == "hypertree side=E: e1=0 e2=1 e3=0\n");
    auto [side, entries] = parse_hypertree_entries(text);
    CHECK(side == "E");
    REQUIRE(entries.size() == 3);
    CHECK(entries[1].first == "e2");
    CHECK(entries[1].second == 1);
}

TEST_CASE("dot export is deterministic and mentions every node") {
    auto t = trinity_from_plane_graph(fixtures::k2());
    auto a = dot_export(t);
    CHECK(a == dot_export(t));
    for (const auto& name : t.node_names) CHECK(a.find(name) != std::string::npos);
    CHECK(a.find("style=dashed") != std::string::npos);
    auto g = dot_export(fixtures::figure2());
    CHECK(g.find("e5") != std::string::npos);
}
