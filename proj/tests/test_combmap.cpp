#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "trinity/combmap.hpp"

using namespace trinity;

TEST_CASE("face counts of the worked instances") {
    auto faces = [](const PlaneGraph& g) { return compute_faces(g.map).faces.size(); };
    CHECK(faces(fixtures::k2()) == 1);
    CHECK(faces(fixtures::theta()) == 3);
    CHECK(faces(fixtures::c3()) == 2);
    CHECK(faces(fixtures::figure2()) == 3);
    CHECK(faces(fixtures::loop1()) == 2);
    CHECK(genus2(fixtures::figure2().map) == 0);
}

TEST_CASE("planar duals of the worked instances") {
    auto d_k2 = planar_dual(fixtures::k2());
    CHECK(d_k2.num_vertices() == 1);
    CHECK(d_k2.num_edges() == 1); // a single loop
    CHECK(isomorphic(d_k2, fixtures::loop1()));

    auto d_theta = planar_dual(fixtures::theta());
    CHECK(d_theta.num_vertices() == 3);
    CHECK(d_theta.num_edges() == 3);
    CHECK(isomorphic(d_theta, fixtures::c3()));

    auto d_f2 = planar_dual(fixtures::figure2());
    CHECK(d_f2.num_vertices() == 3);
    CHECK(d_f2.num_edges() == 5);
    d_f2.validate();
}

TEST_CASE("dual of the dual is the original map") {
    for (const PlaneGraph& g : {fixtures::k2(), fixtures::theta(), fixtures::c3(),
                                fixtures::figure2(), fixtures::loop1()}) {
        CHECK(isomorphic(planar_dual(planar_dual(g)), g));
    }
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        int n = static_cast<int>(2 + seed % 5);
        auto g = random_plane_graph(n, n - 1 + static_cast<int>(seed % 5), seed);
        CHECK(isomorphic(planar_dual(planar_dual(g)), g));
    }
}

TEST_CASE("bidirection is balanced and doubles the edges") {
    for (const PlaneGraph& g : {fixtures::k2(), fixtures::theta(), fixtures::figure2()}) {
        auto b = bidirect(g);
        b.validate();
        CHECK(b.num_arcs() == 2 * g.num_edges());
        CHECK(b.balanced());
        CHECK(isomorphic(underlying_graph(b), underlying_graph(b)));
    }
}

TEST_CASE("isomorphism distinguishes rotation systems") {
    // theta with one vertex rotation flipped embeds with genus 1
    auto flipped = make_plane_graph(
        2, {{0, 1}, {0, 1}, {0, 1}},
        {{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 1}, {2, 1}}});
    CHECK(genus2(flipped.map) == 2);
    CHECK_FALSE(isomorphic(flipped, fixtures::theta()));

    // a relabelled figure2 (vertices listed in another order) stays isomorphic
    auto relabelled = make_plane_graph(
        4,
        {{2, 3}, {3, 0}, {0, 1}, {1, 2}, {3, 1}},
        {
            {{1, 1}, {2, 0}},
            {{3, 0}, {4, 1}, {2, 1}},
            {{0, 0}, {3, 1}},
            {{1, 0}, {4, 0}, {0, 1}},
        });
    CHECK(isomorphic(relabelled, fixtures::figure2()));
    CHECK_FALSE(isomorphic(fixtures::theta(), fixtures::c3()));
}

TEST_CASE("random plane graphs are valid, sized, and seed-deterministic") {
    auto g21 = random_plane_graph(2, 1, 42);
    CHECK(isomorphic(g21, fixtures::k2()));

    for (uint64_t seed : {1ull, 7ull, 99ull}) {
        auto a = random_plane_graph(4, 5, seed);
        auto b = random_plane_graph(4, 5, seed);
        CHECK(a.num_vertices() == 4);
        CHECK(a.num_edges() == 5);
        a.validate();
        CHECK(map_canonical_code(a.map, {}) == map_canonical_code(b.map, {}));
        CHECK(a.map.vertex_darts == b.map.vertex_darts);
        CHECK(a.map.mate == b.map.mate);
    }
    CHECK_THROWS_AS(random_plane_graph(4, 2, 1), Error);

    // single vertex instances are all loops
    auto loops = random_plane_graph(1, 3, 5);
    CHECK(loops.num_edges() == 3);
    loops.validate();
}
