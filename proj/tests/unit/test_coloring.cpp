#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "dcolor/coloring.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/union_find.hpp"
#include "support.hpp"

using namespace dcolor;

TEST_CASE("colouring validation") {
    CHECK_THROWS_AS(Coloring({1, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({1, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({1}, 0), std::invalid_argument);
    Coloring c({1, 2, 3}, 3);
    CHECK_THROWS(c.set(0, 4));
    c.set(0, 3);
    CHECK(c[0] == 3);
}

TEST_CASE("conflicts on a triangle") {
    const Graph g = gen_clique(3);
    const Coloring mono = Coloring::uniform(3, 3);
    CHECK(conflicted_vertices(g, mono) == std::vector<Vertex>{0, 1, 2});
    CHECK(conflicted_edge_count(g, mono) == 3);
    CHECK(monochromatic_component_count(g, mono) == 1);
    CHECK_FALSE(is_proper(g, mono));

    const Coloring proper({1, 2, 3}, 3);
    CHECK(is_proper(g, proper));
    CHECK(conflicted_vertices(g, proper).empty());
    CHECK(monochromatic_component_count(g, proper) == 3);

    const Coloring half({1, 1, 2}, 3);
    CHECK(is_conflicted(g, half, 0));
    CHECK_FALSE(is_conflicted(g, half, 2));
    // The own colour is not excluded; only neighbour colours are.
    CHECK(free_colors(g, half, 0) == std::vector<Color>{3});
    CHECK(free_colors(g, half, 2) == std::vector<Color>{2, 3});
}

TEST_CASE("gadget potentials") {
    const Fig2Gadget gadget = gen_fig2_like();
    CHECK(conflicted_vertices(gadget.graph, gadget.coloring) == std::vector<Vertex>{0, 1, 4});
    CHECK(monochromatic_component_count(gadget.graph, gadget.coloring) == 3);
    CHECK(conflicted_edge_count(gadget.graph, gadget.coloring) == 2);
    CHECK(potential(PotentialKind::ConflictedVertices, gadget.graph, gadget.coloring) == 3);
}

TEST_CASE("union-find") {
    UnionFind uf(6);
    CHECK(uf.set_count() == 6);
    CHECK(uf.unite(0, 1));
    CHECK(uf.unite(2, 3));
    CHECK_FALSE(uf.unite(1, 0));
    CHECK(uf.unite(1, 3));
    CHECK(uf.find(0) == uf.find(2));
    CHECK(uf.find(4) != uf.find(5));
    CHECK(uf.set_count() == 3);
}

TEST_CASE("property: Phi equals an independent DFS count") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.uniform(30);
        const Graph g = testing::random_graph(n, rng.uniform01(), rng);
        const Coloring c = random_coloring(n, static_cast<Color>(1 + rng.uniform(5)), rng);
        CHECK(monochromatic_component_count(g, c) == testing::phi_reference(g, c.colors()));
        if (is_proper(g, c)) {
            CHECK(monochromatic_component_count(g, c) == n);
        }
    }
}

TEST_CASE("property: tracker agrees with full recomputation after any recolour sequence") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.uniform(25);
        const Graph g = testing::random_graph(n, rng.uniform01(), rng);
        const auto d = static_cast<Color>(1 + rng.uniform(4));
        ConflictTracker tracker(g, random_coloring(n, d, rng));
        for (int step = 0; step < 60; ++step) {
            const auto v = static_cast<Vertex>(rng.uniform(n));
            tracker.recolor(v, static_cast<Color>(1 + rng.uniform(d)));
            const Coloring& c = tracker.coloring();
            auto members = std::vector<Vertex>(tracker.conflicted().begin(), tracker.conflicted().end());
            std::sort(members.begin(), members.end());
            REQUIRE(members == conflicted_vertices(g, c));
            REQUIRE(tracker.conflicted_edges() == conflicted_edge_count(g, c));
            REQUIRE(tracker.proper() == is_proper(g, c));
            for (Vertex u = 0; u < n; ++u) {
                REQUIRE(tracker.is_conflicted(u) == is_conflicted(g, c, u));
            }
        }
    }
}

TEST_CASE("property: local Phi deltas match full recomputation") {
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.uniform(14);
        const Graph g = testing::random_graph(n, rng.uniform01(), rng);
        const auto d = static_cast<Color>(1 + rng.uniform(4));
        const Coloring c = random_coloring(n, d, rng);
        const PhiProbe probe(g, c);
        const auto base = static_cast<long>(testing::phi_reference(g, c.colors()));
        for (Vertex v = 0; v < n; ++v) {
            long total = 0;
            for (Color x = 1; x <= d; ++x) {
                std::vector<Color> moved(c.colors().begin(), c.colors().end());
                moved[v] = x;
                const long expected = static_cast<long>(testing::phi_reference(g, moved)) - base;
                REQUIRE(probe.delta(v, x) == expected);
                total += expected;
            }
            REQUIRE(probe.drift_numerator(v) == total);
        }
    }
}

TEST_CASE("colouring text format") {
    const Coloring c({2, 1, 3, 3}, 3);
    std::stringstream buffer;
    write_coloring(buffer, c);
    CHECK(buffer.str().rfind("D=3", 0) == 0);
    const Coloring back = read_coloring(buffer);
    CHECK(std::ranges::equal(back.colors(), c.colors()));
    CHECK(back.palette_size() == 3);

    std::istringstream missing("1 2 3");
    CHECK_THROWS_AS(read_coloring(missing), std::invalid_argument);
    std::istringstream outside("D=2 1 3");
    CHECK_THROWS_AS(read_coloring(outside), std::invalid_argument);
}
