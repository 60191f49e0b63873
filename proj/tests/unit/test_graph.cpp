#include <sstream>

#include "doctest.h"
#include "dcolor/generators.hpp"
#include "dcolor/graph.hpp"
#include "support.hpp"

using namespace dcolor;

namespace {

GraphError::Kind error_kind(std::size_t n, std::vector<Edge> edges) {
    try {
        Graph::from_edge_list(n, edges);
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("expected GraphError");
    return GraphError::Kind::Parse;
}

}  // namespace

TEST_CASE("clique sizes") {
    CHECK(gen_clique(1).size() == 1);
    CHECK(gen_clique(1).edge_count() == 0);
    CHECK(gen_clique(1).max_degree() == 0);
    for (std::size_t n = 2; n <= 12; ++n) {
        const Graph g = gen_clique(n);
        CHECK(g.edge_count() == n * (n - 1) / 2);
        CHECK(g.max_degree() == n - 1);
        validate(g);
    }
}

TEST_CASE("complete bipartite and cycle") {
    const Graph k = gen_complete_bipartite(3, 5);
    CHECK(k.size() == 8);
    CHECK(k.edge_count() == 15);
    CHECK(k.max_degree() == 5);
    CHECK(k.adjacent(0, 3));
    CHECK_FALSE(k.adjacent(0, 1));
    CHECK_FALSE(k.adjacent(4, 5));

    const Graph c = gen_cycle(6);
    CHECK(c.edge_count() == 6);
    CHECK(c.max_degree() == 2);
    CHECK(c.adjacent(0, 5));
    CHECK_THROWS_AS(gen_cycle(2), GraphError);
}

TEST_CASE("edge list validation") {
    CHECK(error_kind(3, {{0, 3}}) == GraphError::Kind::VertexOutOfRange);
    CHECK(error_kind(3, {{1, 1}}) == GraphError::Kind::SelfLoop);
    CHECK(error_kind(3, {{0, 1}, {1, 0}}) == GraphError::Kind::DuplicateEdge);
    CHECK(error_kind(0, {}) == GraphError::Kind::InvalidParameter);
}

TEST_CASE("Erdos-Renyi generator") {
    CHECK(gen_erdos_renyi(10, 0.0, 1).edge_count() == 0);
    CHECK(gen_erdos_renyi(10, 1.0, 1) == gen_clique(10));
    CHECK(gen_erdos_renyi(40, 0.3, 17) == gen_erdos_renyi(40, 0.3, 17));
    CHECK_FALSE(gen_erdos_renyi(40, 0.3, 17) == gen_erdos_renyi(40, 0.3, 18));
    CHECK_THROWS_AS(gen_erdos_renyi(10, 1.5, 1), GraphError);
    // Edge count of G(200, 0.1) is Binomial(19900, 0.1): mean 1990, sd ~42.
    const auto m = static_cast<double>(gen_erdos_renyi(200, 0.1, 5).edge_count());
    CHECK(std::abs(m - 1990.0) < 4 * 42.3);
}

TEST_CASE("bounded-degree generator respects its cap") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.uniform(20);
        const std::size_t cap = 1 + rng.uniform(5);
        const Graph g = gen_bounded_degree(n, rng.uniform01(), cap, rng);
        CHECK(g.max_degree() <= cap);
        validate(g);
    }
}

TEST_CASE("CSR structure invariants on random graphs") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(1 + rng.uniform(25), rng.uniform01(), rng);
        validate(g);
        std::size_t degree_sum = 0;
        std::size_t max_deg = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            degree_sum += g.degree(v);
            max_deg = std::max(max_deg, g.degree(v));
            for (Vertex u : g.neighbors(v)) {
                CHECK(g.adjacent(u, v));
            }
        }
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(max_deg == g.max_degree());
        const auto edges = g.edges();
        CHECK(Graph::from_edge_list(g.size(), edges) == g);
    }
}

TEST_CASE("text format round trip") {
    const Graph g = gen_erdos_renyi(15, 0.4, 3);
    std::stringstream buffer;
    write_graph(buffer, g);
    CHECK(read_graph(buffer) == g);

    std::istringstream single("1 0\n");
    CHECK(read_graph(single).size() == 1);
}

TEST_CASE("text format errors") {
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(read_graph(bad_header), GraphError);
    std::istringstream short_body("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(short_body), GraphError);
    std::istringstream out_of_range("3 1\n0 5\n");
    CHECK_THROWS_AS(read_graph(out_of_range), GraphError);
    std::istringstream loop("3 1\n2 2\n");
    CHECK_THROWS_AS(read_graph(loop), GraphError);
}

TEST_CASE("gadget layout") {
    const Fig2Gadget gadget = gen_fig2_like();
    CHECK(gadget.graph.size() == 5);
    CHECK(gadget.graph.edge_count() == 4);
    CHECK(gadget.focus == 0);
    CHECK(gadget.graph.degree(0) == 3);
    CHECK(gadget.coloring.palette_size() == 4);
}
