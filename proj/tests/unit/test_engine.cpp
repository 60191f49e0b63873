#include <numeric>
#include <set>

#include "doctest.h"
#include "dcolor/engine.hpp"
#include "dcolor/generators.hpp"
#include "support.hpp"

using namespace dcolor;

namespace {

RunResult run(bool persistent, const Graph& g, Color d, const StartPolicy& start, const SchedulerPolicy& order,
              std::uint64_t seed, RunOptions options = {}) {
    Rng rng(seed);
    return persistent ? run_persistent(g, d, start, order, rng, options)
                      : run_decentralized(g, d, start, order, rng, options);
}

}  // namespace

TEST_CASE("a proper start costs no recolours") {
    const Graph g = gen_clique(4);
    const Coloring proper({1, 2, 3, 4}, 4);
    for (bool persistent : {false, true}) {
        const RunResult r = run(persistent, g, 4, proper, UniformRandomOrder{}, 1);
        CHECK(r.terminated);
        CHECK(r.step3_draws == 0);
        CHECK(r.total_draws == 4);
        CHECK(r.selections == 0);
    }
}

TEST_CASE("random start consumes n draws in vertex order") {
    const Graph g = gen_clique(5);
    Rng rng(77);
    const Coloring start = initial_coloring(g, 5, RandomStart{}, rng);
    Rng replay(77);
    for (Vertex v = 0; v < 5; ++v) {
        CHECK(start[v] == replay.uniform(5) + 1);
    }
}

TEST_CASE("start validation") {
    const Graph g = gen_clique(3);
    Rng rng(1);
    CHECK_THROWS_AS(initial_coloring(g, 3, Coloring({1, 2}, 3), rng), std::invalid_argument);
    CHECK_THROWS_AS(initial_coloring(g, 3, Coloring({1, 2, 3}, 4), rng), std::invalid_argument);
    CHECK_THROWS_AS(run_persistent(g, 3, RandomStart{}, FixedPermutation{{0, 0, 1}}, rng), std::invalid_argument);
}

TEST_CASE("property: runs end proper with consistent counters") {
    Rng meta(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + meta.uniform(20);
        const Graph g = testing::random_graph(n, meta.uniform01(), meta);
        const auto d = static_cast<Color>(g.max_degree() + 1 + meta.uniform(2));
        const bool persistent = trial % 2 == 1;
        RunOptions options;
        options.record_trace = true;
        const RunResult r = run(persistent, g, d, RandomStart{}, UniformRandomOrder{}, meta.next(), options);
        REQUIRE(r.terminated);
        CHECK(is_proper(g, r.final_coloring));
        CHECK(r.total_draws == n + r.step3_draws);
        CHECK(std::accumulate(r.per_vertex_draws.begin(), r.per_vertex_draws.end(), std::uint64_t{0}) ==
              r.step3_draws);
        REQUIRE(r.trace.has_value());
        CHECK(r.trace->size() == r.selections);
        std::uint64_t traced = 0;
        std::set<Vertex> picked;
        for (const auto& sel : *r.trace) {
            traced += sel.draws.size();
            CHECK_FALSE(sel.draws.empty());
            if (persistent) {
                // Each vertex is handled once and keeps drawing until free.
                CHECK(picked.insert(sel.vertex).second);
            } else {
                CHECK(sel.draws.size() == 1);
            }
        }
        CHECK(traced == r.step3_draws);
    }
}

TEST_CASE("same seed reproduces the run") {
    const Graph g = gen_erdos_renyi(30, 0.2, 9);
    const auto d = static_cast<Color>(g.max_degree() + 1);
    for (bool persistent : {false, true}) {
        const RunResult a = run(persistent, g, d, RandomStart{}, UniformRandomOrder{}, 123);
        const RunResult b = run(persistent, g, d, RandomStart{}, UniformRandomOrder{}, 123);
        CHECK(a.total_draws == b.total_draws);
        CHECK(a.per_vertex_draws == b.per_vertex_draws);
        CHECK(std::ranges::equal(a.final_coloring.colors(), b.final_coloring.colors()));
    }
}

TEST_CASE("step cap stops an unsolvable run") {
    // Two colours on a triangle can never be proper.
    const Graph g = gen_clique(3);
    RunOptions options;
    options.step_cap = 500;
    const RunResult r = run(false, g, 2, RandomStart{}, UniformRandomOrder{}, 5, options);
    CHECK_FALSE(r.terminated);
    CHECK(r.step3_draws == 500);
    CHECK(default_step_cap(4, 3) == 360);
}

TEST_CASE("fixed permutation visits conflicted vertices in order") {
    const Graph g = gen_clique(3);
    RunOptions options;
    options.record_trace = true;
    const RunResult r = run(true, g, 3, Coloring::uniform(3, 3), FixedPermutation{{2, 0, 1}}, 8, options);
    REQUIRE(r.trace.has_value());
    REQUIRE(!r.trace->empty());
    CHECK(r.trace->front().vertex == 2);
    for (std::size_t i = 1; i < r.trace->size(); ++i) {
        const Vertex prev = (*r.trace)[i - 1].vertex;
        const Vertex cur = (*r.trace)[i].vertex;
        const std::vector<Vertex> order{2, 0, 1};
        CHECK(std::find(order.begin(), order.end(), prev) < std::find(order.begin(), order.end(), cur));
    }
}

TEST_CASE("random permutations") {
    Rng rng(4);
    for (std::size_t n : {1u, 2u, 9u}) {
        const auto p = random_permutation(n, rng);
        CHECK(is_permutation_of_vertices(p, n));
    }
    const std::vector<Vertex> bad{0, 2};
    CHECK_FALSE(is_permutation_of_vertices(bad, 2));
}
