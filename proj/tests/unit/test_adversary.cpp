#include "doctest.h"
#include "dcolor/adversary.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/generators.hpp"

using namespace dcolor;

TEST_CASE("min-drift picks the gadget's focus vertex") {
    const Fig2Gadget gadget = gen_fig2_like();
    const auto conflicted = conflicted_vertices(gadget.graph, gadget.coloring);
    const History history;
    const AdversaryView view{gadget.graph, gadget.coloring, conflicted, history};
    // Expected Phi changes: focus 1/4, its green neighbour 3/2, the leaf 3/4.
    CHECK(min_phi_drift_pick(view) == gadget.focus);
    CHECK(max_conflicted_pick(view) == 1);
}

TEST_CASE("max-conflicted prefers the busiest vertex") {
    // Star with centre 3 sharing colour with all leaves, plus a separate edge.
    const Graph g = Graph::from_edge_list(6, std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {4, 5}});
    const Coloring c({1, 1, 1, 1, 2, 2}, 4);
    const auto conflicted = conflicted_vertices(g, c);
    const History history;
    const AdversaryView view{g, c, conflicted, history};
    CHECK(max_conflicted_pick(view) == 3);
}

TEST_CASE("mimic keeps hammering its last pick while conflicted") {
    const Graph g = gen_clique(4);
    const Coloring c = Coloring::uniform(4, 4);
    const auto conflicted = conflicted_vertices(g, c);
    Rng rng(2);
    History history;
    history.last_pick = 2;
    history.selections = 3;
    const AdversaryView view{g, c, conflicted, history};
    for (int i = 0; i < 20; ++i) {
        CHECK(mimic_persistent_pick(view, SelectionMode::Uniform, rng) == 2);
    }
    History fresh;
    const AdversaryView fresh_view{g, c, conflicted, fresh};
    CHECK(mimic_persistent_pick(fresh_view, SelectionMode::LowestId, rng) == 0);
}

TEST_CASE("scripted adversary errors") {
    const Graph g = gen_clique(3);
    const Coloring c({1, 1, 2}, 3);
    const auto conflicted = conflicted_vertices(g, c);
    Rng rng(1);
    History history;
    const AdversaryView view{g, c, conflicted, history};
    CHECK(adversary_pick(Scripted{{1}}, view, rng) == 1);
    CHECK_THROWS_AS(adversary_pick(Scripted{{2}}, view, rng), SchedulerError);
    history.selections = 1;
    CHECK_THROWS_AS(adversary_pick(Scripted{{1}}, view, rng), SchedulerError);
}

TEST_CASE("bad bipartite start layout") {
    for (std::size_t delta : {1u, 3u, 8u}) {
        const auto bad = bad_bipartite_start(delta);
        CHECK(bad.graph.size() == 2 * delta);
        CHECK(bad.coloring.palette_size() == delta + 1);
        CHECK(conflicted_vertices(bad.graph, bad.coloring).size() == delta + 1);
        for (Vertex left = 0; left < delta; ++left) {
            CHECK(free_colors(bad.graph, bad.coloring, left) == std::vector<Color>{static_cast<Color>(delta + 1)});
        }
    }
    CHECK_THROWS_AS(bad_bipartite_start(0), GraphError);
}

TEST_CASE("adversarial runs terminate on small instances") {
    const auto bad = bad_bipartite_start(4);
    const std::vector<AdversaryStrategy> strategies{MimicPersistent{}, MinPhiDrift{}, MaxConflicted{},
                                                    MimicPersistent{SelectionMode::LowestId}};
    for (const auto& s : strategies) {
        Rng rng(10);
        const RunResult r = run_decentralized(bad.graph, 5, bad.coloring, s, rng);
        CHECK(r.terminated);
        CHECK(is_proper(bad.graph, r.final_coloring));
        Rng rng2(10);
        const RunResult p = run_persistent(bad.graph, 5, bad.coloring, s, rng2);
        CHECK(p.terminated);
    }
    CHECK(describe(MinPhiDrift{}) == "min-drift");
    CHECK(describe(MimicPersistent{SelectionMode::LowestId}) == "mimic-lowest");
}
