#include "doctest.h"
#include "dcolor/acceptance.hpp"
#include "dcolor/drift.hpp"

using namespace dcolor;

TEST_CASE("drift samples are invalid and degree-bounded") {
    const auto samples = drift_samples(300, 10, 5, 7);
    CHECK(samples.size() == 300);
    for (const auto& s : samples) {
        const Color d = s.coloring.palette_size();
        CHECK(d >= 2);
        CHECK(d <= 5);
        CHECK(s.graph.size() <= 10);
        CHECK(s.graph.max_degree() <= d - 1);
        CHECK_FALSE(is_proper(s.graph, s.coloring));
    }
}

TEST_CASE("drift check holds on random states and reports the gadget as tight") {
    const DriftReport r = drift_check(300, 10, 5, 8);
    CHECK(r.passed());
    CHECK_FALSE(r.vacuous);
    CHECK(r.min_scaled_phi_drift >= ExactValue(1));
    CHECK(r.max_scaled_edge_drift <= ExactValue(-1));
    CHECK(r.fig2_included);
    CHECK(r.fig2_min_phi_drift == ExactValue(1, 4));
    CHECK(r.fig2_tight);
}

TEST_CASE("a broken potential is caught") {
    // Counting colours used instead of monochromatic components.
    const PhiFunction broken = [](const Graph&, const Coloring& c) {
        std::vector<char> used(c.palette_size() + 1, 0);
        std::size_t k = 0;
        for (Color x : c.colors()) {
            k += used[x] == 0 ? 1 : 0;
            used[x] = 1;
        }
        return k;
    };
    const DriftReport r = drift_check(200, 10, 5, 9, true, broken);
    CHECK_FALSE(r.passed());
    CHECK(format_drift_report(r).find("violations") != std::string::npos);

    AcceptOptions options;
    options.phi = broken;
    CHECK_FALSE(all_passed(run_acceptance("drift", options)));
    // The gadget happens to use three colours, so the count check needs a
    // different stand-in to go wrong.
    options.phi = [](const Graph& g, const Coloring& c) { return conflicted_edge_count(g, c); };
    CHECK_FALSE(all_passed(run_acceptance("fig2", options)));
}

TEST_CASE("acceptance suite names") {
    const auto& names = acceptance_suites();
    CHECK(names.back() == "all");
    CHECK_THROWS_AS(run_acceptance("nope"), std::invalid_argument);
    const auto results = run_acceptance("fig2");
    REQUIRE(results.size() == 1);
    CHECK(results[0].id == "AC-9");
    const std::string report = format_acceptance_report("fig2", results);
    CHECK(report.find("signed-off: PASS") != std::string::npos);
}
