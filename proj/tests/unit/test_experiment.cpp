#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dcolor/experiment.hpp"
#include "dcolor/stats.hpp"

using namespace dcolor;

namespace {

ExperimentConfig clique_config(std::size_t n, std::uint64_t trials) {
    ExperimentConfig cfg;
    cfg.graph.family = "clique";
    cfg.graph.n = n;
    cfg.trials = trials;
    cfg.master_seed = 9;
    cfg.threads = 1;
    return cfg;
}

std::string csv(const TrialReport& r) {
    std::ostringstream out;
    write_summary_csv(out, r);
    write_per_vertex_csv(out, r);
    write_per_trial_csv(out, r);
    out << summary_json(r);
    return out.str();
}

}  // namespace

TEST_CASE("summary statistics by hand") {
    const std::vector<std::uint64_t> values{1, 2, 3, 4};
    const SummaryStats s = summarize(values);
    CHECK(s.trials == 4);
    CHECK(s.mean == 2.5);
    CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(s.se == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
    CHECK(s.ci_low == doctest::Approx(2.5 - kZ99 * s.se));
    CHECK(s.min == 1);
    CHECK(s.max == 4);

    const std::vector<char> capped{0, 0, 0, 1};
    const SummaryStats kept = summarize(values, capped);
    CHECK(kept.cap_hits == 1);
    CHECK(kept.trials == 4);
    const SummaryStats dropped = summarize(values, capped, true);
    CHECK(dropped.trials == 3);
    CHECK(dropped.mean == 2.0);

    CHECK(within_se(10.0, 10.3, 0.1, 4.0));
    CHECK_FALSE(within_se(10.0, 10.5, 0.1, 4.0));
    CHECK(within_se(3.0, 3.0, 0.0, 4.0));
}

TEST_CASE("config JSON round trip and rejection") {
    const auto cfg = parse_config_json(R"({"graph": {"family": "er", "n": 20, "p": 0.25, "seed": 4},
        "algorithm": "persistent", "D": 7, "start": "mono", "order": "mimic", "trials": 500,
        "master_seed": 3, "counters": ["total_draws", "per_vertex"]})");
    CHECK(cfg.graph.family == "er");
    CHECK(cfg.graph.n == 20);
    CHECK(cfg.algorithm == Algorithm::Persistent);
    CHECK(cfg.palette == Color{7});
    CHECK(cfg.per_vertex);
    CHECK(cfg.counters == std::vector<Counter>{Counter::TotalDraws});
    const auto again = parse_config_json(config_to_json(cfg));
    CHECK(config_to_json(again) == config_to_json(cfg));
    CHECK(config_hash(again) == config_hash(cfg));
    CHECK(config_hash(cfg).size() == 16);

    CHECK_THROWS_AS(parse_config_json(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"algorithm": "greedy"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("not json"), ConfigError);
}

TEST_CASE("materialize errors") {
    ExperimentConfig cfg = clique_config(4, 10);
    cfg.graph.family = "torus";
    CHECK_THROWS_AS(materialize(cfg), ConfigError);
    cfg = clique_config(4, 10);
    cfg.start = "family";
    CHECK_THROWS_AS(materialize(cfg), ConfigError);
    cfg = clique_config(4, 10);
    cfg.order = "zigzag";
    CHECK_THROWS_AS(materialize(cfg), ConfigError);
    cfg = clique_config(4, 0);
    CHECK_THROWS_AS(materialize(cfg), ConfigError);
    cfg = clique_config(4, 10);
    cfg.start = "file:/nonexistent/start.txt";
    CHECK_THROWS_AS(materialize(cfg), ConfigError);
}

TEST_CASE("reports are byte-identical across thread counts") {
    ExperimentConfig cfg = clique_config(12, 3000);
    cfg.per_vertex = true;
    cfg.per_trial = true;
    const std::string single = csv(run_trials(cfg));
    cfg.threads = 3;
    CHECK(csv(run_trials(cfg)) == single);
    cfg.algorithm = Algorithm::Persistent;
    const std::string p3 = csv(run_trials(cfg));
    cfg.threads = 1;
    CHECK(csv(run_trials(cfg)) == p3);
}

TEST_CASE("a proper fixed start gives zero mean and zero SE") {
    ExperimentConfig cfg;
    cfg.graph.family = "cycle";
    cfg.graph.n = 4;
    cfg.trials = 50;
    cfg.threads = 1;
    const auto dir = std::filesystem::temp_directory_path() / "dcolor_experiment_test";
    std::filesystem::create_directories(dir);
    const auto start = dir / "proper.txt";
    std::ofstream(start) << "D=3 1 2 1 2\n";
    cfg.start = "file:" + start.string();
    const TrialReport r = run_trials(cfg);
    CHECK(r.step3_draws.mean == 0.0);
    CHECK(r.step3_draws.se == 0.0);
    CHECK(r.total_draws.mean == 4.0);
}

TEST_CASE("single edge from a shared colour needs two draws on average") {
    ExperimentConfig cfg;
    cfg.graph.family = "clique";
    cfg.graph.n = 2;
    cfg.palette = 2;
    cfg.start = "mono";
    cfg.trials = 20'000;
    cfg.threads = 1;
    const TrialReport r = run_trials(cfg);
    CHECK(within_se(r.step3_draws.mean, 2.0, r.step3_draws.se, 4.0));
}

TEST_CASE("capped trials are reported") {
    ExperimentConfig cfg = clique_config(3, 20);
    cfg.palette = 2;
    cfg.step_cap = 50;
    const TrialReport r = run_trials(cfg);
    CHECK(r.step3_draws.cap_hits == 20);
    cfg.exclude_capped = true;
    CHECK(run_trials(cfg).step3_draws.trials == 0);
}

TEST_CASE("sweep over clique sizes tracks n H_n") {
    ExperimentConfig cfg = clique_config(4, 20'000);
    cfg.counters = {Counter::TotalDraws};
    const auto rows = sweep(cfg, "n", {"4", "8", "16"});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        const double n = static_cast<double>(row.report.n);
        double h = 0.0;
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            h += 1.0 / i;
        }
        const auto& s = row.report.total_draws;
        CHECK(std::abs(s.mean / (n * h) - 1.0) <= 4.0 * s.se / (n * h));
    }
    std::ostringstream out;
    write_sweep_csv(out, "n", rows);
    CHECK(out.str().rfind("axis,value", 0) == 0);
    CHECK_THROWS_AS(sweep(cfg, "colour", {"1"}), ConfigError);
    CHECK_THROWS_AS(sweep(cfg, "n", {"x"}), ConfigError);
}

TEST_CASE("output files") {
    const auto dir = std::filesystem::temp_directory_path() / "dcolor_experiment_test";
    std::filesystem::create_directories(dir);
    ExperimentConfig cfg = clique_config(5, 100);
    cfg.per_vertex = true;
    cfg.output = (dir / "run").string();
    const auto paths = write_outputs(run_trials(cfg));
    CHECK(paths.size() == 3);
    for (const auto& p : paths) {
        CHECK(std::filesystem::file_size(p) > 0);
    }
}
