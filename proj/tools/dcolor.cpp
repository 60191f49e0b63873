// dcolor: generate graphs, run colouring experiments, query the exact
// oracles and run the acceptance criteria.
//
// Exit codes: 0 ok, 1 criterion failure, 2 usage or configuration error.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dcolor/acceptance.hpp"
#include "dcolor/drift.hpp"
#include "dcolor/experiment.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/oracle.hpp"

namespace {

using namespace dcolor;

constexpr int kOk = 0;
constexpr int kCriterionFailed = 1;
constexpr int kUsage = 2;

// Graph selection flags shared by several subcommands.
struct GraphFlags {
    std::string family = "clique";
    std::size_t n = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t delta = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string file;

    void add(CLI::App* app) {
        app->add_option("--graph", family, "clique|bipartite|cycle|er|fig2|bad-bipartite|file");
        app->add_option("-n,--n", n, "vertex count (clique, cycle, er)");
        app->add_option("-a,--a", a, "left side (bipartite)");
        app->add_option("-b,--b", b, "right side (bipartite)");
        app->add_option("--delta", delta, "degree (bad-bipartite)");
        app->add_option("-p,--p", p, "edge probability (er)");
        app->add_option("--graph-seed", seed, "generator seed (er)");
        app->add_option("--graph-file", file, "graph in 'n m' edge-list format (implies --graph file)");
    }

    void apply(GraphSpec& spec, const CLI::App* app) const {
        if (app->count("--graph") > 0) {
            spec.family = family;
        }
        if (app->count("--n") > 0) spec.n = n;
        if (app->count("--a") > 0) spec.a = a;
        if (app->count("--b") > 0) spec.b = b;
        if (app->count("--delta") > 0) spec.delta = delta;
        if (app->count("--p") > 0) spec.p = p;
        if (app->count("--graph-seed") > 0) spec.seed = seed;
        if (!file.empty()) {
            spec.family = "file";
            spec.path = file;
        }
    }
};

// Experiment flags; each one overrides the --config file when given.
struct RunFlags {
    GraphFlags graph;
    std::string config_path;
    std::string algorithm = "dc";
    Color palette = 0;
    std::string start = "random";
    std::string start_file;
    std::string order = "uniform";
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 1;
    std::uint64_t step_cap = 0;
    std::vector<std::string> counters;
    bool per_vertex = false;
    bool per_trial = false;
    bool exclude_capped = false;
    std::size_t threads = 0;
    std::string output;

    void add(CLI::App* app) {
        graph.add(app);
        app->add_option("--config", config_path, "JSON experiment configuration");
        app->add_option("--algo", algorithm, "dc|persistent");
        app->add_option("-D,--palette", palette, "palette size (default max degree + 1)");
        app->add_option("--start", start, "random|mono|family|file:<path>");
        app->add_option("--start-file", start_file, "start colouring file ('D=<int> c0 c1 ...')");
        app->add_option("--order", order,
                        "uniform|perm:<file>|mimic|mimic-lowest|min-drift|max-conflicted|script:<file>");
        app->add_option("--trials", trials, "number of trials");
        app->add_option("--seed", seed, "master seed");
        app->add_option("--step-cap", step_cap, "draw cap per trial (0 = 10 n D^2)");
        app->add_option("--counters", counters, "total_draws|step3_draws|selections")->delimiter(',');
        app->add_flag("--per-vertex", per_vertex, "per-vertex draw means");
        app->add_flag("--per-trial", per_trial, "write one CSV row per trial");
        app->add_flag("--exclude-capped", exclude_capped, "drop capped trials from the statistics");
        app->add_option("--threads", threads, "worker threads (0 = available parallelism)");
        app->add_option("-o,--output", output, "output path prefix (relative to DCOLOR_OUTPUT_DIR)");
    }

    ExperimentConfig build(const CLI::App* app) const {
        ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
        graph.apply(cfg.graph, app);
        if (app->count("--algo") > 0) cfg.algorithm = parse_algorithm(algorithm);
        if (app->count("--palette") > 0) cfg.palette = palette;
        if (app->count("--start") > 0) cfg.start = start;
        if (!start_file.empty()) cfg.start = "file:" + start_file;
        if (app->count("--order") > 0) cfg.order = order;
        if (app->count("--trials") > 0) cfg.trials = trials;
        if (app->count("--seed") > 0) cfg.master_seed = seed;
        if (app->count("--step-cap") > 0) cfg.step_cap = step_cap;
        if (!counters.empty()) {
            cfg.counters.clear();
            for (const auto& c : counters) {
                cfg.counters.push_back(parse_counter(c));
            }
        }
        cfg.per_vertex = cfg.per_vertex || per_vertex;
        cfg.per_trial = cfg.per_trial || per_trial;
        cfg.exclude_capped = cfg.exclude_capped || exclude_capped;
        if (app->count("--threads") > 0) cfg.threads = threads;
        if (app->count("--output") > 0) cfg.output = output;
        if (!cfg.output.empty() && std::filesystem::path(cfg.output).is_relative()) {
            cfg.output = (std::filesystem::path(default_output_dir()) / cfg.output).string();
        }
        return cfg;
    }
};

void warn_caps(const TrialReport& report) {
    const auto& s = report.total_draws;
    if (s.cap_hits > 0) {
        fmt::print(std::cerr, "warning: {} of {} trials hit the step cap{}\n", s.cap_hits,
                   report.trials.size(), s.cap_hits_excluded ? " (excluded)" : " (kept in the statistics)");
    }
}

void write_trace(const std::string& path, const ExperimentConfig& cfg) {
    const Instance inst = materialize(cfg);
    Rng rng(trial_seed(cfg.master_seed, 0));
    RunOptions options;
    options.step_cap = cfg.step_cap;
    options.record_trace = true;
    const RunResult r = cfg.algorithm == Algorithm::Decentralized
                            ? run_decentralized(inst.graph, inst.palette, inst.start, inst.order, rng, options)
                            : run_persistent(inst.graph, inst.palette, inst.start, inst.order, rng, options);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (path != "-") {
        file.open(path);
        if (!file) {
            throw std::runtime_error("cannot write '" + path + "'");
        }
        out = &file;
    }
    std::size_t step = 0;
    for (const auto& sel : *r.trace) {
        *out << ++step << ' ' << sel.vertex;
        for (Color d : sel.draws) {
            *out << ' ' << d;
        }
        *out << '\n';
    }
}

int cmd_gen(const GraphFlags& flags, const CLI::App* app, const std::string& out_path,
            const std::string& start_out) {
    ExperimentConfig cfg;
    flags.apply(cfg.graph, app);
    cfg.start = start_out.empty() ? "random" : "family";
    const Instance inst = materialize(cfg);
    if (out_path.empty() || out_path == "-") {
        write_graph(std::cout, inst.graph);
    } else {
        save_graph(out_path, inst.graph);
    }
    if (!start_out.empty()) {
        std::ofstream out(start_out);
        if (!out) {
            throw std::runtime_error("cannot write '" + start_out + "'");
        }
        write_coloring(out, std::get<Coloring>(inst.start));
    }
    return kOk;
}

int cmd_run(const RunFlags& flags, const CLI::App* app, const std::string& trace) {
    const ExperimentConfig cfg = flags.build(app);
    const TrialReport report = run_trials(cfg);
    write_summary_csv(std::cout, report);
    warn_caps(report);
    for (const auto& path : write_outputs(report)) {
        fmt::print(std::cerr, "wrote {}\n", path);
    }
    if (!trace.empty()) {
        write_trace(trace, cfg);
    }
    return kOk;
}

int cmd_sweep(const RunFlags& flags, const CLI::App* app, const std::string& axis,
              const std::vector<std::string>& values) {
    ExperimentConfig cfg = flags.build(app);
    const std::string out_path = cfg.output;
    cfg.output.clear();
    const auto rows = sweep(cfg, axis, values);
    for (const auto& row : rows) {
        warn_caps(row.report);
    }
    if (out_path.empty()) {
        write_sweep_csv(std::cout, axis, rows);
    } else {
        std::ofstream out(out_path + ".sweep.csv", std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write '" + out_path + ".sweep.csv'");
        }
        write_sweep_csv(out, axis, rows);
        fmt::print(std::cerr, "wrote {}.sweep.csv\n", out_path);
    }
    return kOk;
}

void print_chain(const ExactValue& value, const ChainReport& report) {
    fmt::print("{}\n", value.to_string());
    fmt::print(std::cerr, "states: {}, {}\n", report.states,
               report.exact ? "exact elimination" : fmt::format("certified bound {:.3g}", report.error_bound));
}

int cmd_oracle_chain(const RunFlags& flags, const CLI::App* app, bool persistent) {
    const ExperimentConfig cfg = flags.build(app);
    const Instance inst = materialize(cfg);
    if (persistent) {
        PersistentOracleOrder order = AllPermutationsAverage{};
        if (const auto* perm = std::get_if<FixedPermutation>(&inst.order)) {
            order = *perm;
        } else if (!std::holds_alternative<UniformRandomOrder>(inst.order)) {
            throw ConfigError("persistent oracle supports --order uniform or perm:<file>");
        }
        fmt::print("{}\n", exact_expected_recolorings_persistent(inst.graph, inst.palette, inst.start, order)
                               .to_string());
        return kOk;
    }
    DcOracleOrder order = UniformRandomOrder{};
    if (const auto* adv = std::get_if<AdversaryStrategy>(&inst.order)) {
        const auto* mimic = std::get_if<MimicPersistent>(adv);
        if (mimic == nullptr) {
            throw ConfigError("dc oracle supports --order uniform, mimic or mimic-lowest");
        }
        order = *mimic;
    } else if (!std::holds_alternative<UniformRandomOrder>(inst.order)) {
        throw ConfigError("dc oracle supports --order uniform, mimic or mimic-lowest");
    }
    ChainReport report;
    const ExactValue value = exact_expected_recolorings_dc(inst.graph, inst.palette, inst.start, order, {}, &report);
    print_chain(value, report);
    return kOk;
}

int cmd_oracle_deltas(const GraphFlags& flags, const CLI::App* app, const std::string& coloring_path,
                      Vertex vertex) {
    ExperimentConfig cfg;
    flags.apply(cfg.graph, app);
    cfg.start = coloring_path.empty() ? "family" : "file:" + coloring_path;
    const Instance inst = materialize(cfg);
    const Coloring& c = std::get<Coloring>(inst.start);
    if (vertex >= inst.graph.size() || !is_conflicted(inst.graph, c, vertex)) {
        throw ConfigError(fmt::format("vertex {} is not a conflicted vertex of the instance", vertex));
    }
    const ConflictDeltas d = exact_expected_conflict_deltas(inst.graph, c, vertex);
    fmt::print("phi {}\n", d.phi.to_string());
    fmt::print("conflicted_vertices {}\n", d.conflicted_vertices.to_string());
    fmt::print("conflicted_edges {}\n", d.conflicted_edges.to_string());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decentralized graph colouring experiments"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated graph in edge-list format");
    GraphFlags gen_graph;
    gen_graph.add(gen);
    std::string gen_out;
    std::string gen_start_out;
    gen->add_option("-o,--output", gen_out, "graph file (default stdout)");
    gen->add_option("--start-out", gen_start_out, "also write the family's own start colouring (fig2, bad-bipartite)");

    // run
    auto* run = app.add_subcommand("run", "run trials and print summary statistics");
    RunFlags run_flags;
    run_flags.add(run);
    std::string trace;
    run->add_option("--trace", trace, "write the selections of trial 0 to this file ('-' = stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run trials over a list of parameter values");
    RunFlags sweep_flags;
    sweep_flags.add(sweep_cmd);
    std::string axis;
    std::vector<std::string> values;
    sweep_cmd->add_option("--axis", axis, "n|a|b|delta|p|graph_seed|D|seed|trials")->required();
    sweep_cmd->add_option("--values", values, "comma-separated values")->required()->delimiter(',');

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact expectations as p/q (≈ decimal)");
    oracle->require_subcommand(1);
    std::uint64_t harmonic_k = 0;
    auto* o_harmonic = oracle->add_subcommand("harmonic", "H_k");
    o_harmonic->add_option("k", harmonic_k)->required();
    std::uint64_t collect_d = 0;
    std::uint64_t collect_k = 0;
    auto* o_collect = oracle->add_subcommand("collect", "expected draws to see k of D colours");
    o_collect->add_option("D", collect_d)->required();
    o_collect->add_option("k", collect_k)->required();
    auto* o_dc = oracle->add_subcommand("dc", "expected recolourings of Decentralized Coloring");
    RunFlags dc_flags;
    dc_flags.add(o_dc);
    auto* o_persistent = oracle->add_subcommand("persistent", "expected recolourings of the persistent variant");
    RunFlags persistent_flags;
    persistent_flags.add(o_persistent);
    auto* o_deltas = oracle->add_subcommand("deltas", "expected one-step potential changes at a vertex");
    GraphFlags deltas_graph;
    deltas_graph.add(o_deltas);
    std::string deltas_coloring;
    Vertex deltas_vertex = 0;
    o_deltas->add_option("--coloring", deltas_coloring, "colouring file (default: the family's own start)");
    o_deltas->add_option("--vertex", deltas_vertex, "conflicted vertex")->required();

    // drift-check
    auto* drift = app.add_subcommand("drift-check", "exact drift check on random invalid states");
    std::size_t drift_samples_count = 1000;
    std::size_t drift_n_max = 12;
    Color drift_d_max = 6;
    std::uint64_t drift_seed = 1;
    bool drift_no_fig2 = false;
    drift->add_option("--samples", drift_samples_count);
    drift->add_option("--n-max", drift_n_max);
    drift->add_option("--d-max", drift_d_max);
    drift->add_option("--seed", drift_seed);
    drift->add_flag("--no-gadget", drift_no_fig2, "leave out the fixed gadget sample");

    // accept
    auto* accept = app.add_subcommand("accept", "run acceptance criteria with pinned seeds");
    std::string suite = "all";
    std::size_t accept_threads = 0;
    std::string report_path;
    accept->add_option("suite", suite)->check(CLI::IsMember(acceptance_suites()));
    accept->add_option("--threads", accept_threads);
    accept->add_option("--report", report_path, "also write the signed-off report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            return cmd_gen(gen_graph, gen, gen_out, gen_start_out);
        }
        if (*run) {
            return cmd_run(run_flags, run, trace);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_flags, sweep_cmd, axis, values);
        }
        if (*oracle) {
            if (*o_harmonic) {
                fmt::print("{}\n", harmonic(harmonic_k).to_string());
            } else if (*o_collect) {
                fmt::print("{}\n", expected_draws_to_collect(collect_d, collect_k).to_string());
            } else if (*o_dc) {
                return cmd_oracle_chain(dc_flags, o_dc, false);
            } else if (*o_persistent) {
                return cmd_oracle_chain(persistent_flags, o_persistent, true);
            } else {
                return cmd_oracle_deltas(deltas_graph, o_deltas, deltas_coloring, deltas_vertex);
            }
            return kOk;
        }
        if (*drift) {
            const DriftReport report =
                drift_check(drift_samples_count, drift_n_max, drift_d_max, drift_seed, !drift_no_fig2);
            std::cout << format_drift_report(report);
            return report.passed() ? kOk : kCriterionFailed;
        }
        if (*accept) {
            AcceptOptions options;
            options.threads = accept_threads;
            options.progress = &std::cerr;
            const auto results = run_acceptance(suite, options);
            const std::string text = format_acceptance_report(suite, results);
            std::cout << text;
            if (!report_path.empty()) {
                std::ofstream(report_path) << text;
            }
            return all_passed(results) ? kOk : kCriterionFailed;
        }
    } catch (const ConfigError& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        fmt::print(std::cerr, "error: {}\n", e.what());
        return kUsage;
    }
    return kOk;
}
