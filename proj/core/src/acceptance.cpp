#include "dcolor/acceptance.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "dcolor/adversary.hpp"
#include "dcolor/experiment.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/oracle.hpp"

namespace dcolor {

namespace {

// Tolerance in standard errors for every Monte Carlo comparison.
constexpr double kSigmas = 4.0;

constexpr std::uint64_t kCliqueSeed = 20191001;
constexpr std::uint64_t kPerVertexSeed = 20191002;
constexpr std::uint64_t kPerVertexGraphSeed = 64015;
constexpr std::uint64_t kBipartiteSeed = 20191003;
constexpr std::uint64_t kDriftSeed = 20191004;
constexpr std::uint64_t kAdversarialSeed = 20191005;
constexpr std::uint64_t kAdversarialGraphSeed = 24020;
constexpr std::uint64_t kCoherenceSeed = 20191006;

struct Context {
    const AcceptOptions& options;

    ExperimentConfig config(GraphSpec graph, Algorithm algo, std::string start, std::string order,
                            std::uint64_t trials, std::uint64_t seed) const {
        ExperimentConfig cfg;
        cfg.graph = std::move(graph);
        cfg.algorithm = algo;
        cfg.start = std::move(start);
        cfg.order = std::move(order);
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.threads = options.threads;
        return cfg;
    }

    std::size_t phi(const Graph& g, const Coloring& c) const {
        return options.phi ? options.phi(g, c) : monochromatic_component_count(g, c);
    }
};

GraphSpec clique(std::size_t n) {
    GraphSpec g;
    g.family = "clique";
    g.n = n;
    return g;
}

GraphSpec bad_bipartite(std::size_t delta) {
    GraphSpec g;
    g.family = "bad-bipartite";
    g.delta = delta;
    return g;
}

GraphSpec erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    GraphSpec g;
    g.family = "er";
    g.n = n;
    g.p = p;
    g.seed = seed;
    return g;
}

GraphSpec cycle(std::size_t n) {
    GraphSpec g;
    g.family = "cycle";
    g.n = n;
    return g;
}

std::string mean_se(const SummaryStats& s) { return fmt::format("{:.6f} ± {:.6f}", s.mean, s.se); }

// ---------------------------------------------------------------------------

CriterionResult ac1(const Context&) {
    CriterionResult r{"AC-1", "clique exact expectation equals n*H_n", false, "", 0};
    ChainReport k3_info;
    ChainReport k4_info;
    const ExactValue k3 =
        exact_expected_recolorings_dc(gen_clique(3), 3, RandomStart{}, UniformRandomOrder{}, {}, &k3_info);
    const ExactValue k4 =
        exact_expected_recolorings_dc(gen_clique(4), 4, RandomStart{}, UniformRandomOrder{}, {}, &k4_info);
    const ExactValue k3_target = ExactValue(3) * harmonic(3) - ExactValue(3);
    const ExactValue k4_target = ExactValue(4) * harmonic(4) - ExactValue(4);
    r.passed = k3_info.exact && k4_info.exact && k3 == ExactValue(5, 2) && k3 == k3_target &&
               k4 == ExactValue(13, 3) && k4 == k4_target &&
               k3 + ExactValue(3) == ExactValue(11, 2);
    r.detail = fmt::format("K3/D=3 step3 = {} (want 5/2, total {}); K4/D=4 step3 = {} (want 13/3)",
                           k3.fraction(), (k3 + ExactValue(3)).fraction(), k4.fraction());
    return r;
}

CriterionResult ac2(const Context& ctx) {
    CriterionResult r{"AC-2", "K8 Monte Carlo total draws within 4 SE of 8*H_8", false, "", 0};
    const auto report = run_trials(ctx.config(clique(8), Algorithm::Decentralized, "random", "uniform",
                                              100'000, kCliqueSeed));
    const double target = (ExactValue(8) * harmonic(8)).to_double();
    const auto& s = report.total_draws;
    r.passed = s.cap_hits == 0 && within_se(s.mean, target, s.se, kSigmas);
    r.detail = fmt::format("mean total_draws {} vs 8*H_8 = {:.6f} ({:+.2f} SE, {} trials)", mean_se(s), target,
                           s.se > 0 ? (s.mean - target) / s.se : 0.0, s.trials);
    return r;
}

CriterionResult ac3(const Context& ctx) {
    CriterionResult r{"AC-3", "persistent per-vertex draws <= H_deg(v) + 4 SE", false, "", 0};
    std::vector<std::string> parts;
    bool ok = true;
    auto check = [&](GraphSpec spec, std::optional<Color> palette, const char* name) {
        auto cfg = ctx.config(std::move(spec), Algorithm::Persistent, "random", "uniform", 100'000, kPerVertexSeed);
        cfg.palette = palette;
        cfg.per_vertex = true;
        const auto report = run_trials(cfg);
        std::size_t bad = 0;
        double worst = -1e300;
        for (const auto& pv : report.per_vertex) {
            const double bound = harmonic(pv.degree).to_double();
            const double slack = pv.mean - (bound + kSigmas * pv.se);
            worst = std::max(worst, pv.mean - bound);
            if (slack > 0) {
                ++bad;
            }
        }
        ok = ok && bad == 0 && report.step3_draws.cap_hits == 0;
        parts.push_back(fmt::format("{} (n={}, max deg={}, D={}): {} vertices over bound, max(mean - H_deg) = {:.4f}",
                                    name, report.n, report.max_degree, report.palette, bad, worst));
    };
    check(clique(32), Color{32}, "K32");
    check(erdos_renyi(64, 0.15, kPerVertexGraphSeed), std::nullopt, "G(64,0.15)");
    r.passed = ok;
    r.detail = fmt::format("{}; {}", parts[0], parts[1]);
    return r;
}

CriterionResult ac4(const Context& ctx) {
    CriterionResult r{"AC-4", "bad bipartite start forces Theta(n*Delta) persistent draws", false,
                      "", 0};
    bool ok = true;
    std::string detail;
    std::vector<double> means;
    const std::vector<std::size_t> deltas{4, 8, 16, 32};
    for (std::size_t delta : deltas) {
        const auto report = run_trials(
            ctx.config(bad_bipartite(delta), Algorithm::Persistent, "family", "uniform", 10'000, kBipartiteSeed));
        const auto& s = report.step3_draws;
        const double floor = static_cast<double>(delta * delta) / 8.0;
        ok = ok && s.mean >= floor && s.cap_hits == 0;
        means.push_back(s.mean);
        detail += fmt::format("Delta={}: {} (floor {:.1f}); ", delta, mean_se(s), floor);
    }
    for (std::size_t i = 1; i < means.size(); ++i) {
        const double ratio = means[i] / means[i - 1];
        ok = ok && ratio >= 3.0;
        detail += fmt::format("ratio {}/{} = {:.3f}; ", deltas[i], deltas[i - 1], ratio);
    }
    const auto bad3 = bad_bipartite_start(3);
    const ExactValue exact =
        exact_expected_recolorings_persistent(bad3.graph, 4, bad3.coloring, AllPermutationsAverage{});
    const auto report3 = run_trials(
        ctx.config(bad_bipartite(3), Algorithm::Persistent, "family", "uniform", 10'000, kBipartiteSeed));
    const auto& s3 = report3.step3_draws;
    ok = ok && within_se(s3.mean, exact.to_double(), s3.se, kSigmas);
    detail += fmt::format("Delta=3: MC {} vs exact {}", mean_se(s3), exact.to_string());
    r.passed = ok;
    r.detail = detail;
    return r;
}

struct DriftPair {
    CriterionResult phi;
    CriterionResult edges;
};

DriftPair ac5_ac7(const Context& ctx) {
    DriftPair out{{"AC-5", "exact Phi drift >= 1/D on 1000 random invalid states", false, "", 0},
                  {"AC-7", "exact conflicted-edge drift <= -1/D on the same states", false, "", 0}};
    const DriftReport report = drift_check(1000, 12, 6, kDriftSeed, true, ctx.options.phi);
    std::size_t phi_bad = 0;
    std::size_t edge_bad = 0;
    for (const auto& v : report.violations) {
        (v.potential == "phi" ? phi_bad : edge_bad) += 1;
    }
    out.phi.passed = !report.vacuous && phi_bad == 0 && report.fig2_included &&
                     report.fig2_min_phi_drift == ExactValue(1, 4) && report.fig2_tight;
    out.phi.detail = fmt::format("{} samples, {} conflicted vertices, {} violations, min D*drift = {}, fig2 drift = {}{}",
                                 report.samples, report.vertices_checked, phi_bad,
                                 report.min_scaled_phi_drift.fraction(), report.fig2_min_phi_drift.fraction(),
                                 report.fig2_tight ? " (tight)" : "");
    out.edges.passed = !report.vacuous && edge_bad == 0;
    out.edges.detail = fmt::format("{} violations, max D*edge drift = {}", edge_bad,
                                   report.max_scaled_edge_drift.fraction());
    return out;
}

CriterionResult ac6(const Context& ctx) {
    CriterionResult r{"AC-6", "min-drift adversary stays within (n-1)*D + 4 SE", false, "", 0};
    struct Case {
        GraphSpec graph;
        std::string start;
    };
    const std::vector<Case> cases{
        {bad_bipartite(3), "family"},  {bad_bipartite(6), "family"},
        {bad_bipartite(12), "family"}, {clique(8), "mono"},
        {cycle(24), "mono"},           {erdos_renyi(24, 0.2, kAdversarialGraphSeed), "mono"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const auto report = run_trials(
            ctx.config(c.graph, Algorithm::Decentralized, c.start, "min-drift", 10'000, kAdversarialSeed));
        const auto& s = report.step3_draws;
        const double bound = static_cast<double>((report.n - 1) * report.palette);
        const bool pass = s.cap_hits == 0 && s.mean <= bound + kSigmas * s.se;
        ok = ok && pass;
        detail += fmt::format("{} [{}]: {} <= {:.0f}{}; ", report.graph_label, c.start, mean_se(s), bound,
                              pass ? "" : " FAILED");
    }
    r.passed = ok;
    r.detail = detail;
    return r;
}

// Small graphs with max degree <= 3 so that D = Delta + 1 .. 4 is available.
std::vector<std::pair<std::string, Graph>> mimic_family() {
    auto g = [](std::size_t n, std::vector<Edge> e) { return Graph::from_edge_list(n, e); };
    return {
        {"K2", g(2, {{0, 1}})},
        {"P3", g(3, {{0, 1}, {1, 2}})},
        {"K3", gen_clique(3)},
        {"K2+K1", g(3, {{0, 1}})},
        {"P4", g(4, {{0, 1}, {1, 2}, {2, 3}})},
        {"K1,3", g(4, {{0, 1}, {0, 2}, {0, 3}})},
        {"C4", gen_cycle(4)},
        {"paw", g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
        {"diamond", g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
        {"K4", gen_clique(4)},
        {"2K2", g(4, {{0, 1}, {2, 3}})},
        {"P5", g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})},
        {"C5", gen_cycle(5)},
        {"bull", g(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}})},
        {"K2,3", gen_complete_bipartite(2, 3)},
        {"house", g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})},
    };
}

CriterionResult ac8(const Context&) {
    CriterionResult r{"AC-8", "mimic adversary DC expectation equals persistent expectation exactly",
                      false, "", 0};
    Rng rng(0xAC8);
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
    for (const auto& [name, graph] : mimic_family()) {
        for (Color d = static_cast<Color>(graph.max_degree() + 1); d <= 4; ++d) {
            Coloring scrambled = random_coloring(graph.size(), d, rng);
            while (is_proper(graph, scrambled)) {
                scrambled = random_coloring(graph.size(), d, rng);
            }
            const std::vector<std::pair<std::string, StartPolicy>> starts{
                {"random", RandomStart{}},
                {"mono", Coloring::uniform(graph.size(), d)},
                {"scrambled", scrambled},
            };
            std::vector<Vertex> identity(graph.size());
            std::iota(identity.begin(), identity.end(), Vertex{0});
            for (const auto& [start_name, start] : starts) {
                ++instances;
                const ExactValue dc_uniform = exact_expected_recolorings_dc(
                    graph, d, start, MimicPersistent{SelectionMode::Uniform});
                const ExactValue persistent_all =
                    exact_expected_recolorings_persistent(graph, d, start, AllPermutationsAverage{});
                const ExactValue dc_lowest = exact_expected_recolorings_dc(
                    graph, d, start, MimicPersistent{SelectionMode::LowestId});
                const ExactValue persistent_fixed =
                    exact_expected_recolorings_persistent(graph, d, start, FixedPermutation{identity});
                const bool same = dc_uniform.is_exact() && dc_lowest.is_exact() &&
                                  dc_uniform == persistent_all && dc_lowest == persistent_fixed;
                if (!same) {
                    ++mismatches;
                    if (first_mismatch.empty()) {
                        first_mismatch = fmt::format(" first mismatch {} D={} {}: {} vs {}, {} vs {}", name, d,
                                                     start_name, dc_uniform.fraction(), persistent_all.fraction(),
                                                     dc_lowest.fraction(), persistent_fixed.fraction());
                    }
                }
            }
        }
    }
    r.passed = instances >= 50 && mismatches == 0;
    r.detail = fmt::format("{} instances (n <= 5, D <= 4), both selection modes, {} mismatches.{}", instances,
                           mismatches, first_mismatch);
    return r;
}

CriterionResult ac9(const Context& ctx) {
    CriterionResult r{"AC-9", "gadget: conflicted-vertex drift +1/4, delta table, Phi = 3", false, "", 0};
    const Fig2Gadget gadget = gen_fig2_like();
    const ConflictDeltas deltas = exact_expected_conflict_deltas(gadget.graph, gadget.coloring, gadget.focus);
    const bool table = verify_fig2_deltas(gadget.graph, gadget.coloring, gadget.focus);
    const std::size_t phi = ctx.phi(gadget.graph, gadget.coloring);
    r.passed = deltas.conflicted_vertices == ExactValue(1, 4) && table && phi == 3;
    r.detail = fmt::format("conflicted-vertex drift {}, edge drift {}, Phi drift {}, delta table {}, Phi = {}",
                           deltas.conflicted_vertices.fraction(), deltas.conflicted_edges.fraction(),
                           deltas.phi.fraction(), table ? "ok" : "mismatch", phi);
    return r;
}

CriterionResult ac10(const Context&) {
    CriterionResult r{"AC-10", "Monte Carlo agrees with the exact Markov oracle on 20 instances", false, "", 0};
    Rng rng(kCoherenceSeed);
    std::size_t passed = 0;
    std::size_t built = 0;
    double worst = 0.0;
    std::string failures;
    while (built < 20) {
        const std::size_t n = 2 + rng.uniform(7);
        const double p = 0.2 + 0.8 * rng.uniform01();
        const std::size_t cap = 1 + rng.uniform(3);
        Graph g = gen_bounded_degree(n, p, cap, rng);
        if (g.edge_count() == 0) {
            continue;
        }
        const auto d = static_cast<Color>(g.max_degree() + 1 + rng.uniform(2));
        double space = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            space *= d;
        }
        if (space > 1e5) {
            continue;
        }
        const bool random_start = built % 2 == 0;
        Coloring fixed = random_coloring(n, d, rng);
        while (is_proper(g, fixed)) {
            fixed = random_coloring(n, d, rng);
        }
        ++built;

        const StartPolicy start = random_start ? StartPolicy{RandomStart{}} : StartPolicy{fixed};
        const ExactValue exact = exact_expected_recolorings_dc(g, d, start, UniformRandomOrder{});

        // Run the engine directly so the instance need not round-trip through files.
        std::vector<std::uint64_t> draws(100'000);
        std::vector<char> capped(draws.size());
        const std::uint64_t master = trial_seed(kCoherenceSeed, built);
        for (std::size_t i = 0; i < draws.size(); ++i) {
            Rng trial(trial_seed(master, i));
            const RunResult run = run_decentralized(g, d, start, UniformRandomOrder{}, trial);
            draws[i] = run.step3_draws;
            capped[i] = run.terminated ? 0 : 1;
        }
        const SummaryStats s = summarize(draws, capped);
        const double z = s.se > 0 ? (s.mean - exact.to_double()) / s.se : 0.0;
        worst = std::max(worst, std::fabs(z));
        if (s.cap_hits == 0 && within_se(s.mean, exact.to_double(), s.se, kSigmas)) {
            ++passed;
        } else {
            failures += fmt::format(" [n={} m={} D={} {}: MC {} vs {}]", n, g.edge_count(), d,
                                    random_start ? "random" : "fixed", mean_se(s), exact.to_string());
        }
    }
    r.passed = passed == built;
    r.detail = fmt::format("{}/{} instances within 4 SE, max |z| = {:.2f}{}", passed, built, worst, failures);
    return r;
}

using Runner = std::function<std::vector<CriterionResult>(const Context&)>;

template <class F>
Runner single(F f) {
    return [f](const Context& ctx) { return std::vector<CriterionResult>{f(ctx)}; };
}

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> suites{
        {"clique", [](const Context& ctx) { return std::vector<CriterionResult>{ac1(ctx), ac2(ctx)}; }},
        {"per-vertex", single(ac3)},
        {"bipartite", single(ac4)},
        {"drift",
         [](const Context& ctx) {
             auto pair = ac5_ac7(ctx);
             return std::vector<CriterionResult>{pair.phi, pair.edges};
         }},
        {"adversarial", single(ac6)},
        {"mimic", single(ac8)},
        {"fig2", single(ac9)},
        {"coherence", single(ac10)},
    };
    return suites;
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

const std::vector<std::string>& acceptance_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, runner] : registry()) {
            out.push_back(name);
        }
        out.emplace_back("all");
        return out;
    }();
    return names;
}

std::vector<CriterionResult> run_acceptance(std::string_view suite, const AcceptOptions& options) {
    const Context ctx{options};
    std::vector<CriterionResult> results;
    bool matched = false;
    for (const auto& [name, runner] : registry()) {
        if (suite != "all" && suite != name) {
            continue;
        }
        matched = true;
        const auto start = std::chrono::steady_clock::now();
        auto batch = runner(ctx);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : batch) {
            r.seconds = seconds / static_cast<double>(batch.size());
            if (options.progress != nullptr) {
                *options.progress << format_criterion(r) << std::endl;
            }
            results.push_back(std::move(r));
        }
    }
    if (!matched) {
        throw std::invalid_argument("unknown acceptance suite '" + std::string(suite) + "'");
    }
    std::sort(results.begin(), results.end(), [](const CriterionResult& a, const CriterionResult& b) {
        return std::stoi(a.id.substr(3)) < std::stoi(b.id.substr(3));
    });
    return results;
}

std::string format_criterion(const CriterionResult& r) {
    return fmt::format("{:<6} {}  {}: {} ({:.1f} s)", r.id, r.passed ? "PASS" : "FAIL", r.title, r.detail,
                       r.seconds);
}

std::string format_acceptance_report(std::string_view suite, const std::vector<CriterionResult>& results) {
    std::string body = fmt::format("acceptance suite: {}\n", suite);
    for (const auto& r : results) {
        body += format_criterion(r) + "\n";
    }
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
    body += fmt::format("result: {}/{} criteria passed\n", passed, results.size());
    return body + fmt::format("signed-off: {} digest {:016x}\n", all_passed(results) ? "PASS" : "FAIL", fnv1a(body));
}

bool all_passed(const std::vector<CriterionResult>& results) noexcept {
    return !results.empty() &&
           std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace dcolor
