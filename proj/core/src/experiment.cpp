#include "dcolor/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "dcolor/adversary.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/oracle.hpp"
#include "json.hpp"

namespace dcolor {

using ojson = nlohmann::ordered_json;

std::string_view to_string(Algorithm a) noexcept {
    return a == Algorithm::Decentralized ? "dc" : "persistent";
}

std::string_view to_string(Counter c) noexcept {
    switch (c) {
        case Counter::TotalDraws:
            return "total_draws";
        case Counter::Step3Draws:
            return "step3_draws";
        case Counter::Selections:
            return "selections";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "dc" || text == "decentralized") {
        return Algorithm::Decentralized;
    }
    if (text == "persistent") {
        return Algorithm::Persistent;
    }
    throw ConfigError("unknown algorithm '" + std::string(text) + "' (expected dc|persistent)");
}

Counter parse_counter(std::string_view text) {
    if (text == "total_draws") {
        return Counter::TotalDraws;
    }
    if (text == "step3_draws") {
        return Counter::Step3Draws;
    }
    if (text == "selections") {
        return Counter::Selections;
    }
    throw ConfigError("unknown counter '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Config <-> JSON

namespace {

ojson graph_to_json(const GraphSpec& g) {
    ojson j;
    j["family"] = g.family;
    if (g.family == "clique" || g.family == "cycle" || g.family == "er") {
        j["n"] = g.n;
    }
    if (g.family == "bipartite") {
        j["a"] = g.a;
        j["b"] = g.b;
    }
    if (g.family == "bad-bipartite") {
        j["delta"] = g.delta;
    }
    if (g.family == "er") {
        j["p"] = g.p;
        j["seed"] = g.seed;
    }
    if (g.family == "file") {
        j["path"] = g.path;
    }
    return j;
}

template <class T>
T get_field(const nlohmann::json& j, const char* key, const T& fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

void reject_unknown(const nlohmann::json& j, std::initializer_list<std::string_view> known,
                    const char* where) {
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
            throw ConfigError(std::string("unknown key '") + item.key() + "' in " + where);
        }
    }
}

}  // namespace

ExperimentConfig parse_config_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    reject_unknown(j,
                   {"graph", "algorithm", "D", "start", "order", "trials", "master_seed", "step_cap",
                    "counters", "per_vertex", "per_trial", "exclude_capped", "threads", "output"},
                   "config");
    ExperimentConfig cfg;
    if (j.contains("graph")) {
        const auto& g = j.at("graph");
        if (!g.is_object()) {
            throw ConfigError("'graph' must be an object");
        }
        reject_unknown(g, {"family", "n", "a", "b", "delta", "p", "seed", "path"}, "graph");
        cfg.graph.family = get_field<std::string>(g, "family", cfg.graph.family);
        cfg.graph.n = get_field<std::size_t>(g, "n", 0);
        cfg.graph.a = get_field<std::size_t>(g, "a", 0);
        cfg.graph.b = get_field<std::size_t>(g, "b", 0);
        cfg.graph.delta = get_field<std::size_t>(g, "delta", 0);
        cfg.graph.p = get_field<double>(g, "p", 0.0);
        cfg.graph.seed = get_field<std::uint64_t>(g, "seed", 0);
        cfg.graph.path = get_field<std::string>(g, "path", "");
    }
    cfg.algorithm = parse_algorithm(get_field<std::string>(j, "algorithm", "dc"));
    if (j.contains("D") && !j.at("D").is_null()) {
        cfg.palette = get_field<Color>(j, "D", 0);
    }
    cfg.start = get_field<std::string>(j, "start", cfg.start);
    cfg.order = get_field<std::string>(j, "order", cfg.order);
    cfg.trials = get_field<std::uint64_t>(j, "trials", cfg.trials);
    cfg.master_seed = get_field<std::uint64_t>(j, "master_seed", cfg.master_seed);
    cfg.step_cap = get_field<std::uint64_t>(j, "step_cap", 0);
    if (j.contains("counters")) {
        cfg.counters.clear();
        for (const auto& c : get_field<std::vector<std::string>>(j, "counters", {})) {
            if (c == "per_vertex") {
                cfg.per_vertex = true;
            } else {
                cfg.counters.push_back(parse_counter(c));
            }
        }
    }
    cfg.per_vertex = get_field<bool>(j, "per_vertex", cfg.per_vertex);
    cfg.per_trial = get_field<bool>(j, "per_trial", false);
    cfg.exclude_capped = get_field<bool>(j, "exclude_capped", false);
    cfg.threads = get_field<std::size_t>(j, "threads", 0);
    cfg.output = get_field<std::string>(j, "output", "");
    if (cfg.trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
    ojson j;
    j["graph"] = graph_to_json(cfg.graph);
    j["algorithm"] = std::string(to_string(cfg.algorithm));
    j["D"] = cfg.palette ? ojson(*cfg.palette) : ojson(nullptr);
    j["start"] = cfg.start;
    j["order"] = cfg.order;
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["step_cap"] = cfg.step_cap;
    ojson counters = ojson::array();
    for (Counter c : cfg.counters) {
        counters.push_back(std::string(to_string(c)));
    }
    j["counters"] = counters;
    j["per_vertex"] = cfg.per_vertex;
    j["per_trial"] = cfg.per_trial;
    j["exclude_capped"] = cfg.exclude_capped;
    return j.dump();
}

std::string config_hash(const ExperimentConfig& cfg) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : config_to_json(cfg)) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return fmt::format("{:016x}", h);
}

// ---------------------------------------------------------------------------
// Materialisation

namespace {

std::vector<Vertex> read_vertex_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open vertex list '" + path + "'");
    }
    std::vector<Vertex> out;
    long long v = 0;
    while (in >> v) {
        if (v < 0) {
            throw ConfigError("negative vertex id in '" + path + "'");
        }
        out.push_back(static_cast<Vertex>(v));
    }
    if (!in.eof()) {
        throw ConfigError("non-numeric token in '" + path + "'");
    }
    return out;
}

struct BuiltGraph {
    Graph graph;
    std::optional<Coloring> own_start;
    std::string label;
};

BuiltGraph build_graph(const GraphSpec& spec) {
    const std::string& f = spec.family;
    try {
        if (f == "clique") {
            return {gen_clique(spec.n), std::nullopt, fmt::format("clique(n={})", spec.n)};
        }
        if (f == "bipartite") {
            return {gen_complete_bipartite(spec.a, spec.b), std::nullopt,
                    fmt::format("bipartite(a={},b={})", spec.a, spec.b)};
        }
        if (f == "cycle") {
            return {gen_cycle(spec.n), std::nullopt, fmt::format("cycle(n={})", spec.n)};
        }
        if (f == "er") {
            return {gen_erdos_renyi(spec.n, spec.p, spec.seed), std::nullopt,
                    fmt::format("er(n={},p={},seed={})", spec.n, spec.p, spec.seed)};
        }
        if (f == "fig2") {
            auto gadget = gen_fig2_like();
            return {std::move(gadget.graph), std::move(gadget.coloring), "fig2"};
        }
        if (f == "bad-bipartite") {
            auto bad = bad_bipartite_start(spec.delta);
            return {std::move(bad.graph), std::move(bad.coloring),
                    fmt::format("bad-bipartite(delta={})", spec.delta)};
        }
        if (f == "file") {
            return {load_graph(spec.path), std::nullopt, "file(" + spec.path + ")"};
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("graph '" + f + "': " + e.what());
    }
    throw ConfigError("unknown graph family '" + f + "'");
}

}  // namespace

SchedulerPolicy parse_order(std::string_view text, std::size_t n) {
    if (text == "uniform") {
        return UniformRandomOrder{};
    }
    if (text == "mimic") {
        return AdversaryStrategy{MimicPersistent{SelectionMode::Uniform}};
    }
    if (text == "mimic-lowest") {
        return AdversaryStrategy{MimicPersistent{SelectionMode::LowestId}};
    }
    if (text == "min-drift") {
        return AdversaryStrategy{MinPhiDrift{}};
    }
    if (text == "max-conflicted") {
        return AdversaryStrategy{MaxConflicted{}};
    }
    if (text.starts_with("perm:")) {
        auto order = read_vertex_list(std::string(text.substr(5)));
        if (!is_permutation_of_vertices(order, n)) {
            throw ConfigError("order file is not a permutation of 0.." + std::to_string(n - 1));
        }
        return FixedPermutation{std::move(order)};
    }
    if (text.starts_with("script:")) {
        auto script = read_vertex_list(std::string(text.substr(7)));
        for (Vertex v : script) {
            if (v >= n) {
                throw ConfigError("script vertex " + std::to_string(v) + " outside the graph");
            }
        }
        return AdversaryStrategy{Scripted{std::move(script)}};
    }
    throw ConfigError("unknown order '" + std::string(text) +
                      "' (uniform|perm:<file>|mimic|mimic-lowest|min-drift|max-conflicted|script:<file>)");
}

Instance materialize(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    BuiltGraph built = build_graph(cfg.graph);
    const Graph& g = built.graph;

    std::optional<Coloring> fixed;
    if (cfg.start == "family") {
        if (!built.own_start) {
            throw ConfigError("start 'family' needs a generator with its own start (fig2, bad-bipartite)");
        }
        fixed = built.own_start;
    } else if (cfg.start.starts_with("file:")) {
        try {
            fixed = load_coloring(cfg.start.substr(5));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("start file: ") + e.what());
        }
    } else if (cfg.start != "random" && cfg.start != "mono") {
        throw ConfigError("unknown start '" + cfg.start + "' (random|mono|family|file:<path>)");
    }

    Color palette = 0;
    if (cfg.palette) {
        palette = *cfg.palette;
    } else if (fixed) {
        palette = fixed->palette_size();
    } else {
        palette = static_cast<Color>(g.max_degree() + 1);
    }
    if (palette < 1) {
        throw ConfigError("palette size D must be at least 1");
    }

    StartPolicy start = RandomStart{};
    if (cfg.start == "mono") {
        start = Coloring::uniform(g.size(), palette);
    } else if (fixed) {
        if (fixed->size() != g.size() || fixed->palette_size() != palette) {
            throw ConfigError(fmt::format("start colouring (n={}, D={}) does not match instance (n={}, D={})",
                                          fixed->size(), fixed->palette_size(), g.size(), palette));
        }
        start = *fixed;
    }
    SchedulerPolicy order = parse_order(cfg.order, g.size());
    return Instance{std::move(built.graph), palette, std::move(start), std::move(order),
                    std::move(built.label)};
}

std::size_t resolve_threads(std::size_t requested) noexcept {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------
// Trials

const SummaryStats& TrialReport::stats(Counter c) const noexcept {
    switch (c) {
        case Counter::TotalDraws:
            return total_draws;
        case Counter::Step3Draws:
            return step3_draws;
        case Counter::Selections:
            return selections;
    }
    return total_draws;
}

TrialReport run_trials(const ExperimentConfig& cfg) {
    const Instance inst = materialize(cfg);
    const Graph& g = inst.graph;
    const std::size_t n = g.size();

    TrialReport report;
    report.config = cfg;
    report.hash = config_hash(cfg);
    report.graph_label = inst.label;
    report.n = n;
    report.edges = g.edge_count();
    report.max_degree = g.max_degree();
    report.palette = inst.palette;
    report.trials.resize(cfg.trials);

    std::vector<std::uint64_t> vertex_sum(n, 0);
    std::vector<std::uint64_t> vertex_sq(n, 0);
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next{0};
    RunOptions options;
    options.step_cap = cfg.step_cap;

    auto worker = [&] {
        std::vector<std::uint64_t> local_sum(cfg.per_vertex ? n : 0, 0);
        std::vector<std::uint64_t> local_sq(cfg.per_vertex ? n : 0, 0);
        for (std::uint64_t i = next++; i < cfg.trials; i = next++) {
            Rng rng(trial_seed(cfg.master_seed, i));
            const RunResult r = cfg.algorithm == Algorithm::Decentralized
                                    ? run_decentralized(g, inst.palette, inst.start, inst.order, rng, options)
                                    : run_persistent(g, inst.palette, inst.start, inst.order, rng, options);
            report.trials[i] = TrialRecord{r.total_draws, r.step3_draws, r.selections, r.terminated};
            if (cfg.per_vertex) {
                for (std::size_t v = 0; v < n; ++v) {
                    local_sum[v] += r.per_vertex_draws[v];
                    local_sq[v] += r.per_vertex_draws[v] * r.per_vertex_draws[v];
                }
            }
        }
        if (cfg.per_vertex) {
            std::lock_guard lock(merge_mutex);
            for (std::size_t v = 0; v < n; ++v) {
                vertex_sum[v] += local_sum[v];
                vertex_sq[v] += local_sq[v];
            }
        }
    };

    const std::size_t threads = std::min<std::uint64_t>(resolve_threads(cfg.threads), cfg.trials);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = cfg.trials;
                }
            });
        }
        pool.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::vector<std::uint64_t> total(cfg.trials);
    std::vector<std::uint64_t> step3(cfg.trials);
    std::vector<std::uint64_t> selections(cfg.trials);
    std::vector<char> capped(cfg.trials);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        total[i] = report.trials[i].total_draws;
        step3[i] = report.trials[i].step3_draws;
        selections[i] = report.trials[i].selections;
        capped[i] = report.trials[i].terminated ? 0 : 1;
    }
    report.total_draws = summarize(total, capped, cfg.exclude_capped);
    report.step3_draws = summarize(step3, capped, cfg.exclude_capped);
    report.selections = summarize(selections, capped, cfg.exclude_capped);

    if (cfg.per_vertex) {
        const auto t = static_cast<long double>(cfg.trials);
        report.per_vertex.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            const long double sum = static_cast<long double>(vertex_sum[v]);
            const long double mean = sum / t;
            long double se = 0.0L;
            if (cfg.trials > 1) {
                const long double var =
                    std::max(0.0L, (static_cast<long double>(vertex_sq[v]) - sum * mean) / (t - 1));
                se = std::sqrt(var / t);
            }
            report.per_vertex.push_back(PerVertexStat{static_cast<Vertex>(v),
                                                      g.degree(static_cast<Vertex>(v)),
                                                      static_cast<double>(mean), static_cast<double>(se)});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Output

namespace {

std::string num(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    return fmt::format("{:.17g}", x);
}

ojson stats_json(const SummaryStats& s) {
    ojson j;
    j["trials"] = s.trials;
    j["mean"] = s.mean;
    j["sd"] = s.sd;
    j["se"] = s.se;
    j["ci99_low"] = s.ci_low;
    j["ci99_high"] = s.ci_high;
    j["min"] = s.min;
    j["max"] = s.max;
    j["cap_hits"] = s.cap_hits;
    j["cap_hits_excluded"] = s.cap_hits_excluded;
    return j;
}

}  // namespace

void write_summary_csv(std::ostream& out, const TrialReport& r) {
    out << "config_hash,master_seed,algorithm,graph,n,max_degree,D,start,order,counter,trials,mean,sd,se,"
           "ci99_low,ci99_high,min,max,cap_hits\n";
    for (Counter c : r.config.counters) {
        const SummaryStats& s = r.stats(c);
        out << r.hash << ',' << r.config.master_seed << ',' << to_string(r.config.algorithm) << ",\""
            << r.graph_label << "\"," << r.n << ',' << r.max_degree << ',' << r.palette << ','
            << r.config.start << ',' << r.config.order << ',' << to_string(c) << ',' << s.trials << ','
            << num(s.mean) << ',' << num(s.sd) << ',' << num(s.se) << ',' << num(s.ci_low) << ','
            << num(s.ci_high) << ',' << num(s.min) << ',' << num(s.max) << ',' << s.cap_hits << '\n';
    }
}

void write_per_vertex_csv(std::ostream& out, const TrialReport& r) {
    out << "config_hash,master_seed,vertex,degree,mean_step3_draws,se,harmonic_degree\n";
    for (const auto& pv : r.per_vertex) {
        out << r.hash << ',' << r.config.master_seed << ',' << pv.vertex << ',' << pv.degree << ','
            << num(pv.mean) << ',' << num(pv.se) << ',' << num(harmonic(pv.degree).to_double()) << '\n';
    }
}

void write_per_trial_csv(std::ostream& out, const TrialReport& r) {
    out << "config_hash,master_seed,trial,total_draws,step3_draws,selections,terminated\n";
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& t = r.trials[i];
        out << r.hash << ',' << r.config.master_seed << ',' << i << ',' << t.total_draws << ','
            << t.step3_draws << ',' << t.selections << ',' << (t.terminated ? 1 : 0) << '\n';
    }
}

std::string summary_json(const TrialReport& r) {
    ojson j;
    j["config_hash"] = r.hash;
    j["master_seed"] = r.config.master_seed;
    j["config"] = ojson::parse(config_to_json(r.config));
    j["instance"] = {{"graph", r.graph_label},
                     {"n", r.n},
                     {"edges", r.edges},
                     {"max_degree", r.max_degree},
                     {"D", r.palette}};
    ojson summaries;
    for (Counter c : {Counter::TotalDraws, Counter::Step3Draws, Counter::Selections}) {
        summaries[std::string(to_string(c))] = stats_json(r.stats(c));
    }
    j["summaries"] = summaries;
    if (!r.per_vertex.empty()) {
        ojson pv = ojson::array();
        for (const auto& s : r.per_vertex) {
            pv.push_back({{"vertex", s.vertex}, {"degree", s.degree}, {"mean", s.mean}, {"se", s.se}});
        }
        j["per_vertex"] = pv;
    }
    return j.dump(2) + "\n";
}

std::string default_output_dir() {
    const char* dir = std::getenv("DCOLOR_OUTPUT_DIR");
    return dir != nullptr && *dir != '\0' ? std::string(dir) : std::string(".");
}

std::vector<std::string> write_outputs(const TrialReport& r) {
    std::vector<std::string> written;
    if (r.config.output.empty()) {
        return written;
    }
    auto emit = [&](const std::string& path, auto&& body) {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write '" + path + "'");
        }
        body(out);
        written.push_back(path);
    };
    const std::string& base = r.config.output;
    emit(base + ".summary.csv", [&](std::ostream& o) { write_summary_csv(o, r); });
    emit(base + ".json", [&](std::ostream& o) { o << summary_json(r); });
    if (r.config.per_vertex) {
        emit(base + ".per_vertex.csv", [&](std::ostream& o) { write_per_vertex_csv(o, r); });
    }
    if (r.config.per_trial) {
        emit(base + ".trials.csv", [&](std::ostream& o) { write_per_trial_csv(o, r); });
    }
    return written;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

template <class T>
T parse_number(std::string_view axis, const std::string& value) {
    std::istringstream in(value);
    T out{};
    if (!(in >> out) || !in.eof()) {
        throw ConfigError("sweep value '" + value + "' is not valid for axis '" + std::string(axis) + "'");
    }
    return out;
}

}  // namespace

std::vector<SweepRow> sweep(const ExperimentConfig& base, std::string_view axis,
                            const std::vector<std::string>& values) {
    if (values.empty()) {
        throw ConfigError("sweep needs at least one value");
    }
    if (base.counters.empty()) {
        throw ConfigError("sweep needs at least one counter");
    }
    std::vector<SweepRow> rows;
    for (const auto& value : values) {
        ExperimentConfig cfg = base;
        if (axis == "n") {
            cfg.graph.n = parse_number<std::size_t>(axis, value);
        } else if (axis == "a") {
            cfg.graph.a = parse_number<std::size_t>(axis, value);
        } else if (axis == "b") {
            cfg.graph.b = parse_number<std::size_t>(axis, value);
        } else if (axis == "delta") {
            cfg.graph.delta = parse_number<std::size_t>(axis, value);
        } else if (axis == "p") {
            cfg.graph.p = parse_number<double>(axis, value);
        } else if (axis == "graph_seed") {
            cfg.graph.seed = parse_number<std::uint64_t>(axis, value);
        } else if (axis == "D") {
            cfg.palette = parse_number<Color>(axis, value);
        } else if (axis == "seed") {
            cfg.master_seed = parse_number<std::uint64_t>(axis, value);
        } else if (axis == "trials") {
            cfg.trials = parse_number<std::uint64_t>(axis, value);
        } else {
            throw ConfigError("unknown sweep axis '" + std::string(axis) + "'");
        }
        TrialReport report = run_trials(cfg);
        const double mean = report.stats(cfg.counters.front()).mean;
        const auto n = static_cast<double>(report.n);
        const auto delta = static_cast<double>(report.max_degree);
        const double by_delta = delta > 0 ? mean / (n * delta) : std::nan("");
        const double by_log = delta > 1 ? mean / (n * std::log(delta)) : std::nan("");
        rows.push_back(SweepRow{value, std::move(report), by_delta, by_log});
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, std::string_view axis, const std::vector<SweepRow>& rows) {
    out << "axis,value,config_hash,master_seed,graph,n,max_degree,D,counter,trials,mean,se,"
           "mean_over_n_delta,mean_over_n_ln_delta,cap_hits\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        const Counter c = r.config.counters.front();
        const SummaryStats& s = r.stats(c);
        out << axis << ',' << row.value << ',' << r.hash << ',' << r.config.master_seed << ",\""
            << r.graph_label << "\"," << r.n << ',' << r.max_degree << ',' << r.palette << ','
            << to_string(c) << ',' << s.trials << ',' << num(s.mean) << ',' << num(s.se) << ','
            << num(row.normalized_n_delta) << ',' << num(row.normalized_n_log_delta) << ','
            << s.cap_hits << '\n';
    }
}

}  // namespace dcolor
