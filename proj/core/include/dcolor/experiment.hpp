#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/stats.hpp"

namespace dcolor {

// Invalid experiment configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { Decentralized, Persistent };
enum class Counter { TotalDraws, Step3Draws, Selections };

std::string_view to_string(Algorithm a) noexcept;
std::string_view to_string(Counter c) noexcept;
Algorithm parse_algorithm(std::string_view text);
Counter parse_counter(std::string_view text);

// family: clique(n) | bipartite(a, b) | cycle(n) | er(n, p, seed) | fig2 |
//         bad-bipartite(delta) | file(path)
struct GraphSpec {
    std::string family = "clique";
    std::size_t n = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t delta = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string path;
};

struct ExperimentConfig {
    GraphSpec graph;
    Algorithm algorithm = Algorithm::Decentralized;
    std::optional<Color> palette;  // default max_degree + 1
    // random | mono | family (the generator's own start) | file:<path>
    std::string start = "random";
    // uniform | perm:<file> | mimic | mimic-lowest | min-drift | max-conflicted | script:<file>
    std::string order = "uniform";
    std::uint64_t trials = 100'000;
    std::uint64_t master_seed = 1;
    std::uint64_t step_cap = 0;  // 0 = 10 n D^2
    std::vector<Counter> counters{Counter::TotalDraws, Counter::Step3Draws};
    bool per_vertex = false;
    bool per_trial = false;
    bool exclude_capped = false;
    std::size_t threads = 0;  // 0 = hardware concurrency
    std::string output;       // path prefix; empty = no files
};

// JSON keys mirror the field names above; "graph" is an object with the
// GraphSpec fields. Unknown keys are rejected.
ExperimentConfig parse_config_json(std::string_view text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

// FNV-1a 64 of the canonical JSON form, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

struct Instance {
    Graph graph;
    Color palette;
    StartPolicy start;
    SchedulerPolicy order;
    std::string label;
};

Instance materialize(const ExperimentConfig& cfg);
SchedulerPolicy parse_order(std::string_view text, std::size_t n);
std::size_t resolve_threads(std::size_t requested) noexcept;

struct PerVertexStat {
    Vertex vertex;
    std::size_t degree;
    double mean;
    double se;
};

struct TrialRecord {
    std::uint64_t total_draws;
    std::uint64_t step3_draws;
    std::uint64_t selections;
    bool terminated;
};

struct TrialReport {
    ExperimentConfig config;
    std::string hash;
    std::string graph_label;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    Color palette = 0;
    SummaryStats total_draws;
    SummaryStats step3_draws;
    SummaryStats selections;
    std::vector<PerVertexStat> per_vertex;  // filled when config.per_vertex
    std::vector<TrialRecord> trials;        // always filled, trial-index order

    const SummaryStats& stats(Counter c) const noexcept;
};

// Trials run on a worker pool; trial i uses Rng(trial_seed(master_seed, i)).
// All aggregation is exact-integer or trial-index ordered, so the report
// does not depend on thread count or scheduling.
TrialReport run_trials(const ExperimentConfig& cfg);

void write_summary_csv(std::ostream& out, const TrialReport& report);
void write_per_vertex_csv(std::ostream& out, const TrialReport& report);
void write_per_trial_csv(std::ostream& out, const TrialReport& report);
std::string summary_json(const TrialReport& report);

// Writes <output>.summary.csv, <output>.json and, when requested,
// <output>.per_vertex.csv / <output>.trials.csv. Returns the paths written.
std::vector<std::string> write_outputs(const TrialReport& report);

struct SweepRow {
    std::string value;
    TrialReport report;
    double normalized_n_delta;      // mean / (n * max_degree)
    double normalized_n_log_delta;  // mean / (n * ln max_degree)
};

// Axes: n, a, b, delta, p, graph_seed, D, seed (master), trials. The
// first configured counter is the one normalised.
std::vector<SweepRow> sweep(const ExperimentConfig& base, std::string_view axis,
                            const std::vector<std::string>& values);
void write_sweep_csv(std::ostream& out, std::string_view axis, const std::vector<SweepRow>& rows);

// Directory from DCOLOR_OUTPUT_DIR, or "." when unset.
std::string default_output_dir();

}  // namespace dcolor
