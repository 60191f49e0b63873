#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dcolor/adversary.hpp"
#include "dcolor/coloring.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

// Step 1: every vertex draws uniformly, or the colouring is given.
struct RandomStart {};
using StartPolicy = std::variant<RandomStart, Coloring>;

// Step 2 policies.
struct UniformRandomOrder {};
struct FixedPermutation {
    std::vector<Vertex> order;
};
using SchedulerPolicy = std::variant<UniformRandomOrder, FixedPermutation, AdversaryStrategy>;

struct SelectionRecord {
    Vertex vertex;
    std::vector<Color> draws;
};

// Counting convention: total_draws includes the n Step-1 draws (even for a
// fixed start, which stands in for them); step3_draws counts recolours only.
struct RunResult {
    std::uint64_t total_draws = 0;
    std::uint64_t step3_draws = 0;
    std::vector<std::uint64_t> per_vertex_draws;
    std::uint64_t selections = 0;
    bool terminated = false;
    Coloring final_coloring{{}, 1};
    std::optional<std::vector<SelectionRecord>> trace;
};

struct RunOptions {
    // 0 selects default_step_cap(n, D).
    std::uint64_t step_cap = 0;
    bool record_trace = false;
};

std::uint64_t default_step_cap(std::size_t n, Color palette_size) noexcept;

// Step-2 chooser. FixedPermutation precomputes positions; adversaries get
// the full current state and history.
class Scheduler {
public:
    Scheduler(const SchedulerPolicy& policy, const Graph& g);

    Vertex pick(const Coloring& c, std::span<const Vertex> conflicted, const History& history,
                Rng& rng) const;

    const SchedulerPolicy& policy() const noexcept { return *policy_; }

private:
    const SchedulerPolicy* policy_;
    const Graph* graph_;
    std::vector<std::size_t> rank_;
};

// One-shot form of Scheduler::pick.
Vertex scheduler_pick(const SchedulerPolicy& policy, const Graph& g, const Coloring& c,
                      std::span<const Vertex> conflicted, const History& history, Rng& rng);

// Validates a start against the graph and palette and materialises it.
// A random start consumes n draws from rng, in vertex order.
Coloring initial_coloring(const Graph& g, Color palette_size, const StartPolicy& start, Rng& rng);

// Decentralized Coloring: one uniform draw from 1..D per selection, until no
// vertex is conflicted or step_cap draws have been made.
RunResult run_decentralized(const Graph& g, Color palette_size, const StartPolicy& start,
                            const SchedulerPolicy& sched, Rng& rng, const RunOptions& options = {});

// Persistent Decentralized Coloring: each selected vertex redraws until it
// is unconflicted. Uniform order is simulated by a uniform permutation drawn
// right after the start colouring; adversaries are re-consulted after every
// fixed vertex.
RunResult run_persistent(const Graph& g, Color palette_size, const StartPolicy& start,
                         const SchedulerPolicy& sched, Rng& rng, const RunOptions& options = {});

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);
bool is_permutation_of_vertices(std::span<const Vertex> order, std::size_t n);

}  // namespace dcolor
