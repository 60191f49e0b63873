#include "dcolor/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dcolor {

std::uint64_t default_step_cap(std::size_t n, Color palette_size) noexcept {
    const auto d = static_cast<std::uint64_t>(palette_size);
    const auto nn = static_cast<std::uint64_t>(n);
    if (d != 0 && nn > std::numeric_limits<std::uint64_t>::max() / 10 / d / d) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return 10 * nn * d * d;
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[rng.uniform(i)]);
    }
    return order;
}

bool is_permutation_of_vertices(std::span<const Vertex> order, std::size_t n) {
    if (order.size() != n) {
        return false;
    }
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
        if (v >= n || seen[v]) {
            return false;
        }
        seen[v] = 1;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Scheduler

Scheduler::Scheduler(const SchedulerPolicy& policy, const Graph& g) : policy_(&policy), graph_(&g) {
    if (const auto* perm = std::get_if<FixedPermutation>(&policy)) {
        if (!is_permutation_of_vertices(perm->order, g.size())) {
            throw std::invalid_argument("fixed order is not a permutation of 0..n-1");
        }
        rank_.resize(g.size());
        for (std::size_t i = 0; i < perm->order.size(); ++i) {
            rank_[perm->order[i]] = i;
        }
    } else if (const auto* adv = std::get_if<AdversaryStrategy>(&policy)) {
        if (const auto* scripted = std::get_if<Scripted>(adv)) {
            for (Vertex v : scripted->script) {
                if (v >= g.size()) {
                    throw std::invalid_argument("script references vertex " + std::to_string(v) +
                                                " outside the graph");
                }
            }
        }
    }
}

Vertex Scheduler::pick(const Coloring& c, std::span<const Vertex> conflicted, const History& history,
                       Rng& rng) const {
    if (conflicted.empty()) {
        throw SchedulerError("scheduler asked to pick from an empty conflicted set");
    }
    return std::visit(
        [&](const auto& p) -> Vertex {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, UniformRandomOrder>) {
                return conflicted[rng.uniform(conflicted.size())];
            } else if constexpr (std::is_same_v<P, FixedPermutation>) {
                return *std::min_element(conflicted.begin(), conflicted.end(),
                                         [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
            } else {
                return adversary_pick(p, AdversaryView{*graph_, c, conflicted, history}, rng);
            }
        },
        *policy_);
}

Vertex scheduler_pick(const SchedulerPolicy& policy, const Graph& g, const Coloring& c,
                      std::span<const Vertex> conflicted, const History& history, Rng& rng) {
    return Scheduler(policy, g).pick(c, conflicted, history, rng);
}

Coloring initial_coloring(const Graph& g, Color palette_size, const StartPolicy& start, Rng& rng) {
    if (const auto* fixed = std::get_if<Coloring>(&start)) {
        if (fixed->size() != g.size()) {
            throw std::invalid_argument("start colouring has " + std::to_string(fixed->size()) +
                                        " entries for a graph of " + std::to_string(g.size()) +
                                        " vertices");
        }
        if (fixed->palette_size() != palette_size) {
            throw std::invalid_argument("start colouring palette D=" +
                                        std::to_string(fixed->palette_size()) +
                                        " differs from run palette D=" + std::to_string(palette_size));
        }
        return *fixed;
    }
    return random_coloring(g.size(), palette_size, rng);
}

// ---------------------------------------------------------------------------
// Runs

namespace {

struct RunState {
    RunResult result;
    std::uint64_t cap;

    RunState(const Graph& g, Color palette_size, const RunOptions& options)
        : cap(options.step_cap != 0 ? options.step_cap : default_step_cap(g.size(), palette_size)) {
        result.per_vertex_draws.assign(g.size(), 0);
        if (options.record_trace) {
            result.trace.emplace();
        }
    }

    bool capped() const noexcept { return result.step3_draws >= cap; }

    void begin_selection(Vertex v) {
        ++result.selections;
        if (result.trace) {
            result.trace->push_back(SelectionRecord{v, {}});
        }
    }

    void draw(ConflictTracker& tracker, Vertex v, Color palette_size, Rng& rng) {
        const auto x = static_cast<Color>(rng.uniform(palette_size)) + 1;
        tracker.recolor(v, x);
        ++result.step3_draws;
        ++result.per_vertex_draws[v];
        if (result.trace) {
            result.trace->back().draws.push_back(x);
        }
    }

    RunResult finish(const Graph& g, const ConflictTracker& tracker) && {
        result.terminated = tracker.proper();
        result.total_draws = g.size() + result.step3_draws;
        result.final_coloring = tracker.coloring();
        return std::move(result);
    }
};

}  // namespace

RunResult run_decentralized(const Graph& g, Color palette_size, const StartPolicy& start,
                            const SchedulerPolicy& sched, Rng& rng, const RunOptions& options) {
    ConflictTracker tracker(g, initial_coloring(g, palette_size, start, rng));
    const Scheduler scheduler(sched, g);
    RunState state(g, palette_size, options);
    History history;

    while (!tracker.proper() && !state.capped()) {
        const Vertex v = scheduler.pick(tracker.coloring(), tracker.conflicted(), history, rng);
        if (v >= g.size() || !tracker.is_conflicted(v)) {
            throw SchedulerError("scheduler selected non-conflicted vertex " + std::to_string(v));
        }
        state.begin_selection(v);
        state.draw(tracker, v, palette_size, rng);
        history.last_pick = v;
        ++history.selections;
    }
    return std::move(state).finish(g, tracker);
}

RunResult run_persistent(const Graph& g, Color palette_size, const StartPolicy& start,
                         const SchedulerPolicy& sched, Rng& rng, const RunOptions& options) {
    ConflictTracker tracker(g, initial_coloring(g, palette_size, start, rng));
    RunState state(g, palette_size, options);

    auto fix = [&](Vertex v) {
        state.begin_selection(v);
        while (tracker.is_conflicted(v) && !state.capped()) {
            state.draw(tracker, v, palette_size, rng);
        }
    };

    if (const auto* adversary = std::get_if<AdversaryStrategy>(&sched)) {
        const Scheduler scheduler(sched, g);
        std::vector<char> selected(g.size(), 0);
        History history;
        while (!tracker.proper() && !state.capped()) {
            const Vertex v = scheduler.pick(tracker.coloring(), tracker.conflicted(), history, rng);
            if (selected[v]) {
                throw SchedulerError(describe(*adversary) + " selected vertex " + std::to_string(v) +
                                     " twice in a persistent run");
            }
            selected[v] = 1;
            fix(v);
            history.last_pick = v;
            ++history.selections;
        }
        return std::move(state).finish(g, tracker);
    }

    std::vector<Vertex> order;
    if (const auto* perm = std::get_if<FixedPermutation>(&sched)) {
        if (!is_permutation_of_vertices(perm->order, g.size())) {
            throw std::invalid_argument("fixed order is not a permutation of 0..n-1");
        }
        order = perm->order;
    } else {
        order = random_permutation(g.size(), rng);
    }
    // One pass suffices: a vertex only ever stops on a colour no neighbour
    // uses, so the conflicted set never gains members between selections.
    for (Vertex v : order) {
        if (state.capped()) {
            break;
        }
        if (tracker.is_conflicted(v)) {
            fix(v);
        }
    }
    if (!state.capped() && !tracker.proper()) {
        throw std::logic_error("persistent pass left conflicted vertices behind");
    }
    return std::move(state).finish(g, tracker);
}

}  // namespace dcolor
