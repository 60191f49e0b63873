#include "dcolor/adversary.hpp"

#include <algorithm>

#include "dcolor/generators.hpp"

namespace dcolor {

namespace {

void require_nonempty(const AdversaryView& view) {
    if (view.conflicted.empty()) {
        throw SchedulerError("adversary asked to pick from an empty conflicted set");
    }
}

template <class Score>
Vertex argbest(std::span<const Vertex> candidates, Score score) {
    Vertex best = candidates.front();
    auto best_score = score(best);
    for (Vertex v : candidates.subspan(1)) {
        const auto s = score(v);
        if (s < best_score || (s == best_score && v < best)) {
            best = v;
            best_score = s;
        }
    }
    return best;
}

}  // namespace

Vertex mimic_persistent_pick(const AdversaryView& view, SelectionMode mode, Rng& rng) {
    require_nonempty(view);
    if (view.history.last_pick &&
        is_conflicted(view.graph, view.coloring, *view.history.last_pick)) {
        return *view.history.last_pick;
    }
    if (mode == SelectionMode::LowestId) {
        return *std::min_element(view.conflicted.begin(), view.conflicted.end());
    }
    return view.conflicted[rng.uniform(view.conflicted.size())];
}

Vertex min_phi_drift_pick(const AdversaryView& view) {
    require_nonempty(view);
    const PhiProbe probe(view.graph, view.coloring);
    return argbest(view.conflicted, [&](Vertex v) { return probe.drift_numerator(v); });
}

Vertex max_conflicted_pick(const AdversaryView& view) {
    require_nonempty(view);
    return argbest(view.conflicted, [&](Vertex v) {
        const Color own = view.coloring[v];
        auto nb = view.graph.neighbors(v);
        return -static_cast<long>(
            std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return view.coloring[u] == own; }));
    });
}

Vertex scripted_pick(const AdversaryView& view, std::span<const Vertex> script) {
    require_nonempty(view);
    if (view.history.selections >= script.size()) {
        throw SchedulerError("adversary script exhausted after " + std::to_string(script.size()) +
                             " selections");
    }
    return script[view.history.selections];
}

Vertex adversary_pick(const AdversaryStrategy& strategy, const AdversaryView& view, Rng& rng) {
    const Vertex v = std::visit(
        [&](const auto& s) -> Vertex {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, MimicPersistent>) {
                return mimic_persistent_pick(view, s.mode, rng);
            } else if constexpr (std::is_same_v<S, MinPhiDrift>) {
                return min_phi_drift_pick(view);
            } else if constexpr (std::is_same_v<S, MaxConflicted>) {
                return max_conflicted_pick(view);
            } else {
                return scripted_pick(view, s.script);
            }
        },
        strategy);
    if (v >= view.graph.size() || !is_conflicted(view.graph, view.coloring, v)) {
        throw SchedulerError(describe(strategy) + " picked vertex " + std::to_string(v) +
                             ", which is not conflicted");
    }
    return v;
}

std::string describe(const AdversaryStrategy& strategy) {
    return std::visit(
        [](const auto& s) -> std::string {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, MimicPersistent>) {
                return s.mode == SelectionMode::Uniform ? "mimic" : "mimic-lowest";
            } else if constexpr (std::is_same_v<S, MinPhiDrift>) {
                return "min-drift";
            } else if constexpr (std::is_same_v<S, MaxConflicted>) {
                return "max-conflicted";
            } else {
                return "script";
            }
        },
        strategy);
}

BadBipartiteStart bad_bipartite_start(std::size_t delta) {
    if (delta < 1) {
        throw GraphError(GraphError::Kind::InvalidParameter, "bad bipartite start needs delta >= 1");
    }
    std::vector<Color> colors(2 * delta, 1);
    for (std::size_t j = 0; j < delta; ++j) {
        colors[delta + j] = static_cast<Color>(j + 1);
    }
    return BadBipartiteStart{
        gen_complete_bipartite(delta, delta),
        Coloring(std::move(colors), static_cast<Color>(delta + 1)),
    };
}

}  // namespace dcolor
