#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dcolor/coloring.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

// A scheduler or adversary returned a vertex that is not currently
// conflicted, or could not produce one at all.
class SchedulerError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class SelectionMode { Uniform, LowestId };

struct MimicPersistent {
    SelectionMode mode = SelectionMode::Uniform;
};
struct MinPhiDrift {};
struct MaxConflicted {};
struct Scripted {
    std::vector<Vertex> script;
};

using AdversaryStrategy = std::variant<MimicPersistent, MinPhiDrift, MaxConflicted, Scripted>;

// What an adversary may look at besides the current state. It never sees
// future random bits.
struct History {
    std::optional<Vertex> last_pick;
    std::size_t selections = 0;
};

struct AdversaryView {
    const Graph& graph;
    const Coloring& coloring;
    std::span<const Vertex> conflicted;
    const History& history;
};

// Keeps hammering the previous pick while it is conflicted, then moves on
// to a fresh conflicted vertex (uniform or lowest id). Turns Decentralized
// Coloring into the persistent process.
Vertex mimic_persistent_pick(const AdversaryView& view, SelectionMode mode, Rng& rng);

// Conflicted vertex with the smallest expected one-step Phi change; ties by
// lowest id.
Vertex min_phi_drift_pick(const AdversaryView& view);

// Conflicted vertex with the most same-coloured neighbours; ties by lowest id.
Vertex max_conflicted_pick(const AdversaryView& view);

Vertex scripted_pick(const AdversaryView& view, std::span<const Vertex> script);

// Dispatches and checks that the answer is conflicted.
Vertex adversary_pick(const AdversaryStrategy& strategy, const AdversaryView& view, Rng& rng);

std::string describe(const AdversaryStrategy& strategy);

// K_{delta,delta} with every left vertex green (colour 1) and the right side
// coloured 1..delta, palette delta + 1. Exactly one right vertex (id delta)
// is conflicted and each left vertex has one free colour (delta + 1).
struct BadBipartiteStart {
    Graph graph;
    Coloring coloring;
};

BadBipartiteStart bad_bipartite_start(std::size_t delta);

}  // namespace dcolor
