#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dcolor/coloring.hpp"
#include "dcolor/exact.hpp"
#include "dcolor/graph.hpp"

namespace dcolor {

using PhiFunction = std::function<std::size_t(const Graph&, const Coloring&)>;

struct DriftSample {
    Graph graph;
    Coloring coloring;
    std::string label;
};

// Random (graph, invalid colouring) pairs: n uniform in 2..n_max, D uniform
// in 2..D_max, graph G(n, p) capped at max degree D - 1 with p uniform in
// (0, 1], colouring uniform and redrawn until some edge is monochromatic.
std::vector<DriftSample> drift_samples(std::size_t count, std::size_t n_max, Color d_max,
                                       std::uint64_t seed);

struct DriftViolation {
    std::size_t sample;
    Vertex vertex;
    std::string potential;  // "phi" or "conflicted_edges"
    ExactValue drift;
    Color palette;
};

struct DriftReport {
    std::size_t samples = 0;
    std::size_t vertices_checked = 0;
    bool vacuous = true;
    // Smallest observed expected Phi change, and the smallest D * drift
    // (>= 1 is the claim).
    ExactValue min_phi_drift;
    ExactValue min_scaled_phi_drift;
    // Largest observed D * (expected conflicted-edge change); <= -1 is the
    // claim.
    ExactValue max_scaled_edge_drift;
    std::vector<DriftViolation> violations;
    bool fig2_included = false;
    ExactValue fig2_min_phi_drift;
    bool fig2_tight = false;  // fig2 minimum equals 1/D exactly

    bool passed() const noexcept { return violations.empty(); }
};

// Checks, for every conflicted vertex of every sample, that the exact
// expected Phi change is >= 1/D and the exact expected conflicted-edge
// change is <= -1/D. The small gadget from gen_fig2_like is appended as a fixed sample when
// include_fig2 is set. phi defaults to monochromatic_component_count.
DriftReport drift_check(const std::vector<DriftSample>& samples, bool include_fig2 = true,
                        const PhiFunction& phi = {});

DriftReport drift_check(std::size_t count, std::size_t n_max, Color d_max, std::uint64_t seed,
                        bool include_fig2 = true, const PhiFunction& phi = {});

std::string format_drift_report(const DriftReport& report);

}  // namespace dcolor
