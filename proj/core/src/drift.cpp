#include "dcolor/drift.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dcolor/generators.hpp"
#include "dcolor/oracle.hpp"

namespace dcolor {

std::vector<DriftSample> drift_samples(std::size_t count, std::size_t n_max, Color d_max,
                                       std::uint64_t seed) {
    if (n_max < 2 || d_max < 2) {
        throw std::invalid_argument("drift samples need n_max >= 2 and D_max >= 2");
    }
    Rng rng(seed);
    std::vector<DriftSample> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::size_t n = 2 + rng.uniform(n_max - 1);
        const auto d = static_cast<Color>(2 + rng.uniform(d_max - 1));
        const double p = 1.0 - rng.uniform01();
        Graph g = gen_bounded_degree(n, p, d - 1, rng);
        if (g.edge_count() == 0) {
            continue;
        }
        Coloring c = random_coloring(n, d, rng);
        while (is_proper(g, c)) {
            c = random_coloring(n, d, rng);
        }
        out.push_back(DriftSample{std::move(g), std::move(c),
                                  fmt::format("random#{}(n={},D={})", out.size(), n, d)});
    }
    return out;
}

namespace {

ExactValue phi_drift(const Graph& g, const Coloring& c, Vertex v, const PhiFunction& phi) {
    if (!phi) {
        return exact_expected_phi_delta(g, c, v);
    }
    const auto before = static_cast<long>(phi(g, c));
    Coloring next = c;
    long sum = 0;
    for (Color x = 1; x <= c.palette_size(); ++x) {
        next.set(v, x);
        sum += static_cast<long>(phi(g, next)) - before;
    }
    return ExactValue(sum, c.palette_size());
}

}  // namespace

DriftReport drift_check(const std::vector<DriftSample>& samples, bool include_fig2,
                        const PhiFunction& phi) {
    DriftReport report;
    bool first = true;

    auto check = [&](std::size_t index, const Graph& g, const Coloring& c, bool is_fig2) {
        const Color d = c.palette_size();
        const ExactValue floor(1, d);
        std::optional<ExactValue> sample_min;
        for (Vertex v : conflicted_vertices(g, c)) {
            const ExactValue drift = phi_drift(g, c, v, phi);
            const ExactValue edge = exact_expected_conflict_deltas(g, c, v).conflicted_edges;
            ++report.vertices_checked;
            const ExactValue scaled_phi = drift * ExactValue(static_cast<long>(d));
            const ExactValue scaled_edge = edge * ExactValue(static_cast<long>(d));
            if (first) {
                report.min_phi_drift = drift;
                report.min_scaled_phi_drift = scaled_phi;
                report.max_scaled_edge_drift = scaled_edge;
                first = false;
            } else {
                report.min_phi_drift = std::min(report.min_phi_drift, drift);
                report.min_scaled_phi_drift = std::min(report.min_scaled_phi_drift, scaled_phi);
                report.max_scaled_edge_drift = std::max(report.max_scaled_edge_drift, scaled_edge);
            }
            if (drift < floor) {
                report.violations.push_back({index, v, "phi", drift, d});
            }
            if (edge > -floor) {
                report.violations.push_back({index, v, "conflicted_edges", edge, d});
            }
            sample_min = sample_min ? std::min(*sample_min, drift) : drift;
        }
        if (is_fig2 && sample_min) {
            report.fig2_min_phi_drift = *sample_min;
            report.fig2_tight = *sample_min == floor;
        }
    };

    for (std::size_t i = 0; i < samples.size(); ++i) {
        check(i, samples[i].graph, samples[i].coloring, false);
    }
    report.samples = samples.size();
    if (include_fig2) {
        const Fig2Gadget gadget = gen_fig2_like();
        check(samples.size(), gadget.graph, gadget.coloring, true);
        report.fig2_included = true;
        ++report.samples;
    }
    report.vacuous = report.vertices_checked == 0;
    return report;
}

DriftReport drift_check(std::size_t count, std::size_t n_max, Color d_max, std::uint64_t seed,
                        bool include_fig2, const PhiFunction& phi) {
    return drift_check(drift_samples(count, n_max, d_max, seed), include_fig2, phi);
}

std::string format_drift_report(const DriftReport& r) {
    std::string out;
    out += fmt::format("samples: {}\nconflicted vertices checked: {}\n", r.samples, r.vertices_checked);
    if (r.vacuous) {
        out += "warning: no conflicted vertices examined; the check passes vacuously\n";
        return out;
    }
    out += fmt::format("min Phi drift: {}\n", r.min_phi_drift.to_string());
    out += fmt::format("min D * Phi drift: {} (claim >= 1)\n", r.min_scaled_phi_drift.to_string());
    out += fmt::format("max D * edge drift: {} (claim <= -1)\n", r.max_scaled_edge_drift.to_string());
    if (r.fig2_included) {
        out += fmt::format("fig2 min Phi drift: {}{}\n", r.fig2_min_phi_drift.to_string(),
                           r.fig2_tight ? " (tight: equals 1/D)" : "");
    }
    out += fmt::format("violations: {}\n", r.violations.size());
    for (const auto& v : r.violations) {
        out += fmt::format("  sample {} vertex {} {} drift {} with D={}\n", v.sample, v.vertex, v.potential,
                           v.drift.to_string(), v.palette);
    }
    return out;
}

}  // namespace dcolor
