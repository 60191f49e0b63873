#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

using Color = std::uint32_t;

// Assignment vertex -> colour in 1..D. D travels with the colouring because
// experiments may use a palette other than max_degree + 1.
class Coloring {
public:
    Coloring(std::vector<Color> colors, Color palette_size);

    // Every vertex the same colour.
    static Coloring uniform(std::size_t n, Color palette_size, Color color = 1);

    std::size_t size() const noexcept { return colors_.size(); }
    Color palette_size() const noexcept { return palette_size_; }
    Color operator[](Vertex v) const noexcept { return colors_[v]; }
    std::span<const Color> colors() const noexcept { return colors_; }

    void set(Vertex v, Color c);

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    Color palette_size_;
};

/// Each colour i.i.d. uniform on 1..D, drawn in vertex order from `rng`.
Coloring random_coloring(std::size_t n, Color palette_size, Rng& rng);

bool is_conflicted(const Graph& g, const Coloring& c, Vertex v);
std::vector<Vertex> conflicted_vertices(const Graph& g, const Coloring& c);
bool is_proper(const Graph& g, const Coloring& c);

// {1..D} minus the colours of v's neighbours; v's own colour is not removed.
std::vector<Color> free_colors(const Graph& g, const Coloring& c, Vertex v);

std::size_t conflicted_edge_count(const Graph& g, const Coloring& c);

// Phi: components of the subgraph keeping only monochromatic edges, counting
// singletons. Proper iff Phi == n.
std::size_t monochromatic_component_count(const Graph& g, const Coloring& c);

enum class PotentialKind { MonochromaticComponents, ConflictedEdges, ConflictedVertices };

std::size_t potential(PotentialKind kind, const Graph& g, const Coloring& c);
std::string_view to_string(PotentialKind kind) noexcept;

// Incrementally maintained conflict structure for hot loops. Owns its
// colouring; keeps per-vertex same-colour neighbour counts, the conflicted
// edge count and an O(1)-sample set of conflicted vertices. Must agree with
// the full recomputations above after any recolour sequence.
class ConflictTracker {
public:
    ConflictTracker(const Graph& g, Coloring c);

    const Coloring& coloring() const noexcept { return coloring_; }
    const Graph& graph() const noexcept { return *graph_; }

    // Conflicted vertices in internal (history-dependent) order.
    std::span<const Vertex> conflicted() const noexcept { return members_; }
    std::size_t conflicted_count() const noexcept { return members_.size(); }
    bool is_conflicted(Vertex v) const noexcept { return same_[v] > 0; }
    std::size_t same_color_neighbors(Vertex v) const noexcept { return same_[v]; }
    std::size_t conflicted_edges() const noexcept { return conflicted_edges_; }
    bool proper() const noexcept { return members_.empty(); }

    void recolor(Vertex v, Color color);

private:
    void refresh(Vertex v);

    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    const Graph* graph_;
    Coloring coloring_;
    std::vector<std::size_t> same_;
    std::vector<Vertex> members_;
    std::vector<std::size_t> position_;
    std::size_t conflicted_edges_ = 0;
};

// Local evaluation of Phi changes for single-vertex recolours of one fixed
// colouring. Construction labels all monochromatic components once.
class PhiProbe {
public:
    PhiProbe(const Graph& g, const Coloring& c);

    // Phi(c with v -> x) - Phi(c).
    long delta(Vertex v, Color x) const;

    // Sum over all D colours x of delta(v, x); the expected change is this
    // divided by D.
    long drift_numerator(Vertex v) const;

private:
    // Pieces v's component falls into once v is removed.
    std::size_t split_count(Vertex v) const;
    std::size_t distinct_neighbor_components(Vertex v, Color x) const;

    const Graph* graph_;
    const Coloring* coloring_;
    std::vector<std::size_t> label_;
};

// "D=<int> c0 c1 ... c{n-1}"
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);
Coloring load_coloring(const std::string& path);

}  // namespace dcolor
