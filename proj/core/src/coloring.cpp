#include "dcolor/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dcolor/union_find.hpp"

namespace dcolor {

Coloring::Coloring(std::vector<Color> colors, Color palette_size)
    : colors_(std::move(colors)), palette_size_(palette_size) {
    if (palette_size_ < 1) {
        throw std::invalid_argument("palette size must be at least 1");
    }
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1 || colors_[v] > palette_size_) {
            throw std::invalid_argument("colour " + std::to_string(colors_[v]) + " of vertex " +
                                        std::to_string(v) + " outside 1.." +
                                        std::to_string(palette_size_));
        }
    }
}

Coloring Coloring::uniform(std::size_t n, Color palette_size, Color color) {
    return Coloring(std::vector<Color>(n, color), palette_size);
}

void Coloring::set(Vertex v, Color c) {
    if (c < 1 || c > palette_size_) {
        throw std::out_of_range("colour " + std::to_string(c) + " outside palette");
    }
    colors_.at(v) = c;
}

Coloring random_coloring(std::size_t n, Color palette_size, Rng& rng) {
    if (palette_size < 1) {
        throw std::invalid_argument("palette size must be at least 1");
    }
    std::vector<Color> colors(n);
    for (auto& c : colors) {
        c = static_cast<Color>(rng.uniform(palette_size)) + 1;
    }
    return Coloring(std::move(colors), palette_size);
}

bool is_conflicted(const Graph& g, const Coloring& c, Vertex v) {
    const Color own = c[v];
    auto nb = g.neighbors(v);
    return std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return c[u] == own; });
}

std::vector<Vertex> conflicted_vertices(const Graph& g, const Coloring& c) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (is_conflicted(g, c, v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
    for (const auto& [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            return false;
        }
    }
    return true;
}

std::vector<Color> free_colors(const Graph& g, const Coloring& c, Vertex v) {
    std::vector<char> used(c.palette_size() + 1, 0);
    for (Vertex u : g.neighbors(v)) {
        used[c[u]] = 1;
    }
    std::vector<Color> out;
    for (Color x = 1; x <= c.palette_size(); ++x) {
        if (!used[x]) {
            out.push_back(x);
        }
    }
    return out;
}

std::size_t conflicted_edge_count(const Graph& g, const Coloring& c) {
    std::size_t count = 0;
    for (const auto& [u, v] : g.edges()) {
        count += c[u] == c[v] ? 1 : 0;
    }
    return count;
}

std::size_t monochromatic_component_count(const Graph& g, const Coloring& c) {
    UnionFind uf(g.size());
    for (const auto& [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            uf.unite(u, v);
        }
    }
    return uf.set_count();
}

std::size_t potential(PotentialKind kind, const Graph& g, const Coloring& c) {
    switch (kind) {
        case PotentialKind::MonochromaticComponents:
            return monochromatic_component_count(g, c);
        case PotentialKind::ConflictedEdges:
            return conflicted_edge_count(g, c);
        case PotentialKind::ConflictedVertices:
            return conflicted_vertices(g, c).size();
    }
    return 0;
}

std::string_view to_string(PotentialKind kind) noexcept {
    switch (kind) {
        case PotentialKind::MonochromaticComponents:
            return "monochromatic_components";
        case PotentialKind::ConflictedEdges:
            return "conflicted_edges";
        case PotentialKind::ConflictedVertices:
            return "conflicted_vertices";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// ConflictTracker

ConflictTracker::ConflictTracker(const Graph& g, Coloring c)
    : graph_(&g), coloring_(std::move(c)), same_(g.size(), 0), position_(g.size(), kAbsent) {
    if (coloring_.size() != g.size()) {
        throw std::invalid_argument("colouring length does not match graph size");
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            if (coloring_[u] == coloring_[v]) {
                ++same_[v];
            }
        }
        conflicted_edges_ += same_[v];
        refresh(v);
    }
    conflicted_edges_ /= 2;
}

void ConflictTracker::refresh(Vertex v) {
    const bool in = position_[v] != kAbsent;
    if (same_[v] > 0 && !in) {
        position_[v] = members_.size();
        members_.push_back(v);
    } else if (same_[v] == 0 && in) {
        const Vertex last = members_.back();
        members_[position_[v]] = last;
        position_[last] = position_[v];
        members_.pop_back();
        position_[v] = kAbsent;
    }
}

void ConflictTracker::recolor(Vertex v, Color color) {
    const Color old = coloring_[v];
    if (old == color) {
        return;
    }
    coloring_.set(v, color);
    for (Vertex u : graph_->neighbors(v)) {
        const Color cu = coloring_[u];
        if (cu == old) {
            --same_[u];
            --same_[v];
            --conflicted_edges_;
            refresh(u);
        } else if (cu == color) {
            ++same_[u];
            ++same_[v];
            ++conflicted_edges_;
            refresh(u);
        }
    }
    refresh(v);
}

// ---------------------------------------------------------------------------
// PhiProbe

PhiProbe::PhiProbe(const Graph& g, const Coloring& c) : graph_(&g), coloring_(&c), label_(g.size()) {
    UnionFind uf(g.size());
    for (const auto& [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            uf.unite(u, v);
        }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        label_[v] = uf.find(v);
    }
}

std::size_t PhiProbe::split_count(Vertex v) const {
    const Graph& g = *graph_;
    const Coloring& c = *coloring_;
    const Color own = c[v];
    std::vector<char> seen(g.size(), 0);
    seen[v] = 1;
    std::vector<Vertex> stack;
    std::size_t pieces = 0;
    for (Vertex start : g.neighbors(v)) {
        if (c[start] != own || seen[start]) {
            continue;
        }
        ++pieces;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (!seen[y] && c[y] == own) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return pieces;
}

std::size_t PhiProbe::distinct_neighbor_components(Vertex v, Color x) const {
    std::vector<std::size_t> labels;
    for (Vertex u : graph_->neighbors(v)) {
        if ((*coloring_)[u] == x) {
            labels.push_back(label_[u]);
        }
    }
    std::sort(labels.begin(), labels.end());
    return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

long PhiProbe::delta(Vertex v, Color x) const {
    const Color own = (*coloring_)[v];
    if (x == own) {
        return 0;
    }
    // Leaving: v's component (counted once) becomes split_count pieces.
    // Joining: v plus the q adjacent x-components merge into one.
    const auto split = static_cast<long>(split_count(v));
    const auto merged = static_cast<long>(distinct_neighbor_components(v, x));
    return split - merged;
}

long PhiProbe::drift_numerator(Vertex v) const {
    const Coloring& c = *coloring_;
    const Color own = c[v];
    const auto split = static_cast<long>(split_count(v));
    long total = 0;
    for (Color x = 1; x <= c.palette_size(); ++x) {
        if (x != own) {
            total += split - static_cast<long>(distinct_neighbor_components(v, x));
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Text format

Coloring read_coloring(std::istream& in) {
    std::string head;
    if (!(in >> head) || head.rfind("D=", 0) != 0) {
        throw std::invalid_argument("colouring must start with 'D=<palette size>'");
    }
    long long palette = 0;
    try {
        palette = std::stoll(head.substr(2));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed palette size '" + head + "'");
    }
    if (palette < 1) {
        throw std::invalid_argument("palette size must be at least 1");
    }
    std::vector<Color> colors;
    long long value = 0;
    while (in >> value) {
        if (value < 1 || value > palette) {
            throw std::invalid_argument("colour " + std::to_string(value) + " outside 1.." +
                                        std::to_string(palette));
        }
        colors.push_back(static_cast<Color>(value));
    }
    if (!in.eof()) {
        throw std::invalid_argument("non-numeric token in colouring");
    }
    return Coloring(std::move(colors), static_cast<Color>(palette));
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "D=" << c.palette_size();
    for (Color x : c.colors()) {
        out << ' ' << x;
    }
    out << '\n';
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open colouring file '" + path + "'");
    }
    return read_coloring(in);
}

}  // namespace dcolor
