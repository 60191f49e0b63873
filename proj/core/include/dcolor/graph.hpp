#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    enum class Kind { VertexOutOfRange, SelfLoop, DuplicateEdge, InvalidParameter, Parse };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Immutable undirected simple graph on vertices 0..n-1, stored as CSR with
// each neighbour list sorted ascending.
class Graph {
public:
    // Rejects out-of-range ids, self-loops and duplicate edges (in either
    // orientation) with distinct GraphError kinds.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    std::size_t max_degree() const noexcept { return max_degree_; }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], degree(v)};
    }

    bool adjacent(Vertex u, Vertex v) const noexcept;

    // Each edge once as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
    std::size_t max_degree_ = 0;
};

// Re-checks every structural invariant; throws std::logic_error naming the
// first violation. Used by tests against generator output.
void validate(const Graph& g);

// Text format: "n m" then m lines "u v" (0-indexed, u < v).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace dcolor
